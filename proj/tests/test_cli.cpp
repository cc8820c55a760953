#include "momest/cli.hpp"
#include "momest/io.hpp"

#include "doctest.h"
#include "test_support.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace momest;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    std::streambuf* old_out = std::cout.rdbuf(out.rdbuf());
    std::streambuf* old_err = std::cerr.rdbuf(err.rdbuf());
    int code = -1;
    try {
        code = run_cli(args);
    } catch (...) {
        std::cout.rdbuf(old_out);
        std::cerr.rdbuf(old_err);
        throw;
    }
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("gen then exact on a unit-weight instance") {
    const auto path = (test::temp_dir() / "u.txt").string();
    std::filesystem::remove(path);

    const CliResult gen = run({"gen", "--family", "uniform", "--n", "4", "--t", "2",
                               "--eps", "0.1", "--out", path});
    CHECK(gen.code == 0);

    const CliResult exact = run({"exact", "--in", path, "--t", "2"});
    CHECK(exact.code == 0);
    CHECK(exact.out == "W=4 S_t=4\n");

    const CliResult rho = run({"exact", "--in", path, "--t", "2", "--rho", "closed"});
    CHECK(rho.code == 0);
    CHECK(rho.out == "W=4 S_t=4 rho=1\n");

    // gen output passes validation on re-read
    CHECK_NOTHROW(validate_instance(read_instance(path)));
}

TEST_CASE("estimate guards the unsupported exponent with exit code 2") {
    const auto path = (test::temp_dir() / "u2.txt").string();
    std::filesystem::remove(path);
    REQUIRE(run({"gen", "--family", "uniform", "--n", "4", "--out", path}).code == 0);

    const CliResult est = run({"estimate", "--in", path, "--t", "0.4", "--eps", "0.1",
                               "--delta", "0.1"});
    CHECK(est.code == 2);
    CHECK(est.err.rfind("error: UnsupportedExponent:", 0) == 0);
}

TEST_CASE("estimate prints the value and the budget breakdown") {
    const auto path = (test::temp_dir() / "u3.txt").string();
    std::filesystem::remove(path);
    REQUIRE(run({"gen", "--family", "uniform", "--n", "100", "--out", path}).code == 0);

    const CliResult est = run({"estimate", "--in", path, "--t", "2", "--eps", "0.2",
                               "--delta", "0.2", "--profile", "test", "--seed", "7"});
    CHECK(est.code == 0);
    CHECK(est.out.rfind("value=", 0) == 0);
    CHECK(est.out.find(" w_hat=") != std::string::npos);
    CHECK(est.out.find(" samples_sum_stage=") != std::string::npos);
    CHECK(est.out.find(" samples_total=") != std::string::npos);

    // Deterministic given --seed.
    const CliResult again = run({"estimate", "--in", path, "--t", "2", "--eps", "0.2",
                                 "--delta", "0.2", "--profile", "test", "--seed", "7"});
    CHECK(again.out == est.out);
}

TEST_CASE("pair families write two files and refuse accidental overwrite") {
    const auto light = (test::temp_dir() / "lb_light.txt").string();
    const auto heavy = (test::temp_dir() / "lb_heavy.txt").string();
    std::filesystem::remove(light);
    std::filesystem::remove(heavy);

    const CliResult gen = run({"gen", "--family", "lb-prop", "--n", "16", "--t", "2",
                               "--eps", "0.5", "--out", light + "," + heavy});
    CHECK(gen.code == 0);
    CHECK(std::filesystem::exists(light));
    CHECK(std::filesystem::exists(heavy));
    CHECK(read_instance(light).size() == 16);
    CHECK(read_instance(heavy).size() == 16);

    const CliResult again = run({"gen", "--family", "lb-prop", "--n", "16", "--t", "2",
                                 "--eps", "0.5", "--out", light + "," + heavy});
    CHECK(again.code == 3);
    CHECK(again.err.rfind("error: IoError:", 0) == 0);

    const CliResult forced = run({"gen", "--family", "lb-prop", "--n", "16", "--t", "2",
                                  "--eps", "0.5", "--out", light + "," + heavy, "--force"});
    CHECK(forced.code == 0);

    // A single path for a pair family is a usage error.
    const CliResult one_path = run({"gen", "--family", "lb-prop", "--n", "16", "--t", "2",
                                    "--eps", "0.5", "--out", light, "--force"});
    CHECK(one_path.code == 1);
}

TEST_CASE("verify-lb prints the gap and hit probabilities") {
    const CliResult res = run({"verify-lb", "--family", "lb-prop", "--n", "16", "--t", "2",
                               "--eps", "0.5"});
    CHECK(res.code == 0);
    CHECK(res.out.find("gap=1.5 ") != std::string::npos);
    CHECK(res.out.find("p_prop=0.154387") != std::string::npos);
    CHECK(res.out.find("p_prop_closed=0.058823529") != std::string::npos);

    const CliResult dist = run({"verify-lb", "--family", "lb-prop", "--n", "100", "--t", "2",
                                "--eps", "0.25", "--budget", "20", "--trials", "50",
                                "--seed", "3"});
    CHECK(dist.code == 0);
    CHECK(dist.out.find("variant=light") != std::string::npos);
    CHECK(dist.out.find("variant=heavy") != std::string::npos);
}

TEST_CASE("usage errors exit 1, I/O errors exit 3") {
    CHECK(run({"no-such-command"}).code == 1);
    CHECK(run({"gen", "--family", "uniform"}).code == 1); // missing required flags
    CHECK(run({"gen", "--family", "nonsense", "--n", "4", "--out",
               (test::temp_dir() / "x.txt").string(), "--force"})
              .code == 1);

    const CliResult missing = run({"exact", "--in", "/no/such/file.txt", "--t", "2"});
    CHECK(missing.code == 3);
    CHECK(missing.err.rfind("error: IoError:", 0) == 0);
}

TEST_CASE("sweep writes deterministic CSV bytes") {
    const auto cfg = (test::temp_dir() / "sweep.cfg").string();
    const auto out1 = (test::temp_dir() / "sweep1.csv").string();
    const auto out2 = (test::temp_dir() / "sweep2.csv").string();
    {
        std::ofstream f(cfg, std::ios::trunc);
        f << "family=uniform\nc=1\nn=50,100\nt=2\neps=0.3\ndelta=0.2\n"
             "profile=test\ntrials=3\nseed=21\n";
    }
    CHECK(run({"sweep", "--config", cfg, "--out", out1}).code == 0);
    CHECK(run({"sweep", "--config", cfg, "--out", out2}).code == 0);
    const std::string a = slurp(out1);
    CHECK(!a.empty());
    CHECK(a == slurp(out2));
    CHECK(a.rfind("family,", 0) == 0);

    CHECK(run({"sweep", "--config", "/no/such/config", "--out", out1}).code == 3);
    {
        std::ofstream f(cfg, std::ios::trunc);
        f << "family=uniform\n"; // missing axes
    }
    CHECK(run({"sweep", "--config", cfg, "--out", out1}).code == 1);
}

TEST_CASE("help exits 0") {
    CHECK(run({"--help"}).code == 0);
}
