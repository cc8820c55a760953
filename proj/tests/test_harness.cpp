#include "momest/harness.hpp"
#include "momest/io.hpp"
#include "momest/rng.hpp"

#include "doctest.h"
#include "test_support.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

using namespace momest;

namespace {

TrialStats strip_time(TrialStats stats) {
    stats.wall_time_ns = 0;
    return stats;
}

bool same_stats(const TrialStats& a, const TrialStats& b) {
    return to_csv({strip_time(a)}) == to_csv({strip_time(b)}) &&
           a.error_tally == b.error_tally;
}

} // namespace

TEST_CASE("run_trials hits the success contract on the uniform instance") {
    const WeightedInstance inst = gen_synthetic(100, Uniform{1.0}, 0);
    const EstimatorParams params(2.0, 0.2, 0.1, std::nullopt, ConstantProfile::test(), 0);
    const TrialStats stats = run_trials(inst, params, 100, 12345);
    CHECK(stats.trials == 100);
    CHECK(stats.successes <= stats.trials);
    CHECK(stats.success_rate == doctest::Approx(stats.successes / 100.0));
    CHECK(stats.success_rate >= 0.9);
    CHECK(stats.samples_per_trial == required_budget(params, 100));
}

TEST_CASE("run_trials with a single trial") {
    const WeightedInstance inst = gen_synthetic(50, Uniform{2.0}, 1);
    const EstimatorParams params(2.0, 0.3, 0.2, std::nullopt, ConstantProfile::test(), 1);
    const TrialStats stats = run_trials(inst, params, 1, 7);
    CHECK(stats.trials == 1);
    CHECK((stats.success_rate == 0.0 || stats.success_rate == 1.0));
    CHECK_THROWS_AS(run_trials(inst, params, 0, 7), InvalidParams);
}

TEST_CASE("run_trials is deterministic given the master seed") {
    const WeightedInstance inst = gen_synthetic(200, PowerLaw{2.0}, 3);
    const EstimatorParams params(1.5, 0.25, 0.2, std::nullopt, ConstantProfile::test(), 3);
    const TrialStats a = run_trials(inst, params, 20, 555);
    const TrialStats b = run_trials(inst, params, 20, 555);
    CHECK(same_stats(a, b));
    const TrialStats c = run_trials(inst, params, 20, 556);
    CHECK_FALSE(same_stats(a, c));
}

TEST_CASE("estimator errors are tallied as failures") {
    // A starved sum stage on a large near-uniform instance rarely collides.
    const WeightedInstance inst = gen_synthetic(10'000, Uniform{1.0}, 4);
    const EstimatorParams params(2.0, 0.2, 0.1, std::nullopt,
                                 ConstantProfile::custom(0.01, 3.0, 0.5), 4);
    const TrialStats stats = run_trials(inst, params, 20, 99);
    CHECK(stats.error_tally.count("NoCollision") == 1);
    CHECK(stats.error_tally.at("NoCollision") > 0);
    CHECK(stats.successes + stats.error_tally.at("NoCollision") <= stats.trials);
}

TEST_CASE("median amplification: success rate non-decreasing in v") {
    // Fixed inner budget, v in {1, 9, 45} via the outer constant; the slack
    // is three-sigma-ish Monte-Carlo noise at 500 trials (significance 1e-3).
    const WeightedInstance inst = gen_synthetic(400, FewHeavy{1, 30.0}, 8);
    const std::uint64_t trials = 500;
    double rates[3] = {0.0, 0.0, 0.0};
    const double outer_c[3] = {0.2, 3.8, 19.5}; // v = 1, 9, 45 at delta = 0.2
    for (int i = 0; i < 3; ++i) {
        const EstimatorParams params(2.0, 0.15, 0.2, std::nullopt,
                                     ConstantProfile::custom(20.0, 0.207, outer_c[i]), 8);
        const BudgetBreakdown budget = required_budget(params, 400);
        CHECK(budget.outer == std::uint64_t{i == 0 ? 1u : (i == 1 ? 9u : 45u)});
        rates[i] = run_trials(inst, params, trials, 2468).success_rate;
    }
    const double slack = 3.29 * std::sqrt(2.0 * 0.25 / static_cast<double>(trials));
    CHECK(rates[1] >= rates[0] - slack);
    CHECK(rates[2] >= rates[1] - slack);
    CHECK(rates[2] >= rates[0]);
}

TEST_CASE("distinguishability report matches the geometric prediction") {
    const LowerBoundPair pair = gen_lb_proportional(10'000, 2.0, 0.1);
    const DistinguishabilityReport report = distinguishability_report(pair, 100, 1000, 31415);
    REQUIRE(report.rows.size() == 2);

    const DistinguishabilityRow& light = report.rows[0];
    CHECK(light.variant == "light");
    CHECK(light.exact_hit_p == 0.0);
    CHECK(light.predicted_hit_rate == 0.0);
    CHECK(light.empirical_hit_rate == 0.0); // no heavy elements exist

    const DistinguishabilityRow& heavy = report.rows[1];
    CHECK(heavy.variant == "heavy");
    CHECK(heavy.exact_hit_p == doctest::Approx(0.0031524663136268251).epsilon(1e-12));
    CHECK(heavy.predicted_hit_rate == doctest::Approx(0.27075430993372815).epsilon(1e-12));
    CHECK(std::abs(heavy.empirical_hit_rate - heavy.predicted_hit_rate) <= 0.02);

    CHECK_THROWS_AS(distinguishability_report(pair, 0, 10, 1), InvalidParams);
}

TEST_CASE("trial CSV schema and round-trip bytes") {
    const WeightedInstance inst = gen_synthetic(64, PowerLaw{2.0}, 5);
    const EstimatorParams params(2.0, 0.3, 0.2, std::nullopt, ConstantProfile::test(), 5);
    std::vector<TrialStats> rows;
    for (int i = 0; i < 3; ++i) rows.push_back(run_trials(inst, params, 5, 100 + i));

    const std::string csv = to_csv(rows);
    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    CHECK(header ==
          "family,n,t,eps,delta,profile,trials,successes,success_rate,mean_rel_err,"
          "max_rel_err,samples_sum_stage,samples_inner,samples_outer,samples_total,"
          "wall_time_ns");
    int data_lines = 0;
    std::string line;
    while (std::getline(lines, line)) {
        if (!line.empty()) ++data_lines;
    }
    CHECK(data_lines == 3);

    const auto path = (test::temp_dir() / "trials.csv").string();
    write_report(rows, path);
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == csv);

    CHECK_THROWS_AS(write_report(rows, "/nonexistent-dir/trials.csv"), IoError);
}

TEST_CASE("distinguishability CSV schema") {
    const LowerBoundPair pair = gen_lb_proportional(100, 2.0, 0.25);
    const DistinguishabilityReport report = distinguishability_report(pair, 10, 50, 7);
    const std::string csv = to_csv(report);
    CHECK(csv.rfind("family,n,t,eps,budget,trials,variant,exact_hit_p,predicted_hit_rate,"
                    "empirical_hit_rate\n",
                    0) == 0);
    CHECK(csv.find("lb-prop,100,") != std::string::npos);
    CHECK(csv.find(",light,") != std::string::npos);
    CHECK(csv.find(",heavy,") != std::string::npos);
}

TEST_CASE("sweep config parsing") {
    const SweepSpec spec = parse_sweep_config(
        "# comment\n"
        "family=powerlaw\n"
        "alpha=2\n"
        "n=100,200\n"
        "t=1.5,2\n"
        "eps=0.3\n"
        "delta=0.2\n"
        "profile=test\n"
        "trials=4\n"
        "seed=11\n");
    CHECK(spec.family == "powerlaw");
    CHECK(spec.ns == std::vector<std::uint64_t>{100, 200});
    CHECK(spec.ts == std::vector<double>{1.5, 2.0});
    CHECK(spec.trials == 4);
    CHECK(spec.master_seed == 11);

    CHECK_THROWS_AS(parse_sweep_config("nonsense\n"), InvalidParams);
    CHECK_THROWS_AS(parse_sweep_config("unknown_key=3\nn=1\nt=2\neps=0.1\ndelta=0.1\n"),
                    InvalidParams);
    CHECK_THROWS_AS(parse_sweep_config("family=powerlaw\n"), InvalidParams);
}

TEST_CASE("sweep rows are byte-reproducible and grid-ordered") {
    SweepSpec spec;
    spec.family = "powerlaw";
    spec.alpha = 2.0;
    spec.ns = {100, 200};
    spec.ts = {2.0};
    spec.epss = {0.3};
    spec.deltas = {0.2};
    spec.profile = "test";
    spec.trials = 4;
    spec.master_seed = 99;

    const std::string a = to_csv(run_sweep(spec));
    const std::string b = to_csv(run_sweep(spec));
    CHECK(a == b);
    CHECK(a.find("wall_time_ns") != std::string::npos);
    // zeroed timing column: every data row ends in ",0"
    std::istringstream lines(a);
    std::string line;
    std::getline(lines, line); // header
    int rows = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        CHECK(line.substr(line.size() - 2) == ",0");
        ++rows;
    }
    CHECK(rows == 2);
}
