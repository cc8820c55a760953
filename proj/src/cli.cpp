#include "momest/cli.hpp"

#include "momest/estimator.hpp"
#include "momest/exact.hpp"
#include "momest/harness.hpp"
#include "momest/instances.hpp"
#include "momest/io.hpp"
#include "momest/oracle.hpp"
#include "momest/types.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace momest {

namespace {

bool is_pair_family(const std::string& family) {
    return family == "lb-prop" || family == "lb-density" || family == "lb-smallt";
}

LowerBoundPair make_pair(const std::string& family, std::uint64_t n, double t, double eps) {
    if (family == "lb-prop") return gen_lb_proportional(n, t, eps);
    if (family == "lb-density") return gen_lb_density(n, t, eps);
    return gen_lb_small_t(n, t, eps);
}

ConstantProfile profile_by_name(const std::string& name) {
    if (name == "paper") return ConstantProfile::paper();
    if (name == "test") return ConstantProfile::test();
    throw InvalidParams("profile must be paper|test, got '" + name + "'");
}

std::vector<std::string> split_paths(const std::string& out) {
    std::vector<std::string> paths;
    std::string current;
    for (const char c : out) {
        if (c == ',') {
            paths.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    paths.push_back(current);
    return paths;
}

struct GenOptions {
    std::string family;
    std::uint64_t n = 0;
    double t = 2.0;
    double eps = 0.1;
    std::uint64_t seed = 0;
    std::string out;
    bool force = false;
    double c = 1.0;
    double alpha = 2.0;
    std::uint64_t k = 1;
    double ratio = 100.0;
};

int cmd_gen(const GenOptions& opt) {
    const std::vector<std::string> paths = split_paths(opt.out);
    if (is_pair_family(opt.family)) {
        if (paths.size() != 2 || paths[0].empty() || paths[1].empty()) {
            throw InvalidParams("pair families write two files; pass --out LIGHT_PATH,HEAVY_PATH");
        }
        const LowerBoundPair pair = make_pair(opt.family, opt.n, opt.t, opt.eps);
        write_instance(pair.light, paths[0], opt.force);
        write_instance(pair.heavy, paths[1], opt.force);
        std::cout << "wrote " << opt.family << " pair n=" << opt.n
                  << " gap=" << format_g17(pair.analysis.gap_ratio) << " light=" << paths[0]
                  << " heavy=" << paths[1] << "\n";
        return 0;
    }

    if (paths.size() != 1 || paths[0].empty()) {
        throw InvalidParams("synthetic families write one file; pass --out PATH");
    }
    SyntheticFamily family;
    if (opt.family == "uniform") {
        family = Uniform{opt.c};
    } else if (opt.family == "powerlaw") {
        family = PowerLaw{opt.alpha};
    } else if (opt.family == "fewheavy") {
        family = FewHeavy{opt.k, opt.ratio};
    } else {
        throw InvalidParams(
            "family must be one of lb-prop|lb-density|lb-smallt|uniform|powerlaw|fewheavy");
    }
    const WeightedInstance inst = gen_synthetic(opt.n, family, opt.seed);
    write_instance(inst, paths[0], opt.force);
    std::cout << "wrote " << opt.family << " n=" << opt.n << " -> " << paths[0] << "\n";
    return 0;
}

struct ExactOptions {
    std::string in;
    double t = 2.0;
    std::string rho; // "", "closed", "brute"
};

int cmd_exact(const ExactOptions& opt) {
    const WeightedInstance inst = read_instance(opt.in);
    const double w = exact_sum(inst);
    const double st = exact_moment(inst, opt.t);
    std::cout << "W=" << format_g17(w) << " S_t=" << format_g17(st);
    if (!opt.rho.empty()) {
        DensityReport report;
        if (opt.rho == "closed") {
            report = moment_density_closed(inst, opt.t);
        } else if (opt.rho == "brute") {
            report = moment_density_bruteforce(inst, opt.t);
        } else {
            throw InvalidParams("--rho must be closed|brute");
        }
        std::cout << " rho=" << format_g17(report.rho);
    }
    std::cout << "\n";
    return 0;
}

struct EstimateOptions {
    std::string in;
    double t = 2.0;
    double eps = 0.1;
    double delta = 0.1;
    std::optional<double> eps1;
    std::string profile = "paper";
    std::uint64_t seed = 0;
};

int cmd_estimate(const EstimateOptions& opt) {
    const WeightedInstance inst = read_instance(opt.in);
    const EstimatorParams params(opt.t, opt.eps, opt.delta, opt.eps1,
                                 profile_by_name(opt.profile), opt.seed);
    OracleHandle handle = build_oracle(inst, opt.seed);
    const EstimateReport report = estimate_moment(handle, params, inst.size());
    std::cout << "value=" << format_g17(report.value);
    if (report.w_hat) std::cout << " w_hat=" << format_g17(*report.w_hat);
    std::cout << " samples_sum_stage=" << report.budget.sum_stage
              << " samples_inner=" << report.budget.inner
              << " samples_outer=" << report.budget.outer
              << " samples_total=" << report.budget.total << "\n";
    return 0;
}

struct SweepOptions {
    std::string config;
    std::string out;
};

int cmd_sweep(const SweepOptions& opt) {
    std::ifstream in(opt.config, std::ios::binary);
    if (!in) throw IoError("cannot open '" + opt.config + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    const SweepSpec spec = parse_sweep_config(buf.str());
    const std::vector<TrialStats> rows = run_sweep(spec);
    write_report(rows, opt.out);
    std::cout << "wrote " << rows.size() << " rows -> " << opt.out << "\n";
    return 0;
}

struct VerifyLbOptions {
    std::string family;
    std::uint64_t n = 0;
    double t = 2.0;
    double eps = 0.1;
    std::uint64_t budget = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

int cmd_verify_lb(const VerifyLbOptions& opt) {
    if (!is_pair_family(opt.family)) {
        throw InvalidParams("--family must be lb-prop|lb-density|lb-smallt");
    }
    const LowerBoundPair pair = make_pair(opt.family, opt.n, opt.t, opt.eps);
    const double gap_measured =
        exact_moment(pair.heavy, opt.t) / exact_moment(pair.light, opt.t);
    const HitProbability heavy_hp = lb_hit_probability(pair, PairVariant::Heavy);
    const HitProbability light_hp = lb_hit_probability(pair, PairVariant::Light);

    std::cout << "family=" << opt.family << " n=" << opt.n << " t=" << format_g17(opt.t)
              << " eps=" << format_g17(opt.eps)
              << " gap=" << format_g17(pair.analysis.gap_ratio)
              << " gap_measured=" << format_g17(gap_measured)
              << " p_prop=" << format_g17(heavy_hp.proportional)
              << " p_prop_closed=" << format_g17(heavy_hp.closed_form_proportional)
              << " p_unif=" << format_g17(heavy_hp.uniform)
              << " p_unif_closed=" << format_g17(heavy_hp.closed_form_uniform)
              << " p_prop_light=" << format_g17(light_hp.proportional);
    if (pair.family == LowerBoundFamily::Density) {
        std::cout << " rho_closed_heavy=" << format_g17(pair.analysis.rho_closed_heavy)
                  << " rho_closed_light=" << format_g17(pair.analysis.rho_closed_light);
    }
    std::cout << "\n";

    if (opt.budget > 0 || opt.trials > 0) {
        if (opt.budget == 0 || opt.trials == 0) {
            throw InvalidParams("--budget and --trials must be given together");
        }
        const DistinguishabilityReport report =
            distinguishability_report(pair, opt.budget, opt.trials, opt.seed);
        for (const DistinguishabilityRow& row : report.rows) {
            std::cout << "variant=" << row.variant
                      << " exact_hit_p=" << format_g17(row.exact_hit_p)
                      << " predicted_hit_rate=" << format_g17(row.predicted_hit_rate)
                      << " empirical_hit_rate=" << format_g17(row.empirical_hit_rate) << "\n";
        }
    }
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"weighted-sampling moment estimation toolkit"};
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate an instance or lower-bound pair");
    gen_cmd->add_option("--family", gen.family,
                        "lb-prop|lb-density|lb-smallt|uniform|powerlaw|fewheavy")
        ->required();
    gen_cmd->add_option("--n", gen.n, "instance size")->required();
    gen_cmd->add_option("--t", gen.t, "moment exponent (pair families)");
    gen_cmd->add_option("--eps", gen.eps, "accuracy parameter (pair families)");
    gen_cmd->add_option("--seed", gen.seed, "shuffle seed (synthetic families)");
    gen_cmd->add_option("--out", gen.out, "output path; pair families take PATH,PATH2")
        ->required();
    gen_cmd->add_flag("--force", gen.force, "overwrite existing files");
    gen_cmd->add_option("--c", gen.c, "uniform weight value");
    gen_cmd->add_option("--alpha", gen.alpha, "power-law exponent");
    gen_cmd->add_option("--k", gen.k, "fewheavy heavy-element count");
    gen_cmd->add_option("--ratio", gen.ratio, "fewheavy heavy/light weight ratio");

    ExactOptions exact;
    CLI::App* exact_cmd = app.add_subcommand("exact", "brute-force ground truth for an instance");
    exact_cmd->add_option("--in", exact.in, "instance file")->required();
    exact_cmd->add_option("--t", exact.t, "moment exponent")->required();
    exact_cmd->add_option("--rho", exact.rho, "also print moment density: closed|brute");

    EstimateOptions estimate;
    CLI::App* estimate_cmd = app.add_subcommand("estimate", "run the moment estimator");
    estimate_cmd->add_option("--in", estimate.in, "instance file")->required();
    estimate_cmd->add_option("--t", estimate.t, "moment exponent")->required();
    estimate_cmd->add_option("--eps", estimate.eps, "accuracy parameter")->required();
    estimate_cmd->add_option("--delta", estimate.delta, "failure probability")->required();
    double eps1_value = 0.0;
    CLI::Option* eps1_opt =
        estimate_cmd->add_option("--eps1", eps1_value, "sum-stage accuracy (default eps/2)");
    estimate_cmd->add_option("--profile", estimate.profile, "constant profile: paper|test");
    estimate_cmd->add_option("--seed", estimate.seed, "oracle seed");

    SweepOptions sweep;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "run a trial grid and write CSV");
    sweep_cmd->add_option("--config", sweep.config, "sweep config file")->required();
    sweep_cmd->add_option("--out", sweep.out, "output CSV path")->required();

    VerifyLbOptions verify;
    CLI::App* verify_cmd =
        app.add_subcommand("verify-lb", "exact analysis of a lower-bound pair");
    verify_cmd->add_option("--family", verify.family, "lb-prop|lb-density|lb-smallt")
        ->required();
    verify_cmd->add_option("--n", verify.n, "instance size")->required();
    verify_cmd->add_option("--t", verify.t, "moment exponent")->required();
    verify_cmd->add_option("--eps", verify.eps, "accuracy parameter")->required();
    verify_cmd->add_option("--budget", verify.budget, "draws per distinguishability trial");
    verify_cmd->add_option("--trials", verify.trials, "distinguishability trial count");
    verify_cmd->add_option("--seed", verify.seed, "master seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: Usage: " << e.what() << "\n";
        return 1;
    }

    try {
        if (app.got_subcommand(gen_cmd)) return cmd_gen(gen);
        if (app.got_subcommand(exact_cmd)) return cmd_exact(exact);
        if (app.got_subcommand(estimate_cmd)) {
            if (eps1_opt->count() > 0) estimate.eps1 = eps1_value;
            return cmd_estimate(estimate);
        }
        if (app.got_subcommand(sweep_cmd)) return cmd_sweep(sweep);
        if (app.got_subcommand(verify_cmd)) return cmd_verify_lb(verify);
        std::cerr << "error: Usage: no subcommand given\n";
        return 1;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvalidFamilyParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: Internal: " << e.what() << "\n";
        return 2;
    }
}

int run_cli(const std::vector<std::string>& args) {
    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.push_back("momest");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(storage.size());
    for (const std::string& s : storage) argv.push_back(s.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

} // namespace momest
