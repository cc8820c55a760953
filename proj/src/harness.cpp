#include "momest/harness.hpp"

#include "momest/io.hpp"
#include "momest/oracle.hpp"
#include "momest/rng.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace momest {

TrialStats run_trials(const WeightedInstance& inst, const EstimatorParams& params,
                      std::uint64_t trials, std::uint64_t master_seed) {
    if (trials < 1) throw InvalidParams("trials must be >= 1");
    const double truth = exact_moment(inst, params.t);

    TrialStats stats;
    stats.family = inst.label.empty() ? "unlabeled" : inst.label;
    stats.n = inst.size();
    stats.t = params.t;
    stats.eps = params.eps;
    stats.delta = params.delta;
    stats.profile = params.scale.name;
    stats.trials = trials;
    stats.samples_per_trial = required_budget(params, inst.size());

    const auto started = std::chrono::steady_clock::now();
    CompensatedSum err_sum;
    double err_max = 0.0;
    std::uint64_t completed = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        OracleHandle handle = build_oracle(inst, mix_seed(master_seed, i));
        try {
            const EstimateReport report = estimate_moment(handle, params, inst.size());
            const double rel = std::abs(report.value - truth) / truth;
            err_sum.add(rel);
            err_max = std::max(err_max, rel);
            ++completed;
            if (rel <= params.eps) ++stats.successes;
        } catch (const Error& e) {
            ++stats.error_tally[e.kind()];
        }
    }
    const auto finished = std::chrono::steady_clock::now();

    stats.success_rate = static_cast<double>(stats.successes) / static_cast<double>(trials);
    stats.mean_rel_error = completed ? err_sum.value() / static_cast<double>(completed) : 0.0;
    stats.max_rel_error = err_max;
    stats.wall_time_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(finished - started).count());
    return stats;
}

DistinguishabilityReport distinguishability_report(const LowerBoundPair& pair,
                                                   std::uint64_t budget,
                                                   std::uint64_t trials,
                                                   std::uint64_t master_seed) {
    if (budget < 1) throw InvalidParams("budget must be >= 1");
    if (trials < 1) throw InvalidParams("trials must be >= 1");

    DistinguishabilityReport report;
    report.family = family_name(pair.family);
    report.n = pair.n;
    report.t = pair.t;
    report.eps = pair.eps;
    report.budget = budget;
    report.trials = trials;

    for (const PairVariant variant : {PairVariant::Light, PairVariant::Heavy}) {
        const WeightedInstance& inst =
            variant == PairVariant::Heavy ? pair.heavy : pair.light;
        const HitProbability hp = lb_hit_probability(pair, variant);

        std::uint64_t hit_trials = 0;
        for (std::uint64_t i = 0; i < trials; ++i) {
            OracleHandle handle =
                build_pair_oracle(inst, mix_seed(master_seed, i), pair.class_begin);
            for (std::uint64_t b = 0; b < budget; ++b) {
                handle.draw(DrawKind::Proportional);
            }
            if (handle.class_draws() > 0) ++hit_trials;
        }

        DistinguishabilityRow row;
        row.variant = variant == PairVariant::Heavy ? "heavy" : "light";
        row.exact_hit_p = hp.proportional;
        row.predicted_hit_rate =
            1.0 - std::pow(1.0 - hp.proportional, static_cast<double>(budget));
        row.empirical_hit_rate =
            static_cast<double>(hit_trials) / static_cast<double>(trials);
        report.rows.push_back(std::move(row));
    }
    return report;
}

namespace {

constexpr const char* kTrialHeader =
    "family,n,t,eps,delta,profile,trials,successes,success_rate,mean_rel_err,"
    "max_rel_err,samples_sum_stage,samples_inner,samples_outer,samples_total,"
    "wall_time_ns";

void append_row(std::string& out, const TrialStats& s) {
    out += s.family;
    out += ',' + std::to_string(s.n);
    out += ',' + format_g17(s.t);
    out += ',' + format_g17(s.eps);
    out += ',' + format_g17(s.delta);
    out += ',' + s.profile;
    out += ',' + std::to_string(s.trials);
    out += ',' + std::to_string(s.successes);
    out += ',' + format_g17(s.success_rate);
    out += ',' + format_g17(s.mean_rel_error);
    out += ',' + format_g17(s.max_rel_error);
    out += ',' + std::to_string(s.samples_per_trial.sum_stage);
    out += ',' + std::to_string(s.samples_per_trial.inner);
    out += ',' + std::to_string(s.samples_per_trial.outer);
    out += ',' + std::to_string(s.samples_per_trial.total);
    out += ',' + std::to_string(s.wall_time_ns);
    out += '\n';
}

void write_text(const std::string& text, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("write failure on '" + path + "'");
}

} // namespace

std::string to_csv(const std::vector<TrialStats>& rows) {
    std::string out = kTrialHeader;
    out += '\n';
    for (const TrialStats& s : rows) append_row(out, s);
    return out;
}

std::string to_csv(const DistinguishabilityReport& report) {
    std::string out =
        "family,n,t,eps,budget,trials,variant,exact_hit_p,predicted_hit_rate,"
        "empirical_hit_rate\n";
    for (const DistinguishabilityRow& row : report.rows) {
        out += report.family;
        out += ',' + std::to_string(report.n);
        out += ',' + format_g17(report.t);
        out += ',' + format_g17(report.eps);
        out += ',' + std::to_string(report.budget);
        out += ',' + std::to_string(report.trials);
        out += ',' + row.variant;
        out += ',' + format_g17(row.exact_hit_p);
        out += ',' + format_g17(row.predicted_hit_rate);
        out += ',' + format_g17(row.empirical_hit_rate);
        out += '\n';
    }
    return out;
}

void write_report(const TrialStats& stats, const std::string& path) {
    write_report(std::vector<TrialStats>{stats}, path);
}

void write_report(const std::vector<TrialStats>& rows, const std::string& path) {
    write_text(to_csv(rows), path);
}

void write_report(const DistinguishabilityReport& report, const std::string& path) {
    write_text(to_csv(report), path);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (const char c : s) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    std::size_t e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& token, const std::string& key) {
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (token.empty() || end != token.c_str() + token.size()) {
        throw InvalidParams("sweep config: bad numeric value '" + token + "' for key '" + key + "'");
    }
    return v;
}

std::uint64_t parse_count(const std::string& token, const std::string& key) {
    const double v = parse_double(token, key);
    if (v < 0 || v != std::floor(v)) {
        throw InvalidParams("sweep config: key '" + key + "' needs a non-negative integer, got '" +
                            token + "'");
    }
    return static_cast<std::uint64_t>(v);
}

} // namespace

SweepSpec parse_sweep_config(const std::string& text) {
    SweepSpec spec;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const std::string stripped = strip(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw InvalidParams("sweep config: expected key=value, got '" + stripped + "'");
        }
        const std::string key = strip(stripped.substr(0, eq));
        const std::string value = strip(stripped.substr(eq + 1));
        const std::vector<std::string> values = split(value, ',');

        auto single = [&]() -> const std::string& {
            if (values.size() != 1) {
                throw InvalidParams("sweep config: key '" + key + "' takes a single value");
            }
            return values.front();
        };

        if (key == "family") {
            spec.family = single();
        } else if (key == "profile") {
            spec.profile = single();
        } else if (key == "trials") {
            spec.trials = parse_count(single(), key);
        } else if (key == "seed") {
            spec.master_seed = parse_count(single(), key);
        } else if (key == "c") {
            spec.c = parse_double(single(), key);
        } else if (key == "alpha") {
            spec.alpha = parse_double(single(), key);
        } else if (key == "k") {
            spec.k = parse_count(single(), key);
        } else if (key == "ratio") {
            spec.ratio = parse_double(single(), key);
        } else if (key == "n") {
            spec.ns.clear();
            for (const auto& v : values) spec.ns.push_back(parse_count(strip(v), key));
        } else if (key == "t") {
            spec.ts.clear();
            for (const auto& v : values) spec.ts.push_back(parse_double(strip(v), key));
        } else if (key == "eps") {
            spec.epss.clear();
            for (const auto& v : values) spec.epss.push_back(parse_double(strip(v), key));
        } else if (key == "delta") {
            spec.deltas.clear();
            for (const auto& v : values) spec.deltas.push_back(parse_double(strip(v), key));
        } else {
            throw InvalidParams("sweep config: unknown key '" + key + "'");
        }
    }
    if (spec.ns.empty() || spec.ts.empty() || spec.epss.empty() || spec.deltas.empty()) {
        throw InvalidParams("sweep config: each of n, t, eps, delta needs at least one value");
    }
    if (spec.trials < 1) throw InvalidParams("sweep config: trials must be >= 1");
    return spec;
}

std::vector<TrialStats> run_sweep(const SweepSpec& spec) {
    SyntheticFamily family;
    if (spec.family == "uniform") {
        family = Uniform{spec.c};
    } else if (spec.family == "powerlaw") {
        family = PowerLaw{spec.alpha};
    } else if (spec.family == "fewheavy") {
        family = FewHeavy{spec.k, spec.ratio};
    } else {
        throw InvalidParams("sweep config: family must be uniform|powerlaw|fewheavy, got '" +
                            spec.family + "'");
    }

    ConstantProfile profile;
    if (spec.profile == "paper") {
        profile = ConstantProfile::paper();
    } else if (spec.profile == "test") {
        profile = ConstantProfile::test();
    } else {
        throw InvalidParams("sweep config: profile must be paper|test, got '" + spec.profile + "'");
    }

    std::vector<TrialStats> rows;
    std::uint64_t point = 0;
    for (const std::uint64_t n : spec.ns) {
        const WeightedInstance inst = gen_synthetic(n, family, spec.master_seed);
        for (const double t : spec.ts) {
            for (const double eps : spec.epss) {
                for (const double delta : spec.deltas) {
                    const EstimatorParams params(t, eps, delta, std::nullopt, profile,
                                                 spec.master_seed);
                    TrialStats stats =
                        run_trials(inst, params, spec.trials, mix_seed(spec.master_seed, point));
                    // Timing is excluded from sweep rows so the CSV bytes are
                    // reproducible for a fixed config and master seed.
                    stats.wall_time_ns = 0;
                    rows.push_back(std::move(stats));
                    ++point;
                }
            }
        }
    }
    return rows;
}

} // namespace momest
