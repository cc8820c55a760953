#pragma once

#include "momest/estimator.hpp"
#include "momest/exact.hpp"
#include "momest/instances.hpp"
#include "momest/types.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace momest {

/// Aggregate over repeated independent estimator trials. Success means
/// |value - S_t| <= eps * S_t against the exact oracle's S_t. Trials that
/// raise estimator errors count as failures and are tallied by kind; the
/// error statistics cover the completed trials.
struct TrialStats {
    std::string family;
    std::uint64_t n = 0;
    double t = 0.0;
    double eps = 0.0;
    double delta = 0.0;
    std::string profile;

    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double success_rate = 0.0;
    double mean_rel_error = 0.0;
    double max_rel_error = 0.0;
    BudgetBreakdown samples_per_trial;
    std::uint64_t wall_time_ns = 0;
    std::map<std::string, std::uint64_t> error_tally;
};

/// Runs `trials` independent estimate_moment calls, trial i seeded with
/// mix_seed(master_seed, i). Deterministic given (inst, params, trials,
/// master_seed) up to wall_time_ns.
TrialStats run_trials(const WeightedInstance& inst, const EstimatorParams& params,
                      std::uint64_t trials, std::uint64_t master_seed);

struct DistinguishabilityRow {
    std::string variant; // "light" | "heavy"
    double exact_hit_p = 0.0;
    double predicted_hit_rate = 0.0; // 1 - (1-p)^budget
    double empirical_hit_rate = 0.0;
};

struct DistinguishabilityReport {
    std::string family;
    std::uint64_t n = 0;
    double t = 0.0;
    double eps = 0.0;
    std::uint64_t budget = 0;
    std::uint64_t trials = 0;
    std::vector<DistinguishabilityRow> rows;
};

/// For each variant of the pair: per trial, draw `budget` proportional
/// samples and record whether any class element was hit. Reports the
/// empirical hit rate next to the exact per-sample p and the geometric
/// prediction 1-(1-p)^budget.
DistinguishabilityReport distinguishability_report(const LowerBoundPair& pair,
                                                   std::uint64_t budget,
                                                   std::uint64_t trials,
                                                   std::uint64_t master_seed);

// CSV emission. Header row always present; floats carry 17 significant
// digits so parse(serialize()) round-trips bit-exactly.
std::string to_csv(const std::vector<TrialStats>& rows);
std::string to_csv(const DistinguishabilityReport& report);
void write_report(const TrialStats& stats, const std::string& path);
void write_report(const std::vector<TrialStats>& rows, const std::string& path);
void write_report(const DistinguishabilityReport& report, const std::string& path);

/// One sweep grid: the cartesian product of the axes (n, t, eps, delta) over
/// a single synthetic family. Rows come out in axis order with wall_time_ns
/// zeroed, so sweep CSVs are byte-reproducible.
struct SweepSpec {
    std::string family = "uniform";
    double c = 1.0;
    double alpha = 2.0;
    std::uint64_t k = 1;
    double ratio = 2.0;

    std::vector<std::uint64_t> ns;
    std::vector<double> ts;
    std::vector<double> epss;
    std::vector<double> deltas;

    std::string profile = "test";
    std::uint64_t trials = 10;
    std::uint64_t master_seed = 0;
};

/// Parses the flat key=value sweep config (one axis per line, comma-separated
/// values; '#' starts a comment line).
SweepSpec parse_sweep_config(const std::string& text);

std::vector<TrialStats> run_sweep(const SweepSpec& spec);

} // namespace momest
