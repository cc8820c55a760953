#include "momest/estimator.hpp"

#include "momest/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

namespace momest {

namespace {

// Real-arithmetic ceiling on a value assembled from a handful of double
// operations: a fractional part within a few ulp of zero is rounding noise
// on an intended integer, not a reason to charge one more sample.
std::uint64_t ceil_count(double x) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw InvalidParams("budget formula produced a non-finite count");
    }
    const double f = std::floor(x);
    const double frac = x - f;
    if (frac > 0.0 && frac <= 4.0 * std::numeric_limits<double>::epsilon() * x) {
        return static_cast<std::uint64_t>(f);
    }
    return static_cast<std::uint64_t>(std::ceil(x));
}

double power_term(double w, double t) {
    if (t == 2.0) return w;
    return std::pow(w, t - 1.0);
}

// The v batches of l draws; batch means combined by median. `w_hat` scales
// every term, so it is factored out of the batch accumulation.
double run_inner_stage(OracleHandle& handle, double t, std::uint64_t inner,
                       std::uint64_t outer, double w_hat) {
    std::vector<double> pow_cache(handle.size(), -1.0);
    std::vector<double> batch_means;
    batch_means.reserve(outer);
    for (std::uint64_t r = 0; r < outer; ++r) {
        CompensatedSum acc;
        for (std::uint64_t j = 0; j < inner; ++j) {
            const Sample s = handle.draw(DrawKind::Proportional);
            if (!(s.weight > 0.0)) {
                throw std::logic_error(
                    "oracle contract violation: proportional draw returned weight <= 0");
            }
            double& cached = pow_cache[s.index];
            if (cached < 0.0) cached = power_term(s.weight, t);
            acc.add(cached);
        }
        batch_means.push_back(w_hat * (acc.value() / static_cast<double>(inner)));
    }
    return median_of(std::move(batch_means));
}

} // namespace

double median_of(std::vector<double> values) {
    if (values.empty()) throw InvalidParams("median of an empty sequence");
    const std::size_t k = values.size();
    std::sort(values.begin(), values.end());
    if (k % 2 == 1) return values[k / 2];
    return (values[k / 2 - 1] + values[k / 2]) / 2.0;
}

BudgetBreakdown required_budget(const EstimatorParams& params, std::uint64_t n) {
    if (params.t <= 0.5) {
        throw UnsupportedExponent(
            "no sublinear estimator exists for t <= 1/2; use the exact oracle");
    }
    if (n < 1) throw InvalidParams("instance size must be >= 1");

    const double log_2_delta = std::log(2.0 / params.delta);
    BudgetBreakdown budget;
    budget.sum_stage = ceil_count(params.scale.sum_c * std::sqrt(static_cast<double>(n)) *
                                  log_2_delta / params.eps1);
    if (params.t != 1.0) {
        const double expo =
            params.t > 1.0 ? (1.0 - 1.0 / params.t) : (1.0 / params.t - 1.0);
        budget.inner = ceil_count(params.scale.inner_c *
                                  std::pow(static_cast<double>(n), expo) /
                                  (params.eps * params.eps));
        budget.outer = ceil_count(params.scale.outer_c * log_2_delta);
    }
    budget.total = budget.sum_stage + budget.inner * budget.outer;
    return budget;
}

SumEstimate estimate_sum(OracleHandle& handle, double eps1, double delta,
                         const ConstantProfile& scale) {
    if (!(eps1 > 0.0 && eps1 < 1.0)) throw InvalidParams("eps1 must lie in (0, 1)");
    if (!(delta > 0.0 && delta < 1.0)) throw InvalidParams("delta must lie in (0, 1)");
    if (!(scale.sum_c > 0.0) || !(scale.outer_c > 0.0)) {
        throw InvalidParams("constant profile entries must all be > 0");
    }

    const double log_2_delta = std::log(2.0 / delta);
    const std::uint64_t n = handle.size();
    const std::uint64_t m =
        ceil_count(scale.sum_c * std::sqrt(static_cast<double>(n)) * log_2_delta / eps1);
    const std::uint64_t batches = ceil_count(scale.outer_c * log_2_delta);

    std::vector<double> batch_estimates;
    batch_estimates.reserve(batches);
    std::unordered_map<std::uint64_t, std::uint64_t> counts;
    for (std::uint64_t b = 0; b < batches; ++b) {
        const std::uint64_t batch_size = m / batches + (b < m % batches ? 1 : 0);
        counts.clear();
        for (std::uint64_t j = 0; j < batch_size; ++j) {
            ++counts[handle.draw(DrawKind::Proportional).index];
        }
        CompensatedSum collision_sum;
        for (const auto& [idx, k] : counts) {
            if (k >= 2) {
                const double pairs = static_cast<double>(k) * static_cast<double>(k - 1) / 2.0;
                collision_sum.add(pairs / handle.instance().weights[idx]);
            }
        }
        const double denom = collision_sum.value();
        if (!(denom > 0.0)) {
            throw NoCollision("batch " + std::to_string(b) + " of " + std::to_string(batches) +
                              " (size " + std::to_string(batch_size) +
                              ") observed zero colliding pairs; the sum-stage budget is too "
                              "small for this instance");
        }
        const double total_pairs =
            static_cast<double>(batch_size) * static_cast<double>(batch_size - 1) / 2.0;
        batch_estimates.push_back(total_pairs / denom);
    }

    SumEstimate est;
    est.w_hat = median_of(std::move(batch_estimates));
    est.samples = m;
    est.batches = batches;
    return est;
}

EstimateReport estimate_moment(OracleHandle& handle, const EstimatorParams& params,
                               std::uint64_t n) {
    const BudgetBreakdown budget = required_budget(params, n);
    const auto [prop_before, unif_before] = handle.queries_used();

    EstimateReport report;
    report.budget = budget;
    const SumEstimate sum = estimate_sum(handle, params.eps1, params.delta, params.scale);
    if (params.t == 1.0) {
        report.value = sum.w_hat;
    } else {
        report.w_hat = sum.w_hat;
        report.value = run_inner_stage(handle, params.t, budget.inner, budget.outer, sum.w_hat);
    }
    if (!std::isfinite(report.value)) {
        throw Error("NonFiniteEstimate", "estimate overflowed to a non-finite value");
    }

    const auto [prop_after, unif_after] = handle.queries_used();
    report.samples_proportional = prop_after - prop_before;
    report.samples_uniform = unif_after - unif_before;
    return report;
}

EstimateReport estimate_moment_given_sum(OracleHandle& handle,
                                         const EstimatorParams& params,
                                         std::uint64_t n, double w_known) {
    if (params.t == 1.0) {
        throw InvalidParams("t = 1 with a known sum leaves nothing to sample");
    }
    if (!(w_known > 0.0)) throw InvalidParams("the plugged-in sum must be > 0");
    const BudgetBreakdown full = required_budget(params, n);
    const auto [prop_before, unif_before] = handle.queries_used();

    EstimateReport report;
    report.budget = BudgetBreakdown{0, full.inner, full.outer, full.inner * full.outer};
    report.w_hat = w_known;
    report.value = run_inner_stage(handle, params.t, full.inner, full.outer, w_known);
    if (!std::isfinite(report.value)) {
        throw Error("NonFiniteEstimate", "estimate overflowed to a non-finite value");
    }

    const auto [prop_after, unif_after] = handle.queries_used();
    report.samples_proportional = prop_after - prop_before;
    report.samples_uniform = unif_after - unif_before;
    return report;
}

double inner_term_expectation(const WeightedInstance& inst, double t, double w_plug) {
    if (!(t > 0.0)) throw InvalidParams("inner_term_expectation requires t > 0");
    const double w_sum = exact_sum(inst);
    if (!(w_sum > 0.0)) throw ZeroTotalWeight("expectation undefined: all weights are zero");
    CompensatedSum acc;
    for (const double w : inst.weights) {
        if (w > 0.0) acc.add((w / w_sum) * (w_plug * std::pow(w, t - 1.0)));
    }
    return acc.value();
}

} // namespace momest
