#pragma once

#include "momest/oracle.hpp"
#include "momest/types.hpp"

#include <cstdint>
#include <vector>

namespace momest {

/// Median of the values; the even case averages the two middle order
/// statistics. Permutation-invariant by construction.
double median_of(std::vector<double> values);

/// Result of the sum-estimation stage. `samples` equals the handle's ledger
/// delta for the call; `batches` is the median width.
struct SumEstimate {
    double w_hat = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t batches = 0;
};

/// Draw budget for an estimation run at instance size n, natural log, every
/// count ceiled:
///   m = ceil(sum_c * sqrt(n) * ln(2/delta) / eps1)
///   l = ceil(inner_c * n^(1-1/t) / eps^2)     for t > 1
///   l = ceil(inner_c * n^(1/t-1) / eps^2)     for 1/2 < t < 1
///   v = ceil(outer_c * ln(2/delta))
/// t = 1 delegates wholly to the sum stage ({m, 0, 0, m}). Throws
/// UnsupportedExponent for t <= 1/2: no sublinear budget exists there, use
/// the exact oracle instead.
BudgetBreakdown required_budget(const EstimatorParams& params, std::uint64_t n);

/// Collision-based sum estimator honoring an (eps1, delta) contract on the
/// budget m = ceil(sum_c * sqrt(n) * ln(2/delta) / eps1): the draws are split
/// into ceil(outer_c * ln(2/delta)) near-equal batches; a batch of size m_b
/// with per-element draw counts k_e estimates
///   W_b = C(m_b, 2) / sum_e C(k_e, 2) / w_e
/// and the batch estimates are combined by median. A batch with zero
/// colliding pairs throws NoCollision (budget too small for the instance);
/// this is surfaced, never patched over.
SumEstimate estimate_sum(OracleHandle& handle, double eps1, double delta,
                         const ConstantProfile& scale);

/// The moment estimator: runs the sum stage for W_hat, then v batches of l
/// proportional draws; batch r averages the terms X_j = W_hat * w(a_j)^(t-1)
/// (identical to w^t / p_j with p_j = w / W_hat) and the result is the median
/// of the batch means. n is the instance size the estimator is told; budgets
/// are functions of it. t = 1 returns the sum estimate directly. Throws
/// UnsupportedExponent for t <= 1/2 and propagates NoCollision.
EstimateReport estimate_moment(OracleHandle& handle, const EstimatorParams& params,
                               std::uint64_t n);

/// Test hook: the inner stage alone, with a known value plugged in for the
/// weight sum. Uses exactly inner * outer proportional draws. t = 1 is
/// rejected (there is nothing to sample once the sum is given).
EstimateReport estimate_moment_given_sum(OracleHandle& handle,
                                         const EstimatorParams& params,
                                         std::uint64_t n, double w_known);

/// Closed-form expectation of one inner-stage term under proportional
/// sampling with plug-in w_plug: sum over positive-weight elements of
/// (w/W) * w_plug * w^(t-1). With w_plug = W this equals S_t exactly (the
/// estimator is unbiased when the true sum is known).
double inner_term_expectation(const WeightedInstance& inst, double t, double w_plug);

} // namespace momest
