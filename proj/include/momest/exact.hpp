#pragma once

#include "momest/instances.hpp"
#include "momest/types.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace momest {

/// Neumaier-compensated accumulator. Ground-truth sums go through this so
/// the exactness claims of the brute-force oracles hold at 1e-12 scale.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// W = sum of weights, compensated.
double exact_sum(const WeightedInstance& inst);

/// S_t = sum of w^t (convention 0^t = 0), compensated. t = 1 reduces to W.
/// Requires t > 0.
double exact_moment(const WeightedInstance& inst, double t);

/// Moment-density result. The closed form reports the arg-max element, the
/// brute force the arg-max subset.
struct DensityReport {
    double rho = 1.0;
    std::optional<std::uint64_t> argmax_element;
    std::optional<std::vector<std::uint64_t>> argmax_subset;
};

/// rho = max over positive-weight singletons of w^(t-1) * W / S_t, which
/// attains the subset maximum for t > 1: for any L, (sum_L w^t)/(sum_L w) is
/// a w-weighted average of w^(t-1) over L, so it is maximized by a max-weight
/// singleton, and L = A shows rho >= 1. Derived closed form; gated on the
/// brute-force oracle in the test suite. Requires t > 1.
DensityReport moment_density_closed(const WeightedInstance& inst, double t);

/// Exhaustive maximum over all nonempty subsets with positive weight sum.
/// Requires n <= 20 and t > 0.
DensityReport moment_density_bruteforce(const WeightedInstance& inst, double t);

enum class PairVariant { Light, Heavy };

/// Per-sample probability of drawing a class element, exact from the chosen
/// variant's weights, alongside the raw-parameter closed-form predictions of
/// the pair's family (reported for comparison; integerization can move the
/// exact value well away from the closed form).
struct HitProbability {
    double proportional = 0.0;
    double uniform = 0.0;
    double closed_form_proportional = 0.0;
    double closed_form_uniform = 0.0;
};

HitProbability lb_hit_probability(const LowerBoundPair& pair,
                                  PairVariant variant = PairVariant::Heavy);

} // namespace momest
