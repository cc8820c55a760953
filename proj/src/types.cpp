#include "momest/types.hpp"

#include <cmath>
#include <string>

namespace momest {

void validate_instance(const WeightedInstance& inst) {
    if (inst.weights.empty()) {
        throw EmptyInstance("instance has no elements");
    }
    for (std::size_t i = 0; i < inst.weights.size(); ++i) {
        const double w = inst.weights[i];
        if (!std::isfinite(w) || w < 0.0) {
            throw InvalidWeight("weight at index " + std::to_string(i) + " is " +
                                std::to_string(w) + "; weights must be finite and >= 0");
        }
    }
}

ConstantProfile ConstantProfile::custom(double sum_c, double inner_c, double outer_c) {
    if (!(sum_c > 0.0) || !(inner_c > 0.0) || !(outer_c > 0.0)) {
        throw InvalidParams("constant profile entries must all be > 0");
    }
    return {sum_c, inner_c, outer_c, "custom"};
}

EstimatorParams::EstimatorParams(double t_, double eps_, double delta_,
                                 std::optional<double> eps1_, ConstantProfile scale_,
                                 std::uint64_t seed_)
    : t(t_),
      eps(eps_),
      delta(delta_),
      eps1(eps1_.value_or(eps_ / 2.0)),
      scale(std::move(scale_)),
      seed(seed_) {
    if (!(std::isfinite(t) && t > 0.0)) {
        throw InvalidParams("t must be a finite real > 0");
    }
    if (!(eps > 0.0 && eps < 1.0)) {
        throw InvalidParams("eps must lie strictly in (0, 1)");
    }
    if (!(delta > 0.0 && delta < 1.0)) {
        throw InvalidParams("delta must lie strictly in (0, 1)");
    }
    if (!(eps1 > 0.0 && eps1 < 1.0)) {
        throw InvalidParams("eps1 must lie strictly in (0, 1)");
    }
    if (!(eps1 < eps)) {
        throw InvalidParams("eps1 must be < eps so the Chebyshev slack eps - eps1 is positive");
    }
    if (!(scale.sum_c > 0.0) || !(scale.inner_c > 0.0) || !(scale.outer_c > 0.0)) {
        throw InvalidParams("constant profile entries must all be > 0");
    }
}

} // namespace momest
