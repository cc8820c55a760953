#pragma once

#include "momest/types.hpp"

#include <cstdint>
#include <string>
#include <variant>

namespace momest {

enum class LowerBoundFamily { Proportional, Density, SmallT };

std::string family_name(LowerBoundFamily family);

/// Exact construction record of a generated pair. gap_ratio is the
/// constructed S_t(heavy)/S_t(light); counts and weights are the integerized
/// per-class parameters. rho_closed_* carry the Density family's raw-parameter
/// closed forms and are NaN elsewhere.
struct PairAnalysis {
    double gap_ratio = 1.0;
    std::uint64_t n1 = 0;
    std::uint64_t n2 = 0;
    double d1 = 0.0;
    double d2 = 0.0;
    double rho_closed_heavy = 0.0;
    double rho_closed_light = 0.0;
};

/// Two same-size instances that agree everywhere except the class suffix
/// [class_begin, n), where heavy carries the moment gap. Layout is heavy-last
/// so tests and coupled oracles can address the class deterministically.
struct LowerBoundPair {
    WeightedInstance light;
    WeightedInstance heavy;
    LowerBoundFamily family = LowerBoundFamily::Proportional;
    std::uint64_t n = 0;
    double t = 0.0;
    double eps = 0.0;
    PairAnalysis analysis;
    std::uint64_t class_begin = 0;
};

/// Proportional-sampling lower-bound family (t > 1): n1' elements of weight
/// d1 = n^(1-1/t) * eps^(1/(t-1)) plus a class of n2' = max(1, round(n2_raw))
/// elements weighing 0 (light) or d2' (heavy), where d2' re-solves
/// n2'*d2'^t = eps*n1'*d1^t so the gap is exactly 1+eps after integerization.
LowerBoundPair gen_lb_proportional(std::uint64_t n, double t, double eps);

/// Moment-density lower-bound family (t > 1, eps < 1/3): class weight scale
/// uses 3*eps; heavy has n2' class elements of weight d2', light keeps n2'/3
/// of them and zeroes the rest, so the gap is exactly (1+3eps)/(1+eps).
/// n2' is the nearest positive multiple of 3 (min 3).
LowerBoundPair gen_lb_density(std::uint64_t n, double t, double eps);

/// Small-exponent family (0 < t <= 1/2): one element of weight n-1 plus n-1
/// elements weighing 0 (light) or eps^(1/t)/(n-1) (heavy); the gap is
/// 1 + eps*(n-1)^(1-2t) >= 1+eps.
LowerBoundPair gen_lb_small_t(std::uint64_t n, double t, double eps);

struct Uniform {
    double c = 1.0;
};
struct PowerLaw {
    double alpha = 2.0;
};
struct FewHeavy {
    std::uint64_t k = 1;
    double ratio = 2.0;
};
using SyntheticFamily = std::variant<Uniform, PowerLaw, FewHeavy>;

std::string family_name(const SyntheticFamily& family);

/// Benchmark corpus generator. Uniform(c): all weights c. PowerLaw(alpha):
/// weight of element i is (i+1)^-alpha (max weight 1). FewHeavy(k, ratio):
/// k elements of weight `ratio`, the rest weight 1. The seed only shuffles
/// element order; the weight multiset is seed-independent.
WeightedInstance gen_synthetic(std::uint64_t n, const SyntheticFamily& family,
                               std::uint64_t seed);

} // namespace momest
