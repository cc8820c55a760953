#include "momest/instances.hpp"

#include "momest/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace momest {

std::string family_name(LowerBoundFamily family) {
    switch (family) {
    case LowerBoundFamily::Proportional: return "lb-prop";
    case LowerBoundFamily::Density: return "lb-density";
    case LowerBoundFamily::SmallT: return "lb-smallt";
    }
    return "lb-unknown";
}

std::string family_name(const SyntheticFamily& family) {
    if (std::holds_alternative<Uniform>(family)) return "uniform";
    if (std::holds_alternative<PowerLaw>(family)) return "powerlaw";
    return "fewheavy";
}

namespace {

void check_pair_inputs(std::uint64_t n, double eps) {
    if (n < 2) throw InvalidParams("lower-bound pairs need n >= 2");
    if (!(eps > 0.0 && eps < 1.0)) throw InvalidParams("eps must lie strictly in (0, 1)");
}

WeightedInstance labeled(std::vector<double> weights, std::string label) {
    WeightedInstance inst;
    inst.weights = std::move(weights);
    inst.label = std::move(label);
    return inst;
}

} // namespace

LowerBoundPair gen_lb_proportional(std::uint64_t n, double t, double eps) {
    check_pair_inputs(n, eps);
    if (!(t > 1.0)) {
        throw UnsupportedExponent("the proportional-sampling family requires t > 1");
    }

    const double nd = static_cast<double>(n);
    const double d1 = std::pow(nd, 1.0 - 1.0 / t) * std::pow(eps, 1.0 / (t - 1.0));
    const double eps_power = std::pow(eps, (2.0 * t - 1.0) / (t - 1.0));
    const double raw_n2 = nd * eps_power / (nd + eps_power);

    const std::uint64_t n2 = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(raw_n2)));
    if (n2 >= n) throw DegenerateParameters("class count n2 swallowed the instance");
    const std::uint64_t n1 = n - n2;

    // Re-solve the class weight so the integerized gap is exactly 1+eps.
    const double class_moment = eps * static_cast<double>(n1) * std::pow(d1, t);
    const double d2 = std::pow(class_moment / static_cast<double>(n2), 1.0 / t);

    std::vector<double> light(n, d1), heavy(n, d1);
    for (std::uint64_t i = n1; i < n; ++i) {
        light[i] = 0.0;
        heavy[i] = d2;
    }

    LowerBoundPair pair;
    pair.light = labeled(std::move(light), "lb-prop:light");
    pair.heavy = labeled(std::move(heavy), "lb-prop:heavy");
    pair.family = LowerBoundFamily::Proportional;
    pair.n = n;
    pair.t = t;
    pair.eps = eps;
    pair.class_begin = n1;
    pair.analysis = {1.0 + eps, n1, n2, d1, d2,
                     std::numeric_limits<double>::quiet_NaN(),
                     std::numeric_limits<double>::quiet_NaN()};
    return pair;
}

LowerBoundPair gen_lb_density(std::uint64_t n, double t, double eps) {
    check_pair_inputs(n, eps);
    if (!(t > 1.0)) throw UnsupportedExponent("the density family requires t > 1");
    if (!(eps < 1.0 / 3.0)) {
        throw InvalidParams("the density family needs eps < 1/3 so that 3*eps < 1");
    }

    const double nd = static_cast<double>(n);
    const double e3 = 3.0 * eps;
    const double d1 = std::pow(nd, 1.0 - 1.0 / t) * std::pow(e3, 1.0 / (t - 1.0));
    const double eps_power = std::pow(e3, (2.0 * t - 1.0) / (t - 1.0));
    const double raw_n2 = nd * eps_power / (nd + eps_power);

    const std::uint64_t n2 =
        3 * std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(raw_n2 / 3.0)));
    if (n2 >= n - n2) {
        throw DegenerateParameters("n too small: the class (n2 = " + std::to_string(n2) +
                                   ") would dominate the instance");
    }
    const std::uint64_t n1 = n - n2;

    // n2 * d2^t = 3*eps * n1 * d1^t makes the gap exactly (1+3eps)/(1+eps).
    const double class_moment = e3 * static_cast<double>(n1) * std::pow(d1, t);
    const double d2 = std::pow(class_moment / static_cast<double>(n2), 1.0 / t);

    std::vector<double> heavy(n, d1), light(n, d1);
    for (std::uint64_t i = n1; i < n; ++i) heavy[i] = d2;
    const std::uint64_t keep = n2 / 3;
    for (std::uint64_t i = n1; i < n; ++i) {
        light[i] = (i < n1 + keep) ? d2 : 0.0;
    }

    const double root = std::pow(nd, 1.0 - 1.0 / t);
    LowerBoundPair pair;
    pair.light = labeled(std::move(light), "lb-density:light");
    pair.heavy = labeled(std::move(heavy), "lb-density:heavy");
    pair.family = LowerBoundFamily::Density;
    pair.n = n;
    pair.t = t;
    pair.eps = eps;
    pair.class_begin = n1;
    pair.analysis = {(1.0 + 3.0 * eps) / (1.0 + eps), n1, n2, d1, d2,
                     (root + 9.0 * eps * eps) / (3.0 * eps + 9.0 * eps * eps),
                     (root + 3.0 * eps * eps) / (3.0 * eps + 3.0 * eps * eps)};
    return pair;
}

LowerBoundPair gen_lb_small_t(std::uint64_t n, double t, double eps) {
    check_pair_inputs(n, eps);
    if (!(t > 0.0)) throw InvalidParams("t must be > 0");
    if (t > 0.5) {
        throw UnsupportedExponent("the small-exponent family covers 0 < t <= 1/2 only");
    }

    const double big = static_cast<double>(n - 1);
    const double d2 = std::pow(eps, 1.0 / t) / big;

    std::vector<double> light(n, 0.0), heavy(n, d2);
    light[0] = big;
    heavy[0] = big;

    LowerBoundPair pair;
    pair.light = labeled(std::move(light), "lb-smallt:light");
    pair.heavy = labeled(std::move(heavy), "lb-smallt:heavy");
    pair.family = LowerBoundFamily::SmallT;
    pair.n = n;
    pair.t = t;
    pair.eps = eps;
    pair.class_begin = 1;
    pair.analysis = {1.0 + eps * std::pow(big, 1.0 - 2.0 * t), 1, n - 1, big, d2,
                     std::numeric_limits<double>::quiet_NaN(),
                     std::numeric_limits<double>::quiet_NaN()};
    return pair;
}

WeightedInstance gen_synthetic(std::uint64_t n, const SyntheticFamily& family,
                               std::uint64_t seed) {
    if (n < 1) throw InvalidFamilyParams("n must be >= 1");

    std::vector<double> weights(n);
    if (const auto* uniform = std::get_if<Uniform>(&family)) {
        if (!(uniform->c > 0.0)) throw InvalidFamilyParams("Uniform needs c > 0");
        std::fill(weights.begin(), weights.end(), uniform->c);
    } else if (const auto* power = std::get_if<PowerLaw>(&family)) {
        if (!(power->alpha > 1.0)) throw InvalidFamilyParams("PowerLaw needs alpha > 1");
        for (std::uint64_t i = 0; i < n; ++i) {
            weights[i] = std::pow(static_cast<double>(i + 1), -power->alpha);
        }
    } else {
        const auto& few = std::get<FewHeavy>(family);
        if (few.k < 1 || few.k > n) throw InvalidFamilyParams("FewHeavy needs 1 <= k <= n");
        if (!(few.ratio > 1.0)) throw InvalidFamilyParams("FewHeavy needs ratio > 1");
        for (std::uint64_t i = 0; i < n; ++i) {
            weights[i] = i < few.k ? few.ratio : 1.0;
        }
    }

    // The seed only shuffles element order (Fisher-Yates).
    Xoshiro256StarStar rng(seed);
    for (std::uint64_t i = n - 1; i > 0; --i) {
        const std::uint64_t j = rng.next_below(i + 1);
        std::swap(weights[i], weights[j]);
    }

    WeightedInstance inst;
    inst.weights = std::move(weights);
    inst.label = family_name(family);
    return inst;
}

} // namespace momest
