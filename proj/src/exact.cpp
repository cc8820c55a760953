#include "momest/exact.hpp"

#include <cmath>
#include <string>

namespace momest {

double exact_sum(const WeightedInstance& inst) {
    CompensatedSum acc;
    for (const double w : inst.weights) acc.add(w);
    return acc.value();
}

double exact_moment(const WeightedInstance& inst, double t) {
    if (!(t > 0.0)) throw InvalidParams("exact_moment requires t > 0");
    if (t == 1.0) return exact_sum(inst);
    CompensatedSum acc;
    for (const double w : inst.weights) {
        if (w > 0.0) acc.add(std::pow(w, t));
    }
    return acc.value();
}

DensityReport moment_density_closed(const WeightedInstance& inst, double t) {
    if (!(t > 1.0)) {
        throw UnsupportedExponent(
            "closed-form moment density requires t > 1; use the brute-force oracle");
    }
    const double w_sum = exact_sum(inst);
    if (!(w_sum > 0.0)) {
        throw ZeroTotalWeight("moment density undefined: all weights are zero");
    }
    const double s_t = exact_moment(inst, t);

    // The subset ratio is a w-weighted average of w^(t-1), so for t > 1 the
    // max-weight singleton attains the maximum; L = A contributes exactly 1.
    double best = -1.0;
    std::uint64_t best_idx = 0;
    for (std::uint64_t i = 0; i < inst.size(); ++i) {
        const double w = inst.weights[i];
        if (!(w > 0.0)) continue;
        const double candidate = std::pow(w, t - 1.0) * w_sum / s_t;
        if (candidate > best) {
            best = candidate;
            best_idx = i;
        }
    }
    DensityReport report;
    report.rho = std::max(best, 1.0);
    report.argmax_element = best_idx;
    return report;
}

DensityReport moment_density_bruteforce(const WeightedInstance& inst, double t) {
    if (!(t > 0.0)) throw InvalidParams("moment density requires t > 0");
    const std::uint64_t n = inst.size();
    if (n > 20) {
        throw TooLarge("brute-force moment density enumerates 2^n subsets; n <= 20 required, got " +
                       std::to_string(n));
    }
    const double w_sum = exact_sum(inst);
    if (!(w_sum > 0.0)) {
        throw ZeroTotalWeight("moment density undefined: all weights are zero");
    }
    const double s_t = exact_moment(inst, t);

    std::vector<double> powed(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        powed[i] = inst.weights[i] > 0.0 ? std::pow(inst.weights[i], t) : 0.0;
    }

    double best = 0.0;
    std::uint64_t best_mask = 0;
    const std::uint64_t full = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
        double lw = 0.0, lwt = 0.0;
        for (std::uint64_t i = 0; i < n; ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                lw += inst.weights[i];
                lwt += powed[i];
            }
        }
        if (!(lw > 0.0)) continue;
        // L = A cancels algebraically to exactly 1.
        const double ratio = (mask == full - 1) ? 1.0 : (lwt / lw) * (w_sum / s_t);
        if (ratio > best) {
            best = ratio;
            best_mask = mask;
        }
    }
    DensityReport report;
    report.rho = best;
    std::vector<std::uint64_t> subset;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (best_mask & (std::uint64_t{1} << i)) subset.push_back(i);
    }
    report.argmax_subset = std::move(subset);
    return report;
}

HitProbability lb_hit_probability(const LowerBoundPair& pair, PairVariant variant) {
    const WeightedInstance& inst =
        (variant == PairVariant::Heavy) ? pair.heavy : pair.light;

    CompensatedSum class_mass;
    for (std::uint64_t i = pair.class_begin; i < inst.size(); ++i) {
        class_mass.add(inst.weights[i]);
    }
    const double w_sum = exact_sum(inst);

    HitProbability hp;
    hp.proportional = (w_sum > 0.0) ? class_mass.value() / w_sum : 0.0;
    hp.uniform = static_cast<double>(inst.size() - pair.class_begin) /
                 static_cast<double>(inst.size());

    const double n = static_cast<double>(pair.n);
    const double t = pair.t;
    const double eps = pair.eps;
    switch (pair.family) {
    case LowerBoundFamily::Proportional: {
        hp.closed_form_proportional = 1.0 / (1.0 + std::pow(n, 1.0 - 1.0 / t) / (eps * eps));
        hp.closed_form_uniform =
            1.0 / (1.0 + n / std::pow(eps, (2.0 * t - 1.0) / (t - 1.0)));
        break;
    }
    case LowerBoundFamily::Density: {
        const double e3 = 3.0 * eps;
        hp.closed_form_proportional =
            1.0 / (1.0 + std::pow(n, 1.0 - 1.0 / t) / (e3 * e3));
        hp.closed_form_uniform =
            1.0 / (1.0 + n / std::pow(e3, (2.0 * t - 1.0) / (t - 1.0)));
        break;
    }
    case LowerBoundFamily::SmallT: {
        const double light_mass = std::pow(eps, 1.0 / t);
        hp.closed_form_proportional = light_mass / (light_mass + (n - 1.0));
        hp.closed_form_uniform = (n - 1.0) / n;
        break;
    }
    }
    return hp;
}

} // namespace momest
