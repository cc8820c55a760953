#pragma once

#include "momest/rng.hpp"
#include "momest/types.hpp"

#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

namespace momest::test {

// Deterministic random instances for property loops. `zeros` sprinkles in
// zero weights, `shape` switches between uniform(0,1] and power-law-ish
// weight profiles.
inline WeightedInstance random_instance(std::uint64_t seed, std::uint64_t max_n,
                                        bool zeros = true) {
    Xoshiro256StarStar rng(seed);
    const std::uint64_t n = 1 + rng.next_below(max_n);
    const bool power_shape = rng.next_below(2) == 1;
    std::vector<double> weights(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        if (zeros && rng.next_below(8) == 0) {
            weights[i] = 0.0;
        } else if (power_shape) {
            weights[i] = std::pow(rng.next_double() + 1e-3, 3.0) * 10.0;
        } else {
            weights[i] = rng.next_double() + 1e-9;
        }
    }
    // Keep at least one positive weight so oracles can be built.
    if (weights[0] == 0.0) weights[0] = 0.5;
    WeightedInstance inst;
    inst.weights = std::move(weights);
    inst.label = "random";
    return inst;
}

inline std::filesystem::path temp_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "momest-tests";
    std::filesystem::create_directories(dir);
    return dir;
}

inline double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return 0.0;
    return std::abs(a - b) / scale;
}

} // namespace momest::test
