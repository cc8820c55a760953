#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace momest {

/// Base of the library's error taxonomy. `kind()` is the stable
/// machine-readable tag the CLI prints as `error: <kind>: <detail>`.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& detail)
        : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct InvalidWeight : Error {
    explicit InvalidWeight(const std::string& d) : Error("InvalidWeight", d) {}
};
struct EmptyInstance : Error {
    explicit EmptyInstance(const std::string& d) : Error("EmptyInstance", d) {}
};
struct ZeroTotalWeight : Error {
    explicit ZeroTotalWeight(const std::string& d) : Error("ZeroTotalWeight", d) {}
};
struct UnsupportedExponent : Error {
    explicit UnsupportedExponent(const std::string& d) : Error("UnsupportedExponent", d) {}
};
struct NoCollision : Error {
    explicit NoCollision(const std::string& d) : Error("NoCollision", d) {}
};
struct TooLarge : Error {
    explicit TooLarge(const std::string& d) : Error("TooLarge", d) {}
};
struct DegenerateParameters : Error {
    explicit DegenerateParameters(const std::string& d) : Error("DegenerateParameters", d) {}
};
struct InvalidFamilyParams : Error {
    explicit InvalidFamilyParams(const std::string& d) : Error("InvalidFamilyParams", d) {}
};
struct InvalidParams : Error {
    explicit InvalidParams(const std::string& d) : Error("InvalidParams", d) {}
};
struct IoError : Error {
    explicit IoError(const std::string& d) : Error("IoError", d) {}
};

/// A weighted set. Element identity is the index into `weights`.
/// Immutable by convention once built; cheap to share between trial workers.
struct WeightedInstance {
    std::vector<double> weights;
    std::string label;

    std::uint64_t size() const noexcept { return weights.size(); }
};

/// Throws InvalidWeight (reporting the first offending index) or
/// EmptyInstance. A valid instance has n >= 1 finite non-negative weights;
/// "at least one positive weight" is enforced at oracle build, not here.
void validate_instance(const WeightedInstance& inst);

/// Multiplicative constants of the estimator's budget formulas.
/// `paper()` is the full-guarantee set; `test()` trades guarantees for speed
/// at desk scale and is paired with relaxed success thresholds.
struct ConstantProfile {
    double sum_c;
    double inner_c;
    double outer_c;
    std::string name;

    static ConstantProfile paper() { return {480.0, 48.0, 48.0, "paper"}; }
    static ConstantProfile test() { return {10.0, 3.0, 9.0, "test"}; }
    static ConstantProfile custom(double sum_c, double inner_c, double outer_c);
};

/// Full parameter set of one estimation run. Construction validates ranges;
/// in particular eps1 < eps is required so the Chebyshev slack (eps - eps1)
/// stays positive. eps1 defaults to eps/2.
class EstimatorParams {
public:
    EstimatorParams(double t, double eps, double delta,
                    std::optional<double> eps1 = std::nullopt,
                    ConstantProfile scale = ConstantProfile::paper(),
                    std::uint64_t seed = 0);

    double t;
    double eps;
    double delta;
    double eps1;
    ConstantProfile scale;
    std::uint64_t seed;
};

/// Sample accounting of one estimator run: m draws for the sum stage plus
/// v batches of l draws each. total = sum_stage + inner * outer always.
struct BudgetBreakdown {
    std::uint64_t sum_stage = 0; // m
    std::uint64_t inner = 0;     // l
    std::uint64_t outer = 0;     // v
    std::uint64_t total = 0;

    friend bool operator==(const BudgetBreakdown&, const BudgetBreakdown&) = default;
};

/// Result of an estimation run. `w_hat` is the intermediate sum estimate;
/// it is absent when the run itself was a sum estimation (t = 1).
struct EstimateReport {
    double value = 0.0;
    std::uint64_t samples_proportional = 0;
    std::uint64_t samples_uniform = 0;
    std::optional<double> w_hat;
    BudgetBreakdown budget;
};

} // namespace momest
