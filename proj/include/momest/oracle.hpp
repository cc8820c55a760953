#pragma once

#include "momest/rng.hpp"
#include "momest/types.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace momest {

enum class DrawKind { Proportional, Uniform };

struct Sample {
    std::uint64_t index;
    double weight;

    friend bool operator==(const Sample&, const Sample&) = default;
};

/// Exact per-handle draw accounting; the artifact's measure of sample
/// complexity. Incremented exactly once per draw call.
struct QueryLedger {
    std::uint64_t proportional_count = 0;
    std::uint64_t uniform_count = 0;
};

/// Vose alias table over the positive-weight entries handed to it.
/// O(n) build, O(1) pick. Zero-weight elements are excluded by the caller,
/// so they are structurally unreachable.
class AliasTable {
public:
    AliasTable() = default;
    explicit AliasTable(std::vector<std::pair<std::uint64_t, double>> entries);

    bool empty() const noexcept { return index_.empty(); }
    std::uint64_t entry_count() const noexcept { return index_.size(); }

    /// Global index of the picked element. Consumes one bounded integer and
    /// one uniform double from `rng`.
    std::uint64_t pick(Xoshiro256StarStar& rng) const;

    /// Compensated sum of the entry weights.
    double total_weight() const noexcept { return total_; }

    /// Probability the table assigns to `global_index`, reconstructed from
    /// the acceptance structure (enumerates buckets; test/diagnostic use).
    long double represented_probability(std::uint64_t global_index) const;

private:
    std::vector<std::uint64_t> index_;  // bucket -> global element index
    std::vector<double> accept_;        // bucket acceptance thresholds
    std::vector<std::uint32_t> alias_;  // bucket alias targets (local)
    double total_ = 0.0;
};

/// A sampling oracle over one instance: proportional and uniform draws on a
/// shared seeded stream, with exact query accounting. Handles are cheap to
/// build and must not be shared across concurrent workers (one per trial).
///
/// A handle may be built with a designated class suffix [class_begin, n).
/// Stratified handles burn one stratum-selector uniform per proportional
/// draw, so two handles over instances that agree outside the suffix and are
/// built with the same boundary and seed produce bit-identical draw streams
/// until a suffix element is drawn.
class OracleHandle {
public:
    OracleHandle(WeightedInstance inst, std::uint64_t seed, std::uint64_t class_begin);

    Sample draw(DrawKind kind);

    /// (proportional, uniform) draw counts since build.
    std::pair<std::uint64_t, std::uint64_t> queries_used() const noexcept {
        return {ledger_.proportional_count, ledger_.uniform_count};
    }
    const QueryLedger& ledger() const noexcept { return ledger_; }

    std::uint64_t size() const noexcept { return inst_.size(); }
    double total_weight() const noexcept { return total_weight_; }
    const WeightedInstance& instance() const noexcept { return inst_; }

    bool stratified() const noexcept { return stratified_; }
    std::uint64_t class_begin() const noexcept { return class_begin_; }
    /// Proportional draws that landed in the class suffix.
    std::uint64_t class_draws() const noexcept { return class_draws_; }

    /// Probability of element `index` under a proportional draw as actually
    /// represented by the sampler's internal structure.
    long double represented_probability(std::uint64_t index) const;

private:
    Sample draw_proportional();
    Sample draw_uniform();

    WeightedInstance inst_;
    AliasTable base_;
    AliasTable tail_;
    double total_weight_ = 0.0;
    double tail_fraction_ = 0.0;
    std::uint64_t class_begin_ = 0;
    bool stratified_ = false;
    std::uint64_t class_draws_ = 0;
    Xoshiro256StarStar rng_;
    QueryLedger ledger_;
};

/// Validates the instance, requires a positive total weight, and builds an
/// O(1)-per-draw sampler. Build cost is O(n) and is not counted as query
/// complexity. Throws ZeroTotalWeight when all weights are zero.
OracleHandle build_oracle(const WeightedInstance& inst, std::uint64_t seed);

/// Same, with the class suffix [class_begin, n) stratified for coupled
/// paired-instance experiments.
OracleHandle build_pair_oracle(const WeightedInstance& inst, std::uint64_t seed,
                               std::uint64_t class_begin);

} // namespace momest
