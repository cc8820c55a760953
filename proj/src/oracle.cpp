#include "momest/oracle.hpp"

#include "momest/exact.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace momest {

AliasTable::AliasTable(std::vector<std::pair<std::uint64_t, double>> entries) {
    const std::size_t k = entries.size();
    if (k == 0) return;

    CompensatedSum total;
    for (const auto& [idx, w] : entries) total.add(w);
    total_ = total.value();

    index_.resize(k);
    accept_.assign(k, 1.0);
    alias_.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        index_[i] = entries[i].first;
        alias_[i] = static_cast<std::uint32_t>(i); // self-alias until paired
    }

    // Vose's method over the scaled weights w * k / W.
    std::vector<double> scaled(k);
    for (std::size_t i = 0; i < k; ++i) {
        scaled[i] = entries[i].second * static_cast<double>(k) / total_;
    }
    std::vector<std::uint32_t> small, large;
    small.reserve(k);
    large.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
    }
    while (!small.empty() && !large.empty()) {
        const std::uint32_t s = small.back();
        small.pop_back();
        const std::uint32_t l = large.back();
        accept_[s] = scaled[s];
        alias_[s] = l;
        scaled[l] = (scaled[l] + scaled[s]) - 1.0;
        if (scaled[l] < 1.0) {
            large.pop_back();
            small.push_back(l);
        }
    }
    // Leftovers keep acceptance 1 (their alias is never taken).
    for (const std::uint32_t i : small) accept_[i] = 1.0;
    for (const std::uint32_t i : large) accept_[i] = 1.0;
}

std::uint64_t AliasTable::pick(Xoshiro256StarStar& rng) const {
    const std::uint64_t bucket = rng.next_below(index_.size());
    const double u = rng.next_double();
    const std::size_t chosen = (u < accept_[bucket]) ? bucket : alias_[bucket];
    return index_[chosen];
}

long double AliasTable::represented_probability(std::uint64_t global_index) const {
    const std::size_t k = index_.size();
    if (k == 0) return 0.0L;
    long double mass = 0.0L;
    for (std::size_t b = 0; b < k; ++b) {
        if (index_[b] == global_index) mass += static_cast<long double>(accept_[b]);
        if (alias_[b] != b && index_[alias_[b]] == global_index) {
            mass += 1.0L - static_cast<long double>(accept_[b]);
        }
    }
    return mass / static_cast<long double>(k);
}

namespace {

std::vector<std::pair<std::uint64_t, double>> positive_entries(
    const std::vector<double>& weights, std::uint64_t begin, std::uint64_t end) {
    std::vector<std::pair<std::uint64_t, double>> entries;
    for (std::uint64_t i = begin; i < end; ++i) {
        if (weights[i] > 0.0) entries.emplace_back(i, weights[i]);
    }
    return entries;
}

} // namespace

OracleHandle::OracleHandle(WeightedInstance inst, std::uint64_t seed,
                           std::uint64_t class_begin)
    : inst_(std::move(inst)), class_begin_(class_begin), rng_(seed) {
    validate_instance(inst_);
    if (class_begin_ > inst_.size()) {
        throw InvalidParams("class_begin exceeds instance size");
    }
    stratified_ = class_begin_ < inst_.size();

    base_ = AliasTable(positive_entries(inst_.weights, 0, class_begin_));
    tail_ = AliasTable(positive_entries(inst_.weights, class_begin_, inst_.size()));
    total_weight_ = base_.total_weight() + tail_.total_weight();
    if (!(total_weight_ > 0.0)) {
        throw ZeroTotalWeight("all weights are zero; proportional sampling is undefined");
    }
    if (tail_.empty()) {
        tail_fraction_ = 0.0;
    } else if (base_.empty()) {
        tail_fraction_ = 1.0;
    } else {
        tail_fraction_ = tail_.total_weight() / total_weight_;
    }
}

Sample OracleHandle::draw(DrawKind kind) {
    return kind == DrawKind::Proportional ? draw_proportional() : draw_uniform();
}

Sample OracleHandle::draw_proportional() {
    ++ledger_.proportional_count;
    std::uint64_t idx;
    if (stratified_) {
        // One stratum selector per draw keeps paired streams aligned.
        const double u = rng_.next_double();
        if (u < tail_fraction_) {
            ++class_draws_;
            idx = tail_.pick(rng_);
        } else {
            idx = base_.pick(rng_);
        }
    } else {
        idx = base_.pick(rng_);
    }
    return {idx, inst_.weights[idx]};
}

Sample OracleHandle::draw_uniform() {
    ++ledger_.uniform_count;
    const std::uint64_t idx = rng_.next_below(inst_.size());
    return {idx, inst_.weights[idx]};
}

long double OracleHandle::represented_probability(std::uint64_t index) const {
    if (index >= inst_.size()) return 0.0L;
    if (!stratified_) return base_.represented_probability(index);
    const long double tail_p = static_cast<long double>(tail_fraction_);
    if (index >= class_begin_) return tail_p * tail_.represented_probability(index);
    return (1.0L - tail_p) * base_.represented_probability(index);
}

OracleHandle build_oracle(const WeightedInstance& inst, std::uint64_t seed) {
    return OracleHandle(inst, seed, inst.size());
}

OracleHandle build_pair_oracle(const WeightedInstance& inst, std::uint64_t seed,
                               std::uint64_t class_begin) {
    return OracleHandle(inst, seed, class_begin);
}

} // namespace momest
