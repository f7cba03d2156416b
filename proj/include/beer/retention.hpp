#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "beer/bitvec.hpp"
#include "beer/ecc_code.hpp"

namespace beer {

// Per-cell encoding convention. A true-cell stores logical 1 as CHARGED; an
// anti-cell stores logical 0 as CHARGED. Data-retention failures discharge a
// cell, so the failure direction in logical space depends on the polarity.
class CellPolarity {
public:
    CellPolarity() = default;
    explicit CellPolarity(BitVector anti_mask) : anti_(std::move(anti_mask)) {}

    static CellPolarity all_true(std::size_t n) { return CellPolarity(BitVector(n)); }
    static CellPolarity all_anti(std::size_t n) {
        BitVector m(n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, true);
        return CellPolarity(m);
    }

    std::size_t size() const { return anti_.size(); }
    bool is_anti(std::size_t i) const { return anti_.get(i); }
    const BitVector& anti_mask() const { return anti_; }

private:
    BitVector anti_; // 1 = anti-cell
};

// CHARGED mask for a stored codeword: bit i set iff cell i holds charge.
BitVector charge_states(const BitVector& codeword, const CellPolarity& polarity);

// Data-retention failure model. CHARGED cells discharge independently with
// the given probability; an optional mask restricts which positions are
// error-prone (all positions when absent). DISCHARGED cells never fail.
struct RetentionErrorModel {
    double failure_probability = 0.0;
    std::uint64_t seed = 0;
    std::optional<std::vector<std::size_t>> error_prone_positions;

    static RetentionErrorModel bernoulli(double probability, std::uint64_t seed) {
        return {probability, seed, std::nullopt};
    }
    // Every listed position fails whenever it is CHARGED.
    static RetentionErrorModel deterministic_mask(std::vector<std::size_t> positions) {
        return {1.0, 0, std::move(positions)};
    }
    // Listed positions fail with the given probability when CHARGED.
    static RetentionErrorModel masked_bernoulli(std::vector<std::size_t> positions,
                                                double probability, std::uint64_t seed) {
        return {probability, seed, std::move(positions)};
    }
};

// Post-correction read noise: each data bit of the decoded word flips
// independently with this probability on every read.
struct TransientNoiseModel {
    double flip_probability = 0.0;
};

// Applies retention failures to a stored codeword. Failures only discharge
// (CHARGED -> DISCHARGED): the logical value of a failed cell flips, but the
// direction in charge space is one-way. Deterministic per (seed, word_index).
BitVector inject_retention_errors(const BitVector& codeword, const CellPolarity& polarity,
                                  const RetentionErrorModel& model, std::uint64_t word_index);

// Full write -> decay -> correct -> read pipeline for one word. Returns the
// post-correction data bits, with transient read noise applied last.
BitVector simulate_read(const EccCode& code, const BitVector& dataword,
                        const CellPolarity& polarity, const RetentionErrorModel& model,
                        const TransientNoiseModel& noise, std::uint64_t word_index);

} // namespace beer
