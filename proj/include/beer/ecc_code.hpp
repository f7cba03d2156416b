#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "beer/bitvec.hpp"

namespace beer {

// Behavior when a nonzero syndrome matches no column of H. Only reachable for
// shortened codes, where some syndrome values are unused.
enum class UnmatchedSyndrome {
    report, // flag the word as detected-uncorrectable
    ignore, // silently return the data bits unchanged
};

struct DecodeResult {
    BitVector dataword;                       // post-correction data bits (length k)
    BitVector syndrome;                       // length p
    std::optional<std::size_t> corrected_position; // codeword index of the flipped bit
    bool uncorrectable = false;               // set only under UnmatchedSyndrome::report
};

// Systematic single-error-correcting Hamming code in standard form.
// The parity-check matrix is H = [P | I_p]; codewords are laid out as
// [d_0 .. d_{k-1} | p_0 .. p_{p-1}].
class EccCode {
public:
    // Validates that H = [P | I] is single-error-correcting: every column of
    // P is non-zero with weight >= 2 (so it cannot collide with an identity
    // column) and all columns are pairwise distinct. Throws InvalidCodeError
    // naming the offending column(s).
    explicit EccCode(const BitMatrix& parity_part);

    std::size_t data_bits() const { return k_; }    // k
    std::size_t parity_bits() const { return p_; }  // p
    std::size_t codeword_bits() const { return n_; } // n = k + p

    const BitMatrix& parity_part() const { return parity_; } // P, p x k

    // Column of H for a codeword position, packed row-major into an integer
    // (bit r corresponds to parity row r). Positions >= k yield identity
    // columns.
    std::uint32_t column(std::size_t position) const {
        return position < k_ ? columns_[position]
                             : (std::uint32_t{1} << (position - k_));
    }

    // Maps a syndrome value to the codeword position whose column equals it,
    // or npos when no column matches (shortened codes only).
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t position_for_syndrome(std::uint32_t syndrome) const {
        return syndrome_table_[syndrome];
    }

    BitVector encode(const BitVector& dataword) const;
    std::uint32_t parity_word(const BitVector& dataword) const; // P * d, packed
    std::uint32_t syndrome_word(const BitVector& codeword) const; // H * c, packed

    DecodeResult decode(const BitVector& codeword,
                        UnmatchedSyndrome policy = UnmatchedSyndrome::report) const;

    bool operator==(const EccCode& other) const {
        return parity_ == other.parity_;
    }

private:
    std::size_t k_ = 0;
    std::size_t p_ = 0;
    std::size_t n_ = 0;
    BitMatrix parity_;                   // P, p x k
    std::vector<std::uint32_t> columns_; // packed columns of P
    std::vector<std::size_t> syndrome_table_; // 2^p entries -> position or npos
};

// Smallest p such that 2^p >= k + p + 1, i.e. enough distinct syndromes for
// every codeword position plus the zero syndrome.
std::size_t min_parity_bits(std::size_t k);

// Uniformly samples a code with k data bits: p = min_parity_bits(k) and the
// columns of P drawn without replacement from the weight->=2 syndromes.
// Deterministic per (k, seed).
EccCode sample_random_code(std::size_t k, std::uint64_t seed);

// Row-permutation canonical form: rows of P sorted so the sequence of rows,
// each read as a big-endian integer, is lexicographically minimal.
EccCode canonicalize(const EccCode& code);

// True when the codes differ only by a permutation of parity rows. Such codes
// produce identical miscorrection profiles.
bool codes_equivalent(const EccCode& a, const EccCode& b);

} // namespace beer
