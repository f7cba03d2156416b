#include "beer/ecc_code.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "beer/errors.hpp"
#include "beer/rng.hpp"

namespace beer {

namespace {

// Parity widths above this would need an oversized syndrome lookup table.
constexpr std::size_t kMaxParityBits = 20;

} // namespace

EccCode::EccCode(const BitMatrix& parity_part)
    : k_(parity_part.cols()), p_(parity_part.rows()), n_(k_ + p_), parity_(parity_part) {
    if (k_ == 0 || p_ == 0) {
        throw InvalidCodeError("code requires at least one data and one parity bit");
    }
    if (p_ > kMaxParityBits) {
        throw InvalidCodeError("parity width " + std::to_string(p_) + " exceeds supported maximum " +
                               std::to_string(kMaxParityBits));
    }
    if ((std::size_t{1} << p_) < n_ + 1) {
        throw InvalidCodeError("2^" + std::to_string(p_) + " syndromes cannot distinguish " +
                               std::to_string(n_) + " positions plus the error-free case");
    }
    columns_.resize(k_);
    for (std::size_t c = 0; c < k_; ++c) {
        std::uint32_t col = 0;
        for (std::size_t r = 0; r < p_; ++r) {
            if (parity_.get(r, c)) col |= std::uint32_t{1} << r;
        }
        if (std::popcount(col) < 2) {
            throw InvalidCodeError("column " + std::to_string(c) +
                                   " of the parity part has weight " +
                                   std::to_string(std::popcount(col)) +
                                   "; single-error correction requires weight >= 2");
        }
        columns_[c] = col;
    }
    syndrome_table_.assign(std::size_t{1} << p_, npos);
    for (std::size_t c = 0; c < k_; ++c) {
        if (syndrome_table_[columns_[c]] != npos) {
            throw InvalidCodeError("columns " + std::to_string(syndrome_table_[columns_[c]]) +
                                   " and " + std::to_string(c) +
                                   " of the parity part are identical");
        }
        syndrome_table_[columns_[c]] = c;
    }
    for (std::size_t r = 0; r < p_; ++r) {
        syndrome_table_[std::size_t{1} << r] = k_ + r;
    }
}

BitVector EccCode::encode(const BitVector& dataword) const {
    if (dataword.size() != k_) {
        throw DimensionError("encode: dataword has " + std::to_string(dataword.size()) +
                             " bits, expected " + std::to_string(k_));
    }
    BitVector c(n_);
    for (std::size_t i = 0; i < dataword.words().size(); ++i) {
        c.words()[i] = dataword.words()[i];
    }
    // Mask off any bits beyond k, then append parity.
    if (k_ % 64 != 0) {
        c.words()[k_ / 64] &= (std::uint64_t{1} << (k_ % 64)) - 1;
    }
    const std::uint32_t par = parity_word(dataword);
    for (std::size_t r = 0; r < p_; ++r) {
        c.set(k_ + r, (par >> r) & 1);
    }
    return c;
}

std::uint32_t EccCode::parity_word(const BitVector& dataword) const {
    std::uint32_t par = 0;
    for (std::size_t pos : dataword.set_positions()) {
        par ^= columns_[pos];
    }
    return par;
}

std::uint32_t EccCode::syndrome_word(const BitVector& codeword) const {
    std::uint32_t s = 0;
    for (std::size_t pos : codeword.set_positions()) {
        s ^= static_cast<std::uint32_t>(column(pos));
    }
    return s;
}

DecodeResult EccCode::decode(const BitVector& codeword, UnmatchedSyndrome policy) const {
    if (codeword.size() != n_) {
        throw DimensionError("decode: codeword has " + std::to_string(codeword.size()) +
                             " bits, expected " + std::to_string(n_));
    }
    const std::uint32_t s = syndrome_word(codeword);
    DecodeResult result;
    result.syndrome = BitVector(p_);
    for (std::size_t r = 0; r < p_; ++r) {
        result.syndrome.set(r, (s >> r) & 1);
    }
    result.dataword = BitVector(k_);
    for (std::size_t i = 0; i < k_; ++i) {
        result.dataword.set(i, codeword.get(i));
    }
    if (s == 0) {
        return result;
    }
    const std::size_t pos = syndrome_table_[s];
    if (pos == npos) {
        result.uncorrectable = (policy == UnmatchedSyndrome::report);
        return result;
    }
    result.corrected_position = pos;
    if (pos < k_) {
        result.dataword.flip(pos);
    }
    return result;
}

std::size_t min_parity_bits(std::size_t k) {
    if (k == 0) {
        throw ArgumentError("min_parity_bits: k must be positive");
    }
    std::size_t p = 1;
    while ((std::size_t{1} << p) < k + p + 1) ++p;
    return p;
}

EccCode sample_random_code(std::size_t k, std::uint64_t seed) {
    const std::size_t p = min_parity_bits(k);
    std::vector<std::uint32_t> candidates;
    for (std::uint32_t v = 1; v < (std::uint32_t{1} << p); ++v) {
        if (std::popcount(v) >= 2) candidates.push_back(v);
    }
    Rng rng = Rng::for_stream(seed, {0x636f6465ULL, k}); // "code"
    rng.shuffle(candidates.data(), candidates.size());
    BitMatrix parity(p, k);
    for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t r = 0; r < p; ++r) {
            parity.set(r, c, (candidates[c] >> r) & 1);
        }
    }
    return EccCode(parity);
}

namespace {

// Bit-string comparison with column 0 as the most significant bit, i.e. each
// row read as a big-endian integer.
bool row_less(const BitMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const bool x = m.get(a, c);
        const bool y = m.get(b, c);
        if (x != y) return !x;
    }
    return false;
}

} // namespace

EccCode canonicalize(const EccCode& code) {
    const BitMatrix& p = code.parity_part();
    std::vector<std::size_t> order(p.rows());
    for (std::size_t r = 0; r < p.rows(); ++r) order[r] = r;
    std::sort(order.begin(), order.end(),
              [&p](std::size_t a, std::size_t b) { return row_less(p, a, b); });
    BitMatrix sorted(p.rows(), p.cols());
    for (std::size_t r = 0; r < p.rows(); ++r) {
        for (std::size_t c = 0; c < p.cols(); ++c) {
            sorted.set(r, c, p.get(order[r], c));
        }
    }
    return EccCode(sorted);
}

bool codes_equivalent(const EccCode& a, const EccCode& b) {
    if (a.data_bits() != b.data_bits() || a.parity_bits() != b.parity_bits()) {
        return false;
    }
    return canonicalize(a) == canonicalize(b);
}

} // namespace beer
