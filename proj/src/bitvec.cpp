#include "beer/bitvec.hpp"

#include <bit>

#include "beer/errors.hpp"

namespace beer {

BitVector BitVector::from_bits(std::initializer_list<int> bits) {
    BitVector v(bits.size());
    std::size_t i = 0;
    for (int b : bits) {
        v.set(i++, b != 0);
    }
    return v;
}

BitVector BitVector::from_bools(const std::vector<bool>& bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        v.set(i, bits[i]);
    }
    return v;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (size_ != other.size_) {
        throw DimensionError("BitVector xor: size mismatch (" + std::to_string(size_) +
                             " vs " + std::to_string(other.size_) + ")");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

BitVector BitVector::operator^(const BitVector& other) const {
    BitVector out = *this;
    out ^= other;
    return out;
}

bool BitVector::none() const {
    for (std::uint64_t w : words_) {
        if (w != 0) return false;
    }
    return true;
}

std::size_t BitVector::popcount() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) {
        c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
}

std::vector<std::size_t> BitVector::set_positions() const {
    std::vector<std::size_t> out;
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w != 0) {
            const int bit = std::countr_zero(w);
            out.push_back(wi * 64 + static_cast<std::size_t>(bit));
            w &= w - 1;
        }
    }
    return out;
}

std::string BitVector::to_string() const {
    std::string s;
    s.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) {
        s.push_back(get(i) ? '1' : '0');
    }
    return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i, true);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    BitMatrix m(r, c);
    std::size_t ri = 0;
    for (const auto& row : rows) {
        if (row.size() != c) {
            throw DimensionError("BitMatrix::from_rows: ragged rows");
        }
        std::size_t ci = 0;
        for (int b : row) {
            m.set(ri, ci++, b != 0);
        }
        ++ri;
    }
    return m;
}

BitVector BitMatrix::row(std::size_t r) const {
    BitVector v(cols_);
    for (std::size_t w = 0; w < stride_; ++w) {
        v.words()[w] = words_[r * stride_ + w];
    }
    return v;
}

void BitMatrix::xor_row_into(std::size_t src, std::size_t dst) {
    for (std::size_t w = 0; w < stride_; ++w) {
        words_[dst * stride_ + w] ^= words_[src * stride_ + w];
    }
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t w = 0; w < stride_; ++w) {
        std::swap(words_[a * stride_ + w], words_[b * stride_ + w]);
    }
}

BitVector mat_vec_mul(const BitMatrix& m, const BitVector& v) {
    if (v.size() != m.cols_) {
        throw DimensionError("mat_vec_mul: vector size " + std::to_string(v.size()) +
                             " does not match matrix cols " + std::to_string(m.cols_));
    }
    BitVector out(m.rows_);
    for (std::size_t r = 0; r < m.rows_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < m.stride_; ++w) {
            acc ^= m.words_[r * m.stride_ + w] & v.words()[w];
        }
        out.set(r, (std::popcount(acc) & 1) != 0);
    }
    return out;
}

std::size_t rank(const BitMatrix& m) {
    BitMatrix work = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < work.cols_ && r < work.rows_; ++c) {
        std::size_t pivot = r;
        while (pivot < work.rows_ && !work.get(pivot, c)) ++pivot;
        if (pivot == work.rows_) continue;
        work.swap_rows(r, pivot);
        for (std::size_t i = 0; i < work.rows_; ++i) {
            if (i != r && work.get(i, c)) {
                work.xor_row_into(r, i);
            }
        }
        ++r;
    }
    return r;
}

BitVector solve_linear(const BitMatrix& m, const BitVector& rhs) {
    if (m.rows_ != m.cols_) {
        throw DimensionError("solve_linear: matrix must be square, got " +
                             std::to_string(m.rows_) + "x" + std::to_string(m.cols_));
    }
    if (rhs.size() != m.rows_) {
        throw DimensionError("solve_linear: rhs size " + std::to_string(rhs.size()) +
                             " does not match matrix rows " + std::to_string(m.rows_));
    }
    BitMatrix work = m;
    BitVector b = rhs;
    const std::size_t n = m.rows_;
    std::vector<std::size_t> pivot_row(n);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = r;
        while (pivot < n && !work.get(pivot, c)) ++pivot;
        if (pivot == n) {
            throw SingularMatrixError("solve_linear: matrix is singular (no pivot in column " +
                                      std::to_string(c) + ")");
        }
        work.swap_rows(r, pivot);
        if (pivot != r) {
            const bool t = b.get(r);
            b.set(r, b.get(pivot));
            b.set(pivot, t);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i != r && work.get(i, c)) {
                work.xor_row_into(r, i);
                b.set(i, b.get(i) ^ b.get(r));
            }
        }
        pivot_row[c] = r;
        ++r;
    }
    BitVector x(n);
    for (std::size_t c = 0; c < n; ++c) {
        x.set(c, b.get(pivot_row[c]));
    }
    return x;
}

} // namespace beer
