#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace beer {

// Dense GF(2) vector, bit-packed into 64-bit words. The length is fixed at
// construction; individual bits are mutable.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size)
        : size_(size), words_((size + 63) / 64, 0) {}

    static BitVector from_bits(std::initializer_list<int> bits);
    static BitVector from_bools(const std::vector<bool>& bits);

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }

    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVector& operator^=(const BitVector& other);
    BitVector operator^(const BitVector& other) const;

    bool operator==(const BitVector& other) const = default;

    bool none() const;
    std::size_t popcount() const;
    std::vector<std::size_t> set_positions() const;

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

    std::string to_string() const;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Dense GF(2) matrix with bit-packed rows (row-major, fixed stride).
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + 63) / 64),
          words_(rows * stride_, 0) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (words_[r * stride_ + (c >> 6)] >> (c & 63)) & 1;
    }

    void set(std::size_t r, std::size_t c, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (c & 63);
        if (v) {
            words_[r * stride_ + (c >> 6)] |= mask;
        } else {
            words_[r * stride_ + (c >> 6)] &= ~mask;
        }
    }

    BitVector row(std::size_t r) const;
    void xor_row_into(std::size_t src, std::size_t dst); // dst ^= src
    void swap_rows(std::size_t a, std::size_t b);

    bool operator==(const BitMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> words_;

    friend BitVector mat_vec_mul(const BitMatrix& m, const BitVector& v);
    friend std::size_t rank(const BitMatrix& m);
    friend BitVector solve_linear(const BitMatrix& m, const BitVector& rhs);
};

// y = M * x over GF(2). Throws DimensionError when x.size() != M.cols().
BitVector mat_vec_mul(const BitMatrix& m, const BitVector& v);

// Rank by Gaussian elimination (first non-zero pivot per column). Exact.
std::size_t rank(const BitMatrix& m);

// Solves M * x = rhs for square, full-rank M. Throws SingularMatrixError when
// M is singular and DimensionError on shape mismatch.
BitVector solve_linear(const BitMatrix& m, const BitVector& rhs);

} // namespace beer
