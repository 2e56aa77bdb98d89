// Bit-packed linear algebra over the two-element field.
//
// BitMatrix stores its entries column-major in 64-bit words: column c is a
// contiguous block of words with row r at bit (r mod 64) of word (r / 64).
// That makes a matrix-vector product on the right an XOR accumulation over
// selected columns, which is exactly the access pattern of digital-net
// point generation.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wafom/errors.hpp"
#include "wafom/rng.hpp"

namespace wafom {

class BitMatrix;

class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t len)
        : words_((len + 63) / 64, 0), len_(len) {}

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const {
        return (words_[i / 64] >> (i % 64)) & 1u;
    }

    void set(std::size_t i, bool v) {
        const std::uint64_t bit = std::uint64_t{1} << (i % 64);
        if (v)
            words_[i / 64] |= bit;
        else
            words_[i / 64] &= ~bit;
    }

    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    BitVector &operator^=(const BitVector &other);

    friend BitVector operator^(BitVector a, const BitVector &b) {
        a ^= b;
        return a;
    }

    bool operator==(const BitVector &) const = default;

    std::span<const std::uint64_t> words() const { return words_; }

  private:
    friend class BitMatrix;
    friend BitVector row_vec_mul(const BitVector &, const BitMatrix &);
    std::vector<std::uint64_t> words_;
    std::size_t len_ = 0;
};

class BitMatrix {
  public:
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    // Rows given as strings of '0'/'1'; all rows must share one length.
    static BitMatrix from_rows(const std::vector<std::string> &rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[c * wpc_ + r / 64] >> (r % 64)) & 1u;
    }

    void set(std::size_t r, std::size_t c, bool v) {
        const std::uint64_t bit = std::uint64_t{1} << (r % 64);
        if (v)
            data_[c * wpc_ + r / 64] |= bit;
        else
            data_[c * wpc_ + r / 64] &= ~bit;
    }

    std::span<const std::uint64_t> column_words(std::size_t c) const {
        return {data_.data() + c * wpc_, wpc_};
    }

    BitVector column(std::size_t c) const;

    std::size_t words_per_column() const { return wpc_; }

    bool operator==(const BitMatrix &) const = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t wpc_ = 0; // words per column
    std::vector<std::uint64_t> data_;
};

// Uniform random matrix with rows >= cols >= 1 (generating-matrix shape).
// Column c consumes words c*wpc .. (c+1)*wpc-1 of the stream, row r at bit
// (r mod 64) of word (r/64); bits above `rows` in the last word are dropped.
BitMatrix random_matrix(std::size_t rows, std::size_t cols, SplitMix64 &rng);
BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed);

// y = h * M^T over GF(2): y_i = sum_l h_l M[i][l]. Requires |h| = cols(M).
BitVector row_vec_mul(const BitVector &h, const BitMatrix &m);

// M^T v over GF(2), length cols(M). Requires |v| = rows(M).
BitVector transpose_mul_vec(const BitMatrix &m, const BitVector &v);

// Basis of {v : M v = 0}; size is cols(M) - rank(M).
std::vector<BitVector> kernel_basis(const BitMatrix &m);

std::size_t rank(const BitMatrix &m);

// Reverse the low `width` bits of v; bits at and above `width` are dropped.
std::uint64_t reverse_low_bits(std::uint64_t v, unsigned width);

} // namespace wafom
