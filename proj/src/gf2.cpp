#include "wafom/gf2.hpp"

#include <bit>

namespace wafom {

namespace {

std::uint64_t low_mask(std::size_t nbits) {
    return nbits >= 64 ? ~std::uint64_t{0}
                       : (std::uint64_t{1} << nbits) - 1;
}

bool parity_of_and(std::span<const std::uint64_t> a,
                   std::span<const std::uint64_t> b) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc ^= a[i] & b[i];
    return std::popcount(acc) & 1u;
}

} // namespace

BitVector &BitVector::operator^=(const BitVector &other) {
    if (len_ != other.len_)
        throw DimensionError("BitVector xor: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpc_((rows + 63) / 64),
      data_(((rows + 63) / 64) * cols, 0) {
    if (rows == 0 || cols == 0)
        throw DimensionError("BitMatrix: rows and cols must be >= 1");
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string> &rows) {
    if (rows.empty() || rows.front().empty())
        throw DimensionError("BitMatrix::from_rows: empty input");
    BitMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols())
            throw DimensionError("BitMatrix::from_rows: ragged rows");
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const char ch = rows[r][c];
            if (ch != '0' && ch != '1')
                throw DomainError("BitMatrix::from_rows: entries must be 0 or 1");
            m.set(r, c, ch == '1');
        }
    }
    return m;
}

BitVector BitMatrix::column(std::size_t c) const {
    BitVector v(rows_);
    const auto w = column_words(c);
    for (std::size_t i = 0; i < w.size(); ++i) v.words_[i] = w[i];
    return v;
}

BitMatrix random_matrix(std::size_t rows, std::size_t cols, SplitMix64 &rng) {
    if (rows == 0 || cols == 0 || rows < cols)
        throw DimensionError("random_matrix: requires rows >= cols >= 1");
    BitMatrix m(rows, cols);
    const std::size_t wpc = m.words_per_column();
    const std::uint64_t last_mask = low_mask(rows - (wpc - 1) * 64);
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t w = 0; w < wpc; ++w) {
            std::uint64_t word = rng.next();
            if (w + 1 == wpc) word &= last_mask;
            for (std::size_t r = w * 64; r < rows && r < (w + 1) * 64; ++r)
                m.set(r, c, (word >> (r % 64)) & 1u);
        }
    }
    return m;
}

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return random_matrix(rows, cols, rng);
}

BitVector row_vec_mul(const BitVector &h, const BitMatrix &m) {
    if (h.size() != m.cols())
        throw DimensionError("row_vec_mul: |h| must equal cols(M)");
    BitVector y(m.rows());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!h.get(c)) continue;
        const auto cw = m.column_words(c);
        for (std::size_t i = 0; i < cw.size(); ++i) y.words_[i] ^= cw[i];
    }
    return y;
}

BitVector transpose_mul_vec(const BitMatrix &m, const BitVector &v) {
    if (v.size() != m.rows())
        throw DimensionError("transpose_mul_vec: |v| must equal rows(M)");
    BitVector out(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        out.set(c, parity_of_and(m.column_words(c), v.words()));
    return out;
}

namespace {

// Column elimination on a working copy of M while mirroring every column
// operation on an identity tracker. Columns of M that end up zero have
// their tracker column in the kernel.
struct Eliminated {
    std::vector<BitVector> mcols;   // columns of M, length rows
    std::vector<BitVector> tracker; // columns of I, length cols
    std::vector<bool> zeroed;
    std::size_t rank = 0;
};

Eliminated eliminate(const BitMatrix &m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Eliminated e;
    e.mcols.reserve(cols);
    e.tracker.reserve(cols);
    for (std::size_t c = 0; c < cols; ++c) {
        e.mcols.push_back(m.column(c));
        BitVector t(cols);
        t.set(c, true);
        e.tracker.push_back(std::move(t));
    }
    e.zeroed.assign(cols, false);
    std::vector<bool> row_used(rows, false);
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t pivot = rows;
        for (std::size_t r = 0; r < rows; ++r) {
            if (!row_used[r] && e.mcols[c].get(r)) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows) {
            e.zeroed[c] = true; // column is a combination of earlier pivots
            continue;
        }
        row_used[pivot] = true;
        ++e.rank;
        for (std::size_t c2 = c + 1; c2 < cols; ++c2) {
            if (e.mcols[c2].get(pivot)) {
                e.mcols[c2] ^= e.mcols[c];
                e.tracker[c2] ^= e.tracker[c];
            }
        }
    }
    return e;
}

} // namespace

std::vector<BitVector> kernel_basis(const BitMatrix &m) {
    Eliminated e = eliminate(m);
    std::vector<BitVector> basis;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (e.zeroed[c]) basis.push_back(std::move(e.tracker[c]));
    return basis;
}

std::size_t rank(const BitMatrix &m) { return eliminate(m).rank; }

std::uint64_t reverse_low_bits(std::uint64_t v, unsigned width) {
    std::uint64_t r = 0;
    for (unsigned b = 0; b < width; ++b) {
        r = (r << 1) | (v & 1u);
        v >>= 1;
    }
    return r;
}

} // namespace wafom
