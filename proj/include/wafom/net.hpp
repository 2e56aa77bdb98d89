// Digital nets over the two-element field: point-set construction from
// generating matrices and enumeration of the truncated dual net.
//
// Digit convention used throughout: digit i of a coordinate (i = 1 at the
// most significant fractional position, weight 2^-i) is stored at bit
// (n - i) of the packed integer y, so x = y / 2^n exactly. Digit i of a
// frequency component k sits at bit (i - 1), matching the dyadic expansion
// k = sum kappa_i 2^(i-1).
#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "wafom/gf2.hpp"

namespace wafom {

struct NetParams {
    std::size_t s; // dimension
    std::size_t n; // digit precision = matrix rows
    std::size_t m; // log2 of point count = matrix cols
    std::vector<BitMatrix> matrices;

    NetParams(std::size_t s, std::size_t n, std::size_t m,
              std::vector<BitMatrix> matrices);
};

struct Point {
    std::vector<std::uint64_t> coords; // coords[j] in [0, 2^n)
    unsigned digits;                   // n

    double coord_real(std::size_t j) const; // coords[j] / 2^n
};

class PointSet {
  public:
    PointSet(std::size_t s, unsigned digits, std::vector<std::uint64_t> flat);

    std::size_t size() const { return flat_.size() / s_; }
    std::size_t dimension() const { return s_; }
    unsigned digits() const { return digits_; }

    std::uint64_t coord(std::size_t h, std::size_t j) const {
        return flat_[h * s_ + j];
    }

    std::span<const std::uint64_t> row(std::size_t h) const {
        return {flat_.data() + h * s_, s_};
    }

    Point point(std::size_t h) const;

  private:
    std::size_t s_;
    unsigned digits_;
    std::vector<std::uint64_t> flat_; // N x s, row-major
};

struct MultiIndex {
    std::vector<std::uint64_t> components;

    bool operator==(const MultiIndex &) const = default;
};

// One generating-matrix set drawn from a single SplitMix64 stream,
// matrix j = 1..s in order; reproducible from the seed alone.
NetParams random_net(std::size_t s, std::size_t n, std::size_t m,
                     std::uint64_t seed);

// Point h built per the defining map: y_j = digits(h) * C_j^T.
PointSet generate_points(const NetParams &params);

// Same point set, walked in Gray-code order so that each step XORs a single
// matrix column per coordinate. Points land at their true index h, so the
// result compares equal to generate_points.
PointSet generate_points_graycode(const NetParams &params);

// Enumeration budget for the truncated dual net (kernel dimension in bits).
inline constexpr std::size_t kDualBudgetBits = 24;

// All k with k_j < 2^n and C_1^T vec(k_1) + ... + C_s^T vec(k_s) = 0,
// including k = 0. Enumerated from a kernel basis of the stacked m x (n*s)
// matrix, never by scanning 2^(n*s) indices. Throws BudgetError if the
// kernel dimension exceeds kDualBudgetBits.
std::vector<MultiIndex> dual_net(const NetParams &params);

// The stacked m x (n*s) matrix whose kernel is the truncated dual net.
BitMatrix stacked_dual_matrix(const NetParams &params);

// Net file format (text): line 1 "s n m"; then for each j, n lines of m
// characters '0'/'1' (row 1 first), one blank line between matrices.
void write_net(std::ostream &out, const NetParams &params);
void write_net_file(const std::filesystem::path &path, const NetParams &params);
NetParams read_net(std::istream &in);
NetParams read_net_file(const std::filesystem::path &path);

} // namespace wafom
