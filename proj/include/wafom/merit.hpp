// The weighted WAFOM merit W_u^n(P), computed three ways:
//   - a sum of 2^-mu_u(k) over the truncated dual net (reference route),
//   - the per-point product formula averaged over the net,
//   - the per-point formula with digit-chunk lookup tables.
// All three agree; the dual sum is the oracle the others are tested against.
#pragma once

#include <cstdint>
#include <vector>

#include "wafom/net.hpp"
#include "wafom/walsh.hpp"

namespace wafom {

// Sum of 2^-mu_u(k) over the nonzero truncated dual net, accumulated in
// descending mu order with compensated summation. Subject to the dual_net
// enumeration budget.
double wafom_dual_sum(const NetParams &params, const Weights &u);

// (1/N) sum_x prod_{j<=s} prod_{i<=digits} (1 + (-1)^zeta_{i,j} u_j 2^-(i+1)) - 1
// where zeta_{i,j} is digit i of coordinate j. `digits` may be below the
// point precision, in which case trailing digits are dropped.
double wafom_pointwise(const PointSet &points, const Weights &u,
                       unsigned digits);

// Lookup tables for the per-point product: for every coordinate and every
// chunk of digit positions, the partial product over all bit patterns of
// the chunk. Tables depend on u and must be rebuilt when u changes.
class WafomTables {
  public:
    WafomTables(const Weights &u, unsigned digits, unsigned chunk_bits);

    double evaluate(const PointSet &points) const;

    unsigned digits() const { return digits_; }
    unsigned chunk_bits() const { return chunk_bits_; }
    std::size_t chunk_count() const { return chunks_.size(); }
    // Table lookups (= multiplications) per point.
    std::size_t lookups_per_point() const { return s_ * chunks_.size(); }

  private:
    struct Chunk {
        unsigned shift; // digits - hi: right shift placing the chunk at bit 0
        std::uint64_t mask;
        std::size_t entries;
    };

    std::size_t s_;
    unsigned digits_;
    unsigned chunk_bits_;
    std::vector<Chunk> chunks_;
    std::vector<double> table_; // [j][chunk][pattern], flattened
};

// Convenience wrapper: build the tables and evaluate once.
double wafom_lookup(const PointSet &points, const Weights &u, unsigned digits,
                    unsigned chunk_bits);

} // namespace wafom
