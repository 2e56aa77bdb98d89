// Dyadic Walsh functions, the weighted digit functional mu_u, closed-form
// Walsh coefficients of exponential functions, and per-index bounds on them.
#pragma once

#include <cstdint>
#include <vector>

#include "wafom/net.hpp"

namespace wafom {

// Positive per-coordinate weights u_1..u_s of the function space.
class Weights {
  public:
    explicit Weights(std::vector<double> u);
    static Weights uniform(std::size_t s, double value);

    std::size_t size() const { return u_.size(); }
    double operator[](std::size_t j) const { return u_[j]; }
    const std::vector<double> &values() const { return u_; }

  private:
    std::vector<double> u_;
};

// wal_k(x) in {-1, +1}: the product over coordinates of parities of the
// x-digits selected by the digits of k.
int walsh_function(const MultiIndex &k, const Point &x);

// mu_u(k) = sum_j sum_i (i + 1 - lg u_j) kappa_{i,j}; zero for k = 0.
double mu_weight(const MultiIndex &k, const Weights &u);

// 2^(-mu_u(k)), evaluated as the product of the exact dyadic factors
// u_j * 2^-(i+1) over set digits rather than through lg and exp2.
double two_pow_neg_mu(const MultiIndex &k, const Weights &u);

// k-th Walsh coefficient of x -> exp(a x) on [0,1), in closed form:
// with w the highest set digit position of k (w = 0 for k = 0),
//   (exp(a 2^-w) - 1)/a * prod_{i<=w} (1 + (-1)^kappa_i exp(a 2^-i)).
// Throws DomainError for a = 0.
double walsh_coeff_exp_1d(double a, std::uint64_t k);

// Walsh coefficient of exp(-sum_j u_j x_j): the product of the coordinate
// coefficients. Requires |k| = |u|.
double walsh_coeff_exp_multi(const Weights &u, const MultiIndex &k);

// Budget for the independent quadrature oracle below (pieces = 2^w).
inline constexpr std::uint64_t kNumericCoeffBudget = std::uint64_t{1} << 20;

// Independent oracle: integrates exp(a x) wal_k(x) exactly over each of the
// 2^w dyadic subintervals on which wal_k is constant, then sums. Throws
// BudgetError for k >= 2^20.
double walsh_coeff_numeric(double a, std::uint64_t k);

struct CoeffBounds {
    double lower;
    double upper;
};

// [B_u 2^-mu_u(k), A_u 2^-mu_u(k)]: the sandwich that every Walsh
// coefficient of exp(-u x) satisfies; the upper end is attained at k = 0.
CoeffBounds coeff_bounds_1d(double u, std::uint64_t k);

} // namespace wafom
