// QMC integration of the exponential test functions exp(-sum_j u_j x_j)
// and their integration error, plus the dual-net Walsh-sum route to the
// same error.
#pragma once

#include "wafom/net.hpp"
#include "wafom/walsh.hpp"

namespace wafom {

// prod_j (1 - exp(-u_j)) / u_j: the integral over the unit cube.
double exact_integral_exp(const Weights &u);

// (1/N) sum_{x in P} exp(-sum_j u_j x_j), compensated accumulation.
double qmc_mean_exp(const PointSet &points, const Weights &u);

// qmc_mean_exp - exact_integral_exp. Strictly positive for digital nets.
double err_exp(const PointSet &points, const Weights &u);

// err_exp / A_{s,u}: the error of the test function scaled to unit norm.
double normalized_err_exp(const PointSet &points, const Weights &u);

struct DualErrorSum {
    double sum;        // sum of Walsh coefficients over the truncated dual
    double tail_bound; // bound on the mass of dual indices beyond 2^n digits
};

// The error as a Walsh-coefficient sum over the truncated dual net. Indices
// with digits beyond position n are not enumerated; their total contribution
// is bounded by A_{s,u} * (W_u^n(P) + 1) * (prod_j prod_{i>n} (1 + u_j 2^-(i+1)) - 1)
// and reported, never silently dropped.
DualErrorSum err_via_dual(const NetParams &params, const Weights &u);

} // namespace wafom
