#include "wafom/exp_error.hpp"

#include <algorithm>
#include <cmath>

#include "wafom/constants.hpp"
#include "wafom/errors.hpp"
#include "wafom/summation.hpp"

namespace wafom {

double exact_integral_exp(const Weights &u) {
    double prod = 1.0;
    for (std::size_t j = 0; j < u.size(); ++j)
        prod *= -std::expm1(-u[j]) / u[j];
    return prod;
}

double qmc_mean_exp(const PointSet &points, const Weights &u) {
    if (u.size() != points.dimension())
        throw DimensionError("qmc_mean_exp: weight count must equal s");
    const int digits = static_cast<int>(points.digits());
    const std::size_t s = points.dimension();
    NeumaierSum sum;
    for (std::size_t h = 0; h < points.size(); ++h) {
        const auto row = points.row(h);
        double arg = 0.0;
        for (std::size_t j = 0; j < s; ++j)
            arg += u[j] * std::ldexp(static_cast<double>(row[j]), -digits);
        sum.add(std::exp(-arg));
    }
    return sum.value() / static_cast<double>(points.size());
}

double err_exp(const PointSet &points, const Weights &u) {
    return qmc_mean_exp(points, u) - exact_integral_exp(u);
}

double normalized_err_exp(const PointSet &points, const Weights &u) {
    return err_exp(points, u) / constant_A(u);
}

namespace {

// prod_j prod_{i>n} (1 + u_j 2^-(i+1)) - 1: the dual-mass factor of the
// digit positions the truncated enumeration cannot see.
double tail_mass_factor(const Weights &u, unsigned n) {
    double log_sum = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        for (unsigned i = n + 1;; ++i) {
            const double term =
                std::log1p(std::ldexp(u[j], -static_cast<int>(i) - 1));
            log_sum += term;
            if (term < 1e-300 || i > n + 1100) break;
        }
    }
    return std::expm1(log_sum);
}

} // namespace

DualErrorSum err_via_dual(const NetParams &params, const Weights &u) {
    if (u.size() != params.s)
        throw DimensionError("err_via_dual: weight count must equal s");
    const std::vector<MultiIndex> dual = dual_net(params);
    std::vector<std::pair<double, double>> terms; // (mu, ghat(k))
    terms.reserve(dual.size());
    NeumaierSum mass; // sum of 2^-mu over the nonzero truncated dual = W_u^n
    for (const MultiIndex &k : dual) {
        bool zero = true;
        for (auto c : k.components) zero &= (c == 0);
        if (zero) continue;
        terms.emplace_back(mu_weight(k, u), walsh_coeff_exp_multi(u, k));
        mass.add(two_pow_neg_mu(k, u));
    }
    std::sort(terms.begin(), terms.end(),
              [](const auto &a, const auto &b) { return a.first > b.first; });
    NeumaierSum sum;
    for (const auto &[mu, coeff] : terms) sum.add(coeff);

    const double tail = constant_A(u) * (mass.value() + 1.0) *
                        tail_mass_factor(u, static_cast<unsigned>(params.n));
    return DualErrorSum{sum.value(), tail};
}

} // namespace wafom
