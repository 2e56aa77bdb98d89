#include "wafom/walsh.hpp"

#include <bit>
#include <cmath>

#include "wafom/constants.hpp"
#include "wafom/errors.hpp"
#include "wafom/summation.hpp"

namespace wafom {

Weights::Weights(std::vector<double> u) : u_(std::move(u)) {
    if (u_.empty()) throw DimensionError("Weights: need at least one weight");
    for (double v : u_)
        if (!(v > 0.0)) throw DomainError("Weights: weights must be positive");
}

Weights Weights::uniform(std::size_t s, double value) {
    return Weights(std::vector<double>(s, value));
}

int walsh_function(const MultiIndex &k, const Point &x) {
    if (k.components.size() != x.coords.size())
        throw DimensionError("walsh_function: dimension mismatch");
    const unsigned n = x.digits;
    const std::uint64_t mask =
        n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    unsigned parity = 0;
    for (std::size_t j = 0; j < x.coords.size(); ++j) {
        // digit i of k_j is bit i-1; digit i of y_j is bit n-i. Reversing
        // the low n bits of k_j aligns the two, and digits of k beyond n
        // meet zero digits of x.
        const std::uint64_t rev = reverse_low_bits(k.components[j] & mask, n);
        parity ^= std::popcount(rev & x.coords[j]) & 1u;
    }
    return parity ? -1 : 1;
}

double mu_weight(const MultiIndex &k, const Weights &u) {
    if (k.components.size() != u.size())
        throw DimensionError("mu_weight: dimension mismatch");
    double total = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        std::uint64_t kj = k.components[j];
        const double lg_u = std::log2(u[j]);
        while (kj) {
            const unsigned i = static_cast<unsigned>(std::countr_zero(kj)) + 1;
            total += static_cast<double>(i) + 1.0 - lg_u;
            kj &= kj - 1;
        }
    }
    return total;
}

double two_pow_neg_mu(const MultiIndex &k, const Weights &u) {
    if (k.components.size() != u.size())
        throw DimensionError("two_pow_neg_mu: dimension mismatch");
    double prod = 1.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        std::uint64_t kj = k.components[j];
        while (kj) {
            const int i = std::countr_zero(kj) + 1;
            prod *= std::ldexp(u[j], -(i + 1));
            kj &= kj - 1;
        }
    }
    return prod;
}

double walsh_coeff_exp_1d(double a, std::uint64_t k) {
    if (a == 0.0)
        throw DomainError("walsh_coeff_exp_1d: a must be nonzero");
    const int w = std::bit_width(k);
    double value = std::expm1(std::ldexp(a, -w)) / a;
    for (int i = 1; i <= w; ++i) {
        const double e = std::exp(std::ldexp(a, -i));
        value *= ((k >> (i - 1)) & 1u) ? 1.0 - e : 1.0 + e;
    }
    return value;
}

double walsh_coeff_exp_multi(const Weights &u, const MultiIndex &k) {
    if (k.components.size() != u.size())
        throw DimensionError("walsh_coeff_exp_multi: dimension mismatch");
    double prod = 1.0;
    for (std::size_t j = 0; j < u.size(); ++j)
        prod *= walsh_coeff_exp_1d(-u[j], k.components[j]);
    return prod;
}

double walsh_coeff_numeric(double a, std::uint64_t k) {
    if (a == 0.0)
        throw DomainError("walsh_coeff_numeric: a must be nonzero");
    if (k >= kNumericCoeffBudget)
        throw BudgetError("walsh_coeff_numeric: k exceeds the 2^20 budget");
    const int w = std::bit_width(k);
    const std::uint64_t pieces = std::uint64_t{1} << w;
    const double h = std::ldexp(1.0, -w);
    // Integral of exp(a x) over [l h, (l+1) h) is exp(a l h) (exp(a h)-1)/a.
    const double base = std::expm1(a * h) / a;
    NeumaierSum sum;
    for (std::uint64_t l = 0; l < pieces; ++l) {
        // wal_k is constant on the piece; digit i of x there is bit w-i of l.
        const unsigned parity =
            std::popcount(k & reverse_low_bits(l, static_cast<unsigned>(w))) & 1u;
        const double piece = std::exp(a * static_cast<double>(l) * h) * base;
        sum.add(parity ? -piece : piece);
    }
    return sum.value();
}

CoeffBounds coeff_bounds_1d(double u, std::uint64_t k) {
    if (!(u > 0.0)) throw DomainError("coeff_bounds_1d: u must be positive");
    const Weights w({u});
    const MultiIndex idx{{k}};
    const double scale = two_pow_neg_mu(idx, w);
    return {constant_B(w) * scale, constant_A(w) * scale};
}

} // namespace wafom
