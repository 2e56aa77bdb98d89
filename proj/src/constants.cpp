#include "wafom/constants.hpp"

#include <cmath>
#include <limits>

#include "wafom/errors.hpp"

namespace wafom {

namespace {

// (1 - exp(-x)) / x, accurate near zero.
double phi(double x) { return -std::expm1(-x) / x; }

} // namespace

double constant_A(const Weights &u) {
    double prod = 1.0;
    for (std::size_t j = 0; j < u.size(); ++j) prod *= phi(u[j]);
    return prod;
}

double constant_B(const Weights &u, unsigned w_max) {
    if (w_max < 1) throw DomainError("constant_B: w_max must be >= 1");
    double prod = 1.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        double inner = 1.0; // prod_{i<=w} phi(2^-i u_j), grown incrementally
        double best = std::numeric_limits<double>::infinity();
        for (unsigned w = 1; w <= w_max; ++w) {
            const double tail = phi(std::ldexp(u[j], -static_cast<int>(w)));
            inner *= tail;
            best = std::min(best, tail * inner);
        }
        prod *= best;
    }
    return prod;
}

} // namespace wafom
