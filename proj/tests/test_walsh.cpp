// Walsh machinery: hand values for wal_k and mu_u, the closed-form
// exponential coefficients against the piecewise-integration oracle, the
// per-index sandwich, and multiplicativity across coordinates.
#include <bit>
#include <cmath>
#include <vector>

#include "checks.hpp"
#include "wafom/constants.hpp"
#include "wafom/errors.hpp"
#include "wafom/rng.hpp"
#include "wafom/walsh.hpp"

using namespace wafom;

namespace {

void test_walsh_function() {
    const Point half{{2}, 2};    // 1/2 with 2 digits
    const Point quarter{{1}, 2}; // 1/4
    CHECK(walsh_function(MultiIndex{{0}}, half) == 1);
    CHECK(walsh_function(MultiIndex{{0}}, quarter) == 1);
    CHECK(walsh_function(MultiIndex{{1}}, half) == -1);
    CHECK(walsh_function(MultiIndex{{1}}, quarter) == 1);
    CHECK(walsh_function(MultiIndex{{2}}, quarter) == -1);

    // product across coordinates
    const Point p2{{2, 2}, 2};
    CHECK(walsh_function(MultiIndex{{1, 1}}, p2) == 1);
    CHECK(walsh_function(MultiIndex{{1, 0}}, p2) == -1);
}

void test_mu_weight() {
    const Weights u2({2.0});
    CHECK_CLOSE(mu_weight(MultiIndex{{0}}, u2), 0.0, 0.0);
    CHECK_CLOSE(mu_weight(MultiIndex{{1}}, u2), 1.0, 1e-15);
    CHECK_CLOSE(mu_weight(MultiIndex{{3}}, u2), 3.0, 1e-15);

    // additivity: mu_u(k) = mu_1(k) - sum_j popcount(k_j) lg u_j
    SplitMix64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t s = 1 + rng.next() % 4;
        std::vector<double> uv;
        std::vector<std::uint64_t> kv;
        double correction = 0.0;
        for (std::size_t j = 0; j < s; ++j) {
            const double uj = std::ldexp(1.0 + (rng.next() % 1000) / 250.0,
                                         static_cast<int>(rng.next() % 3) - 1);
            const std::uint64_t kj = rng.next() % 1024;
            uv.push_back(uj);
            kv.push_back(kj);
            correction += static_cast<double>(std::popcount(kj)) * std::log2(uj);
        }
        const double lhs = mu_weight(MultiIndex{kv}, Weights(uv));
        const double rhs =
            mu_weight(MultiIndex{kv}, Weights::uniform(s, 1.0)) - correction;
        CHECK_CLOSE(lhs, rhs, 1e-9 * (1.0 + std::abs(rhs)));

        // 2^-mu via exact dyadic factors agrees with the definition
        const double w = two_pow_neg_mu(MultiIndex{kv}, Weights(uv));
        CHECK_CLOSE(w, std::exp2(-lhs), 1e-12 * w);
    }
}

void test_coeff_closed_form() {
    // frozen oracle values
    CHECK_CLOSE(walsh_coeff_exp_1d(-2.0, 0), 0.43233235838169365, 1e-15);
    CHECK_CLOSE(walsh_coeff_exp_1d(-2.0, 1), 0.19978820044686402, 1e-15);
    const double sq = -std::expm1(-1.0);
    CHECK_CLOSE(walsh_coeff_exp_1d(-2.0, 1), sq * sq / 2.0, 1e-16);
    CHECK_CLOSE(walsh_coeff_exp_1d(-1.0, 2), 0.07860608897187002, 1e-14);
    CHECK_CLOSE(walsh_coeff_exp_1d(-1.0, 2), walsh_coeff_numeric(-1.0, 2),
                1e-12);

    // closed form vs piecewise-integration oracle
    for (double a : {-4.0, -2.0, -1.0, -0.5, 0.5, 3.0}) {
        const double scale = std::max(1.0, std::abs(std::exp(a)));
        for (std::uint64_t k = 0; k < 256; ++k)
            CHECK_CLOSE(walsh_coeff_exp_1d(a, k), walsh_coeff_numeric(a, k),
                        1e-12 * scale);
    }
    // oracle consistency holds for positive a as well
    CHECK_CLOSE(walsh_coeff_exp_1d(3.0, 5), walsh_coeff_numeric(3.0, 5),
                1e-12 * std::exp(3.0));

    bool threw = false;
    try {
        walsh_coeff_exp_1d(0.0, 3);
    } catch (const DomainError &) {
        threw = true;
    }
    CHECK(threw);

    threw = false;
    try {
        walsh_coeff_numeric(-2.0, std::uint64_t{1} << 20);
    } catch (const BudgetError &) {
        threw = true;
    }
    CHECK(threw);
}

void test_coeff_bounds() {
    // k = 0 attains the upper end exactly
    const auto b0 = coeff_bounds_1d(2.0, 0);
    CHECK_CLOSE(b0.upper, walsh_coeff_exp_1d(-2.0, 0), 1e-15);
    CHECK_CLOSE(b0.upper, 0.432, 1e-3);
    CHECK_CLOSE(b0.lower, 0.388, 1e-3);

    const auto b1 = coeff_bounds_1d(2.0, 1);
    CHECK(b1.lower <= 0.19978820044686402 && 0.19978820044686402 <= b1.upper);
    CHECK_CLOSE(b1.lower, 0.388 / 2, 1e-3);
    CHECK_CLOSE(b1.upper, 0.432 / 2, 1e-3);

    const auto b7 = coeff_bounds_1d(1.0, 7);
    const double g7 = walsh_coeff_exp_1d(-1.0, 7);
    CHECK(b7.lower <= g7 && g7 <= b7.upper);

    // the sandwich over a digit-rich range, all coefficients positive
    for (double u : {0.5, 1.0, 2.0, 4.0}) {
        for (std::uint64_t k = 0; k < 256; ++k) {
            const double g = walsh_coeff_exp_1d(-u, k);
            const auto b = coeff_bounds_1d(u, k);
            CHECK(g > 0.0);
            CHECK_MSG(b.lower <= g && g <= b.upper,
                      "sandwich fails at u=%g k=%llu: %.17g not in [%.17g,%.17g]",
                      u, static_cast<unsigned long long>(k), g, b.lower,
                      b.upper);
        }
    }

    bool threw = false;
    try {
        coeff_bounds_1d(0.0, 1);
    } catch (const DomainError &) {
        threw = true;
    }
    CHECK(threw);
}

void test_multivariate() {
    const Weights u22({2.0, 2.0});
    CHECK_CLOSE(walsh_coeff_exp_multi(u22, MultiIndex{{0, 0}}),
                0.1869112681038772, 1e-15);
    CHECK_CLOSE(walsh_coeff_exp_multi(u22, MultiIndex{{1, 0}}),
                0.08637490387602727, 1e-15);

    SplitMix64 rng(55);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t s = 1 + rng.next() % 4;
        std::vector<double> uv;
        std::vector<std::uint64_t> kv;
        for (std::size_t j = 0; j < s; ++j) {
            static const double choices[] = {0.5, 1.0, 2.0, 4.0};
            uv.push_back(choices[rng.next() % 4]);
            kv.push_back(rng.next() % 1024);
        }
        const Weights u(uv);
        const MultiIndex k{kv};
        double prod = 1.0;
        for (std::size_t j = 0; j < s; ++j)
            prod *= walsh_coeff_exp_1d(-uv[j], kv[j]);
        const double multi = walsh_coeff_exp_multi(u, k);
        CHECK_CLOSE(multi, prod, 1e-15 * std::max(1.0, std::abs(prod)));

        // multivariate sandwich (product of the coordinate sandwiches)
        const double scale = two_pow_neg_mu(k, u);
        CHECK(constant_B(u) * scale <= multi * (1 + 1e-12));
        CHECK(multi <= constant_A(u) * scale * (1 + 1e-12));
    }
}

void test_weights_validation() {
    bool threw = false;
    try {
        Weights w({1.0, -2.0});
    } catch (const DomainError &) {
        threw = true;
    }
    CHECK(threw);

    threw = false;
    try {
        Weights w(std::vector<double>{});
    } catch (const DimensionError &) {
        threw = true;
    }
    CHECK(threw);
}

} // namespace

int main() {
    test_walsh_function();
    test_mu_weight();
    test_coeff_closed_form();
    test_coeff_bounds();
    test_multivariate();
    test_weights_validation();
    return checks::summary("test_walsh");
}
