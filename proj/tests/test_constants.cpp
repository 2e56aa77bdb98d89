// Sandwich constants: frozen values for u = 2, ordering, multiplicativity,
// and the stability of the truncated infimum.
#include <cmath>

#include "checks.hpp"
#include "wafom/constants.hpp"
#include "wafom/errors.hpp"

using namespace wafom;

int main() {
    const Weights u2({2.0});
    CHECK_CLOSE(constant_A(u2), 0.43233235838169365, 1e-15);
    CHECK_CLOSE(constant_B(u2), 0.3887536923349766, 1e-12);
    CHECK_CLOSE(constant_A(u2), 0.432, 1e-3);
    CHECK_CLOSE(constant_B(u2), 0.388, 1e-3);

    const Weights u22({2.0, 2.0});
    CHECK_CLOSE(constant_A(u22), constant_A(u2) * constant_A(u2), 1e-16);
    CHECK_CLOSE(constant_A(u22), 0.1869112681038772, 1e-15);
    CHECK_CLOSE(constant_B(u22), constant_B(u2) * constant_B(u2), 1e-16);

    // 0 < B <= A, strictly below for these weights
    for (double u : {0.5, 1.0, 2.0, 4.0}) {
        const Weights w({u});
        CHECK(constant_B(w) > 0.0);
        CHECK_MSG(constant_B(w) < constant_A(w), "B >= A at u=%g", u);
    }

    // mixed weights stay multiplicative
    const Weights mixed({0.5, 2.0, 4.0});
    CHECK_CLOSE(constant_A(mixed),
                constant_A(Weights({0.5})) * constant_A(Weights({2.0})) *
                    constant_A(Weights({4.0})),
                1e-16);
    CHECK_CLOSE(constant_B(mixed),
                constant_B(Weights({0.5})) * constant_B(Weights({2.0})) *
                    constant_B(Weights({4.0})),
                1e-16);

    // the scanned infimum has converged long before w_max = 32
    CHECK_CLOSE(constant_B(u2, 32), constant_B(u2, 64), 1e-14);

    // (1 - e^-u)/u -> 1 as u -> 0
    const double a_small = constant_A(Weights({1e-8}));
    CHECK(a_small >= 1.0 - 1e-7 && a_small <= 1.0);

    bool threw = false;
    try {
        constant_B(u2, 0);
    } catch (const DomainError &) {
        threw = true;
    }
    CHECK(threw);

    threw = false;
    try {
        Weights bad({-1.0});
    } catch (const DomainError &) {
        threw = true;
    }
    CHECK(threw);

    return checks::summary("test_constants");
}
