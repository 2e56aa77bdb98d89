// The sandwich constants relating the WAFOM value of a digital net to the
// integration error of the matching exponential test function.
#pragma once

#include "wafom/walsh.hpp"

namespace wafom {

// A_{s,u} = prod_j (1 - exp(-u_j)) / u_j. Also the exact integral of
// exp(-sum u_j x_j) over the unit cube.
double constant_A(const Weights &u);

// B_{s,u} = prod_j inf_w [ phi(2^-w u_j) * prod_{i<=w} phi(2^-i u_j) ]
// with phi(x) = (1 - exp(-x)) / x. The infimum is over w >= 1; it is
// approximated by a direct scan of w = 1..w_max (no monotonicity assumed).
double constant_B(const Weights &u, unsigned w_max = 64);

} // namespace wafom
