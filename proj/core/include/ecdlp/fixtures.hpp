#pragma once

#include "ecdlp/curve.hpp"

namespace ecdlp {

// y^2 = x^3 + 2x + 2 over F_17, 19 points, generator (5, 1).
GroupSpec small_fixture();

// y^2 = x^3 + x + 113 over F_911, 907 points, generator (0, 32).
// The first curve in find_prime_order_curve's scan with order exactly 907.
GroupSpec medium_fixture();

}  // namespace ecdlp
