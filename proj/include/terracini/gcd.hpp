#pragma once

#include <optional>
#include <vector>

#include "terracini/polynomial.hpp"

namespace terracini {

// Quotient a / b when b divides a exactly.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

// Monic greatest common divisor over a prime field (dense modular algorithm
// with evaluation and interpolation). gcd(0, 0) = 0.
Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b);

// Monic gcd of all nonzero polynomials in the list.
Polynomial content_gcd(const std::vector<Polynomial>& polys);

// a with every factor it shares with h removed.
Polynomial strip_common_factors(Polynomial a, const Polynomial& h);

}  // namespace terracini
