#pragma once

#include "caustic/polynomial.hpp"

namespace caustic {

// Sylvester resultant with respect to global variable v (0 = x, 1 = y, 2 = z).
// Exact only; the float overload throws ExactModeRequired.
Polynomial eliminate(const Polynomial& p, const Polynomial& q, int v);
PolynomialF eliminate(const PolynomialF& p, const PolynomialF& q, int v);

// Determinant over the rationals.
Rational determinant(std::vector<Rational> m, int n);

}  // namespace caustic
