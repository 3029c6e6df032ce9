#pragma once

#include <complex>
#include <vector>

#include "caustic/polynomial.hpp"

namespace caustic {

// Dense univariate polynomial, lowest degree first, no trailing zeros.
using UPoly = std::vector<Rational>;
using cld = std::complex<long double>;

// p must involve at most one variable
UPoly to_upoly(const Polynomial& p);
Polynomial from_upoly(const UPoly& u, int var);

int udeg(const UPoly& a);
void utrim(UPoly& a);
UPoly uderiv(const UPoly& a);
UPoly umul(const UPoly& a, const UPoly& b);
void udivmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly ugcd(UPoly a, UPoly b);  // monic
Rational ueval(const UPoly& a, const Rational& x);
bool is_squarefree(const UPoly& a);
// Yun: square-free factors f_k with multiplicity k, a = c * prod f_k^k
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& a);

long double to_long_double(const Rational& q);

struct RealRoot {
    Rational lo, hi;  // the root lies in (lo, hi], or equals lo when lo == hi
    int multiplicity = 1;
    double approx() const;
};

struct ComplexRoot {
    cld center;
    long double radius;  // inclusion radius
    int multiplicity = 1;
};

struct RootSet {
    std::vector<RealRoot> real;
    std::vector<ComplexRoot> complex;  // every root, real ones included
};

// Number of distinct real roots in (lo, hi] of a square-free polynomial.
int sturm_count(const UPoly& a, const Rational& lo, const Rational& hi);
std::vector<RealRoot> isolate_real_roots(const UPoly& a, const Rational& width);
// Simultaneous iteration on a square-free polynomial; roots polished with Newton.
std::vector<ComplexRoot> complex_roots(const UPoly& a);
// Same iteration for complex coefficients (lowest degree first). Leading zeros are dropped.
std::vector<cld> polynomial_roots(std::vector<cld> c);

RootSet isolate_roots(const Polynomial& p, const Rational& width = Rational(1, 1 << 30));

}  // namespace caustic
