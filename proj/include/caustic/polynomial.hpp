#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace caustic {

using Rational = mpq_class;

// Exponents of x, y, z.
using Exponents = std::array<uint8_t, 3>;

constexpr unsigned kX = 1, kY = 2, kZ = 4;

// Graded order, highest degree first, ties broken lexicographically (x before y before z).
struct TermOrder {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
        if (da != db) return da > db;
        return a > b;
    }
};

// Sparse polynomial in a declared subset of {x, y, z}. Points are given in the
// declared variable order.
template <class K>
class Poly {
public:
    using Terms = std::map<Exponents, K, TermOrder>;

    Poly() = default;
    explicit Poly(unsigned vars) : vars_(vars) {}
    static Poly variable(int v);
    static Poly constant(const K& c, unsigned vars = 0);
    static Poly monomial(const Exponents& e, const K& c = K(1), unsigned vars = 0);

    unsigned vars() const { return vars_; }
    int nvars() const { return __builtin_popcount(vars_); }
    std::vector<int> var_list() const;  // global indices 0..2 of the declared variables
    void declare(unsigned vars) { vars_ |= vars; }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    K coeff(const Exponents& e) const;
    void add_term(const Exponents& e, const K& c);
    int degree() const;
    int degree_in(int v) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const K& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const K& c) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b) { return a.mul(b); }
    Poly pow(int e) const;
    // compares terms; declared variables are not part of the value
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    Poly derivative(int v) const;
    // replace global variable v by q; v is removed from the declared set unless q uses it
    Poly substitute(int v, const Poly& q) const;

    template <class T>
    T eval(std::span<const T> point) const;

private:
    Poly mul(const Poly& o) const;
    unsigned vars_ = 0;
    Terms terms_;
};

using Polynomial = Poly<Rational>;
using PolynomialF = Poly<double>;

// Text form: x, y, z, numbers (integer, decimal, a/b), + - * ^ and parentheses.
// Multiplication must be explicit.
Polynomial parse_polynomial(const std::string& text);
std::string to_string(const Polynomial& p);
std::string to_string(const PolynomialF& p);

PolynomialF to_float(const Polynomial& p);
// Exact conversion of each double coefficient.
Polynomial to_exact(const PolynomialF& p);
Rational exact_rational(double v);
// Nearest double, ties to even.
double to_double(const Rational& q);

// Evaluation. The double overload for exact polynomials is correctly rounded.
Rational evaluate(const Polynomial& p, std::span<const Rational> point);
double evaluate(const Polynomial& p, std::span<const double> point);
double evaluate(const PolynomialF& p, std::span<const double> point);
std::complex<double> evaluate(const PolynomialF& p, std::span<const std::complex<double>> point);

template <class K>
std::vector<Poly<K>> gradient(const Poly<K>& p);
template <class K>
std::vector<std::vector<Poly<K>>> hessian(const Poly<K>& p);

// Dense term list for fast repeated evaluation of a polynomial together with its
// gradient and Hessian at real or complex points.
class CompiledPoly {
public:
    CompiledPoly() = default;
    explicit CompiledPoly(const PolynomialF& p);
    explicit CompiledPoly(const Polynomial& p) : CompiledPoly(to_float(p)) {}

    int nvars() const { return nv_; }
    template <class T>
    T value(const T* pt) const;
    template <class T>
    void grad(const T* pt, T* g) const;
    template <class T>
    void hess(const T* pt, T* h) const;  // nv x nv row major
    // batched values through the dispatched kernels
    void values(const double* pts, std::size_t n, double* out) const;

private:
    int nv_ = 0;
    std::vector<double> coef_;
    std::vector<uint8_t> exps_;  // 3 per term, in declared variable order
};

}  // namespace caustic
