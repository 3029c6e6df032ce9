#include "caustic/eliminate.hpp"

#include "caustic/errors.hpp"

namespace caustic {

Rational determinant(std::vector<Rational> m, int n) {
    Rational det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (sgn(m[r * n + c])) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(m[piv * n + j], m[c * n + j]);
            det = -det;
        }
        det *= m[c * n + c];
        for (int r = c + 1; r < n; ++r) {
            if (!sgn(m[r * n + c])) continue;
            Rational f = m[r * n + c] / m[c * n + c];
            for (int j = c; j < n; ++j) m[r * n + j] -= f * m[c * n + j];
        }
    }
    return det;
}

namespace {

// coefficient of v^k as a polynomial in the remaining variables
Polynomial coefficient_in(const Polynomial& p, int v, int k) {
    Polynomial r(p.vars() & ~(1u << v));
    for (auto& [e, c] : p.terms())
        if (e[v] == k) {
            Exponents f = e;
            f[v] = 0;
            r.add_term(f, c);
        }
    return r;
}

// resultant with formal degrees m, n in v, so that specialization commutes with it
Polynomial resultant(const Polynomial& p, const Polynomial& q, int v, int m, int n, unsigned others) {
    if (m == 0 && n == 0) return Polynomial::constant(1, others);
    if (m == 0) return coefficient_in(p, v, 0).pow(n);
    if (n == 0) return coefficient_in(q, v, 0).pow(m);
    int w = -1;
    for (int k = 0; k < 3; ++k)
        if (others & (1u << k)) {
            w = k;
            break;
        }
    const int N = m + n;
    if (w < 0) {
        std::vector<Rational> S(N * N, Rational(0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k <= m; ++k) S[i * N + i + k] = coefficient_in(p, v, m - k).coeff({0, 0, 0});
        for (int i = 0; i < m; ++i)
            for (int k = 0; k <= n; ++k) S[(n + i) * N + i + k] = coefficient_in(q, v, n - k).coeff({0, 0, 0});
        return Polynomial::constant(determinant(S, N), others);
    }
    const int D = m * std::max(0, q.degree_in(w)) + n * std::max(0, p.degree_in(w));
    const unsigned rest = others & ~(1u << w);
    // Lagrange interpolation through w = 0..D
    Polynomial result(others);
    const Polynomial W = Polynomial::variable(w);
    for (int t = 0; t <= D; ++t) {
        Polynomial pt = p.substitute(w, Polynomial::constant(t));
        Polynomial qt = q.substitute(w, Polynomial::constant(t));
        Polynomial rt = resultant(pt, qt, v, m, n, rest);
        if (rt.is_zero()) continue;
        Polynomial L = Polynomial::constant(1);
        Rational denom = 1;
        for (int s = 0; s <= D; ++s) {
            if (s == t) continue;
            L = L * (W - Polynomial::constant(s));
            denom *= t - s;
        }
        result += rt * L * Rational(1 / denom);
    }
    result.declare(others);
    return result;
}

}  // namespace

Polynomial eliminate(const Polynomial& p, const Polynomial& q, int v) {
    unsigned others = (p.vars() | q.vars()) & ~(1u << v);
    int m = std::max(0, p.degree_in(v)), n = std::max(0, q.degree_in(v));
    if (p.is_zero() || q.is_zero()) return Polynomial(others);
    return resultant(p, q, v, m, n, others);
}

PolynomialF eliminate(const PolynomialF&, const PolynomialF&, int) {
    throw Error(ErrorCode::ExactModeRequired, "elimination needs exact coefficients");
}

}  // namespace caustic
