#include "caustic/univariate.hpp"

#include <algorithm>
#include <cmath>

#include "caustic/errors.hpp"

namespace caustic {

UPoly to_upoly(const Polynomial& p) {
    std::vector<int> used;
    for (auto& [e, c] : p.terms())
        for (int k = 0; k < 3; ++k)
            if (e[k] && std::find(used.begin(), used.end(), k) == used.end()) used.push_back(k);
    if (used.size() > 1) throw Error(ErrorCode::ParseError, "polynomial is not univariate");
    int v = used.empty() ? 0 : used[0];
    UPoly u(std::max(0, p.degree_in(v)) + 1);
    for (auto& [e, c] : p.terms()) u[e[v]] = c;
    utrim(u);
    return u;
}

Polynomial from_upoly(const UPoly& u, int var) {
    Polynomial p(1u << var);
    for (std::size_t i = 0; i < u.size(); ++i) {
        Exponents e{0, 0, 0};
        e[var] = static_cast<uint8_t>(i);
        p.add_term(e, u[i]);
    }
    return p;
}

void utrim(UPoly& a) {
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

int udeg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly uderiv(const UPoly& a) {
    UPoly d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<long>(i));
    utrim(d);
    return d;
}

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    utrim(r);
    return r;
}

void udivmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.empty()) throw Error(ErrorCode::EliminationFailure, "division by zero polynomial");
    r = a;
    utrim(r);
    q.assign(std::max<int>(0, udeg(r) - udeg(b) + 1), Rational(0));
    const Rational& lb = b.back();
    while (udeg(r) >= udeg(b)) {
        int s = udeg(r) - udeg(b);
        Rational c = r.back() / lb;
        q[s] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[i + s] -= c * b[i];
        r.pop_back();
        utrim(r);
    }
    utrim(q);
}

UPoly ugcd(UPoly a, UPoly b) {
    utrim(a), utrim(b);
    while (!b.empty()) {
        UPoly q, r;
        udivmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational l = a.back();
        for (auto& c : a) c /= l;
    }
    return a;
}

Rational ueval(const UPoly& a, const Rational& x) {
    Rational s = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) s = s * x + *it;
    return s;
}

bool is_squarefree(const UPoly& a) { return udeg(ugcd(a, uderiv(a))) <= 0; }

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& a) {
    std::vector<std::pair<UPoly, int>> out;
    if (udeg(a) <= 0) return out;
    UPoly d = uderiv(a), q, r;
    UPoly g = ugcd(a, d);
    UPoly b, c;
    udivmod(a, g, b, r);
    udivmod(d, g, c, r);
    for (int k = 1;; ++k) {
        UPoly bd = uderiv(b), t = c;
        for (std::size_t i = 0; i < bd.size(); ++i) {
            if (i >= t.size()) t.resize(i + 1);
            t[i] -= bd[i];
        }
        utrim(t);
        if (udeg(b) <= 0) break;
        UPoly f = ugcd(b, t);
        if (udeg(f) > 0) out.emplace_back(f, k);
        udivmod(b, f, q, r);
        b = q;
        udivmod(t, f, q, r);
        c = q;
    }
    return out;
}

long double to_long_double(const Rational& q) {
    mpf_class f(q, 160);
    double hi = f.get_d();
    mpf_class rest(f - hi, 160);
    return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

double RealRoot::approx() const { return Rational((lo + hi) / 2).get_d(); }

namespace {

std::vector<UPoly> sturm_sequence(const UPoly& a) {
    std::vector<UPoly> s{a, uderiv(a)};
    while (!s.back().empty()) {
        UPoly q, r;
        udivmod(s[s.size() - 2], s.back(), q, r);
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        s.push_back(r);
    }
    return s;
}

int variations(const std::vector<UPoly>& s, const Rational& x) {
    int v = 0, last = 0;
    for (auto& p : s) {
        int sg = sgn(ueval(p, x));
        if (!sg) continue;
        if (last && sg != last) ++v;
        last = sg;
    }
    return v;
}

Rational cauchy_bound(const UPoly& a) {
    Rational m = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) m = std::max(m, Rational(abs(a[i] / a.back())));
    // round up to a power of two so bisection points stay dyadic
    Rational b = 1;
    while (b < m + 1) b *= 2;
    return b;
}

}  // namespace

int sturm_count(const UPoly& a, const Rational& lo, const Rational& hi) {
    auto s = sturm_sequence(a);
    return variations(s, lo) - variations(s, hi);
}

std::vector<RealRoot> isolate_real_roots(const UPoly& a, const Rational& width) {
    std::vector<RealRoot> out;
    if (udeg(a) <= 0) return out;
    auto s = sturm_sequence(a);
    Rational B = cauchy_bound(a);
    std::vector<std::pair<Rational, Rational>> stack{{-B, B}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        int n = variations(s, lo) - variations(s, hi);
        if (n == 0) continue;
        if (n == 1) {
            while (hi - lo > width) {
                Rational mid = (lo + hi) / 2;
                if (sgn(ueval(a, mid)) == 0) {
                    lo = hi = mid;
                    break;
                }
                if (variations(s, lo) - variations(s, mid) == 1) hi = mid;
                else lo = mid;
            }
            if (lo != hi && sgn(ueval(a, hi)) == 0) lo = hi;
            out.push_back({lo, hi, 1});
            continue;
        }
        Rational mid = (lo + hi) / 2;
        stack.push_back({lo, mid});
        stack.push_back({mid, hi});
    }
    std::sort(out.begin(), out.end(), [](const RealRoot& x, const RealRoot& y) { return x.hi < y.hi; });
    return out;
}

namespace {

void horner(const std::vector<cld>& c, cld z, cld& p, cld& dp) {
    p = c.back();
    dp = 0;
    for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) {
        dp = dp * z + p;
        p = p * z + c[i];
    }
}

}  // namespace

std::vector<cld> polynomial_roots(std::vector<cld> c) {
    while (!c.empty() && c.back() == cld(0)) c.pop_back();
    const int n = static_cast<int>(c.size()) - 1;
    std::vector<cld> z;
    if (n <= 0) return z;
    const cld lead = c.back();
    for (auto& v : c) v /= lead;
    if (n == 1) return {-c[0]};
    long double R = 0;
    for (int k = 1; k <= n; ++k) R = std::max(R, std::pow(std::abs(c[n - k]), 1.0L / k));
    R = std::max(R * 2, 1e-300L);
    z.resize(n);
    for (int k = 0; k < n; ++k) z[k] = std::polar(R * 0.8L, 2 * M_PIl * k / n + 0.4L);
    long double best = INFINITY;
    int stalled = 0;
    for (int it = 0; it < 5000; ++it) {
        long double worst = 0;
        for (int k = 0; k < n; ++k) {
            cld p, dp;
            horner(c, z[k], p, dp);
            if (p == cld(0)) continue;
            cld w = p / dp, s = 0;
            for (int j = 0; j < n; ++j)
                if (j != k) s += 1.0L / (z[k] - z[j]);
            cld corr = w / (1.0L - w * s);
            z[k] -= corr;
            worst = std::max(worst, std::abs(corr) / std::max(1.0L, std::abs(z[k])));
        }
        if (worst < 1e-18L) break;
        // at the rounding floor (huge roots from a tiny leading term) the corrections stop shrinking
        if (worst < best * 0.5L) best = worst, stalled = 0;
        else if (++stalled > 40) break;
    }
    for (int k = 0; k < n; ++k)
        for (int it = 0; it < 3; ++it) {
            cld p, dp;
            horner(c, z[k], p, dp);
            if (dp == cld(0) || p == cld(0)) break;
            z[k] -= p / dp;
        }
    return z;
}

std::vector<ComplexRoot> complex_roots(const UPoly& a) {
    const int n = udeg(a);
    std::vector<ComplexRoot> out;
    if (n <= 0) return out;
    std::vector<cld> c;
    for (auto& q : a) c.push_back(to_long_double(q / a.back()));
    for (cld z : polynomial_roots(c)) {
        cld p, dp;
        horner(c, z, p, dp);
        long double r = dp == cld(0) ? INFINITY : n * std::abs(p) / std::abs(dp);
        out.push_back({z, std::max(r, 1e-17L * (1 + std::abs(z))), 1});
    }
    return out;
}

RootSet isolate_roots(const Polynomial& p, const Rational& width) {
    UPoly a = to_upoly(p);
    if (a.empty()) throw Error(ErrorCode::EliminationFailure, "zero polynomial has no isolated roots");
    RootSet rs;
    for (auto& [f, k] : squarefree_decomposition(a)) {
        for (auto r : isolate_real_roots(f, width)) {
            r.multiplicity = k;
            rs.real.push_back(r);
        }
        for (auto r : complex_roots(f)) {
            r.multiplicity = k;
            rs.complex.push_back(r);
        }
    }
    std::sort(rs.real.begin(), rs.real.end(), [](const RealRoot& x, const RealRoot& y) { return x.hi < y.hi; });
    return rs;
}

}  // namespace caustic
