#include "caustic/critlab.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "caustic/eliminate.hpp"
#include "caustic/errors.hpp"
#include "caustic/univariate.hpp"

namespace caustic {

namespace {

using cpoint = std::vector<cld>;

PolynomialF abs_poly(const Polynomial& f) {
    PolynomialF a(f.vars());
    for (auto& [e, c] : f.terms()) a.add_term(e, std::fabs(c.get_d()));
    return a;
}

// Solve A x = b for n <= 3 with partial pivoting.
bool solve_small(int n, cld* A, cld* b) {
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(A[r * n + c]) > std::abs(A[piv * n + c])) piv = r;
        if (A[piv * n + c] == cld(0)) return false;
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(A[piv * n + j], A[c * n + j]);
            std::swap(b[piv], b[c]);
        }
        for (int r = c + 1; r < n; ++r) {
            cld f = A[r * n + c] / A[c * n + c];
            for (int j = c; j < n; ++j) A[r * n + j] -= f * A[c * n + j];
            b[r] -= f * b[c];
        }
    }
    for (int r = n - 1; r >= 0; --r) {
        for (int j = r + 1; j < n; ++j) b[r] -= A[r * n + j] * b[j];
        b[r] /= A[r * n + r];
    }
    return true;
}

long double norm(const cpoint& p) {
    long double s = 0;
    for (auto& v : p) s = std::max(s, std::abs(v));
    return s;
}

// Coefficients in variable v of a polynomial after fixing the other variables.
std::vector<cld> coefficients_at(const Polynomial& p, int v, const std::vector<std::pair<int, cld>>& fixed) {
    std::vector<cld> c(std::max(0, p.degree_in(v)) + 1, cld(0));
    for (auto& [e, q] : p.terms()) {
        cld m = to_long_double(q);
        for (auto& [w, val] : fixed)
            for (int j = 0; j < e[w]; ++j) m *= val;
        c[e[v]] += m;
    }
    return c;
}

struct Solver {
    const Polynomial& f;
    std::vector<int> vl;
    CompiledPoly cf, ca;
    std::vector<cpoint> found;

    explicit Solver(const Polynomial& f_) : f(f_), vl(f_.var_list()), cf(f_), ca(abs_poly(f_)) {}

    void add(cpoint p) {
        if (!polish_critical(cf, ca, p)) return;
        for (auto& q : found) {
            long double d = 0;
            for (std::size_t i = 0; i < p.size(); ++i) d = std::max(d, std::abs(p[i] - q[i]));
            if (d <= 1e-9L * (1 + norm(p))) return;
        }
        found.push_back(p);
    }
};

const Rational kShears[] = {Rational(0), Rational(1, 3), Rational(-2, 5), Rational(3, 7), Rational(-5, 11),
                            Rational(7, 13), Rational(-11, 17)};

void solve1(Solver& s) {
    const int v = s.vl[0];
    UPoly d = to_upoly(s.f.derivative(v));
    if (d.empty()) throw Error(ErrorCode::EliminationFailure, "constant polynomial");
    if (!is_squarefree(d)) throw Error(ErrorCode::DegenerateCriticalPoint, "derivative has a multiple root");
    for (auto& r : complex_roots(d)) s.add({r.center});
}

void solve2(Solver& s) {
    const int x = s.vl[0], y = s.vl[1];
    const Polynomial X = Polynomial::variable(x), Y = Polynomial::variable(y);
    std::vector<Polynomial> g{s.f.derivative(x), s.f.derivative(y)};
    bool degenerate = false, all_zero = true, lost = false;
    for (const Rational& c : kShears) {
        // y = Y + c x: project onto Y, recover x from the fibre
        std::vector<Polynomial> h;
        for (auto& gi : g) h.push_back(gi.substitute(y, Y + X * c));
        Polynomial R = eliminate(h[0], h[1], x);
        if (R.is_zero()) continue;
        all_zero = false;
        UPoly u = to_upoly(R);
        if (!is_squarefree(u)) {
            degenerate = true;
            continue;
        }
        degenerate = false;
        s.found.clear();
        auto roots = complex_roots(u);
        for (auto& r : roots) {
            cld Yv = r.center;
            std::vector<cld> cands;
            for (auto& hi : h) {
                auto roots = polynomial_roots(coefficients_at(hi, x, {{y, Yv}}));
                cands.insert(cands.end(), roots.begin(), roots.end());
            }
            long double best = INFINITY;
            cld bx = 0;
            for (cld xv : cands) {
                cpoint p(2);
                p[0] = xv, p[1] = Yv + xv * to_long_double(c);
                cld gr[2];
                s.cf.grad(p.data(), gr);
                long double res = std::abs(gr[0]) + std::abs(gr[1]);
                if (res < best) best = res, bx = xv;
            }
            if (std::isfinite(best)) s.add({bx, Yv + bx * to_long_double(c)});
        }
        // a lost or merged fibre point means this projection is unreliable
        if (s.found.size() == roots.size()) return;
        lost = true;
    }
    if (lost) throw Error(ErrorCode::EliminationFailure, "fibre recovery failed in every projection");
    if (all_zero) throw Error(ErrorCode::EliminationFailure, "critical set is not isolated");
    if (degenerate) throw Error(ErrorCode::DegenerateCriticalPoint, "multiple root in every projection");
}

void solve3(Solver& s) {
    const int x = s.vl[0], y = s.vl[1], z = s.vl[2];
    const Polynomial X = Polynomial::variable(x), Y = Polynomial::variable(y), Z = Polynomial::variable(z);
    std::vector<Polynomial> g{s.f.derivative(x), s.f.derivative(y), s.f.derivative(z)};
    const Rational a(2, 7), b(-3, 11), d(5, 13);
    std::vector<Polynomial> h;
    for (auto& gi : g) h.push_back(gi.substitute(z, Z + X * b + Y * d).substitute(y, Y + X * a));
    Polynomial A = eliminate(h[0], h[2], z), B = eliminate(h[1], h[2], z);
    Polynomial R = eliminate(A, B, x);
    if (R.is_zero()) throw Error(ErrorCode::EliminationFailure, "critical set is not isolated");
    const long double la = to_long_double(a), lb = to_long_double(b), ld = to_long_double(d);
    for (auto& [factor, mult] : squarefree_decomposition(to_upoly(R))) {
        for (auto& r : complex_roots(factor)) {
            cld Yv = r.center;
            std::vector<cld> xs = polynomial_roots(coefficients_at(A, x, {{y, Yv}}));
            auto xb = polynomial_roots(coefficients_at(B, x, {{y, Yv}}));
            xs.insert(xs.end(), xb.begin(), xb.end());
            for (cld xv : xs)
                for (cld Zv : polynomial_roots(coefficients_at(h[2], z, {{x, xv}, {y, Yv}}))) {
                    cld yv = Yv + la * xv;
                    s.add({xv, yv, Zv + lb * xv + ld * Yv});
                }
        }
    }
}

}  // namespace

bool polish_critical(const CompiledPoly& f, const CompiledPoly& absf, std::vector<cld>& p, int max_iter) {
    const int n = f.nvars();
    cld g[3], H[9];
    for (int it = 0; it < max_iter; ++it) {
        f.grad(p.data(), g);
        f.hess(p.data(), H);
        for (int i = 0; i < n; ++i) g[i] = -g[i];
        if (!solve_small(n, H, g)) break;
        long double step = 0;
        for (int i = 0; i < n; ++i) p[i] += g[i], step = std::max(step, std::abs(g[i]));
        if (!std::isfinite(step) || norm(p) > 1e12L) return false;
        if (step <= 1e-17L * (1 + norm(p))) break;
    }
    f.grad(p.data(), g);
    long double mod[3], ag[3];
    // coordinates that vanish exactly would give a zero scale
    for (int i = 0; i < n; ++i) mod[i] = std::abs(p[i]) + 1e-6L * (1 + norm(p));
    absf.grad(mod, ag);
    for (int i = 0; i < n; ++i)
        if (std::abs(g[i]) > 1e-10L * ag[i] + 1e-300L) return false;
    return true;
}

MorseData classify_hessian(const double* h, int n, double tol) {
    Eigen::MatrixXd H(n, n);
    // det is compared with the product of row norms, so a well separated but
    // anisotropic Hessian is not mistaken for a degenerate one
    double scale = 1;
    for (int i = 0; i < n; ++i) {
        double row = 0;
        for (int j = 0; j < n; ++j) H(i, j) = h[i * n + j], row += std::fabs(h[i * n + j]);
        scale *= row;
    }
    if (scale == 0) return {false, -1};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H, Eigen::EigenvaluesOnly);
    double det = 1;
    int neg = 0;
    for (int i = 0; i < n; ++i) {
        double l = es.eigenvalues()[i];
        det *= l;
        neg += l < 0;
    }
    if (std::fabs(det) <= tol * scale) return {false, -1};
    return {true, neg};
}

CriticalPoint make_critical_point(const CompiledPoly& cf, const std::vector<cld>& p, const CritOptions& opt) {
    const int n = cf.nvars();
    CriticalPoint c;
    c.real = true;
    for (auto& v : p)
        if (std::fabs(v.imag()) > opt.real_tol * (1 + std::fabs(v.real()))) c.real = false;
    if (c.real) {
        // re-polish on the real slice
        std::vector<long double> r(n);
        for (int i = 0; i < n; ++i) r[i] = p[i].real();
        for (int it = 0; it < 8; ++it) {
            long double g[3], H[9];
            cf.grad(r.data(), g);
            cf.hess(r.data(), H);
            cld Hc[9], gc[3];
            for (int i = 0; i < n * n; ++i) Hc[i] = H[i];
            for (int i = 0; i < n; ++i) gc[i] = -g[i];
            if (!solve_small(n, Hc, gc)) break;
            for (int i = 0; i < n; ++i) r[i] += gc[i].real();
        }
        for (int i = 0; i < n; ++i) c.location.emplace_back(static_cast<double>(r[i]), 0.0);
        c.value = static_cast<double>(cf.value(r.data()));
        double H[9];
        std::vector<double> rd(r.begin(), r.end());
        cf.hess(rd.data(), H);
        MorseData m = classify_hessian(H, n, opt.morse_tol);
        c.morse = m.morse;
        c.index = m.index;
    } else {
        for (auto& v : p) c.location.emplace_back(static_cast<double>(v.real()), static_cast<double>(v.imag()));
        cld val = cf.value(p.data());
        c.value = {static_cast<double>(val.real()), static_cast<double>(val.imag())};
    }
    return c;
}

std::vector<CriticalPoint> critical_points(const Polynomial& f, const CritOptions& opt) {
    const int n = f.nvars();
    if (n < 1 || n > 3) throw Error(ErrorCode::ParseError, "critical points need 1 to 3 variables");
    Solver s(f);
    if (n == 1) solve1(s);
    else if (n == 2) solve2(s);
    else solve3(s);

    std::vector<CriticalPoint> out;
    for (auto& p : s.found) out.push_back(make_critical_point(s.cf, p, opt));

    std::stable_sort(out.begin(), out.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
        if (a.real != b.real) return a.real;
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return out;
}

std::vector<CriticalPoint> critical_points(const PolynomialF& f, const CritOptions& opt) {
    return critical_points(to_exact(f), opt);
}

Passport passport(const std::vector<CriticalPoint>& pts, int nvars) {
    Passport p(nvars + 1, 0);
    for (auto& c : pts) {
        if (!c.real) continue;
        if (!c.morse) throw Error(ErrorCode::NotMorse, "real critical point with degenerate Hessian");
        p[c.index]++;
    }
    return p;
}

Passport passport(const Polynomial& f, const CritOptions& opt) { return passport(critical_points(f, opt), f.nvars()); }

int gradient_index(const Passport& p) {
    int s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) s += (i % 2 ? -1 : 1) * p[i];
    return s;
}

nlohmann::json critical_report(const Polynomial& f, const std::vector<CriticalPoint>& pts) {
    nlohmann::json points = nlohmann::json::array();
    bool morse = true;
    for (auto& c : pts) {
        nlohmann::json loc = nlohmann::json::array();
        for (auto& v : c.location) loc.push_back({v.real(), v.imag()});
        points.push_back({{"location", loc},
                          {"value", {c.value.real(), c.value.imag()}},
                          {"real", c.real},
                          {"index", c.real && c.morse ? nlohmann::json(c.index) : nlohmann::json(nullptr)}});
        if (c.real && !c.morse) morse = false;
    }
    nlohmann::json j{{"polynomial", to_string(f)}, {"points", points}, {"morse", morse}};
    if (morse) j["passport"] = passport(pts, f.nvars());
    else j["passport"] = nullptr;
    return j;
}

}  // namespace caustic
