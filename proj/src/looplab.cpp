#include "caustic/looplab.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "caustic/errors.hpp"

namespace caustic {

namespace {

using cld = std::complex<long double>;
using cpoint = std::vector<cld>;

constexpr double kPi = std::numbers::pi;

CompiledPoly abs_compiled(const Polynomial& f) {
    PolynomialF a(f.vars());
    for (auto& [e, c] : f.terms()) a.add_term(e, std::fabs(c.get_d()));
    return CompiledPoly(a);
}

long double dist(const cpoint& a, const cpoint& b) {
    long double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
    return std::sqrt(s);
}

long double min_pairwise(const std::vector<cpoint>& pts) {
    long double d = INFINITY;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::min(d, dist(pts[i], pts[j]));
    return d;
}

cpoint to_cpoint(const CriticalPoint& c) {
    cpoint p;
    for (auto& v : c.location) p.emplace_back(v.real(), v.imag());
    return p;
}

double eval_fn(const std::string& fn, double t) {
    if (fn == "sin") return std::sin(t);
    if (fn == "cos") return std::cos(t);
    if (fn == "lin") return t;
    return 1;
}

double parse_bound(const nlohmann::json& v) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s.size() >= 2 && s.substr(s.size() - 2) == "pi") {
            std::string head = s.substr(0, s.size() - 2);
            if (!head.empty() && head.back() == '*') head.pop_back();
            double k = head.empty() ? 1 : std::stod(head);
            return k * kPi;
        }
        return std::stod(s);
    }
    throw Error(ErrorCode::InvalidFamily, "parameter bound must be a number or '<k>pi'");
}

// Nearest-neighbour bijection from `from` onto `to`; every match must be closer than `bound`.
bool nearest_bijection(const std::vector<cpoint>& from, const std::vector<cpoint>& to, long double bound,
                       std::vector<int>& match) {
    if (from.size() != to.size()) return false;
    match.assign(from.size(), -1);
    std::vector<bool> used(to.size(), false);
    for (std::size_t i = 0; i < from.size(); ++i) {
        long double best = INFINITY;
        int bj = -1;
        for (std::size_t j = 0; j < to.size(); ++j) {
            long double d = dist(from[i], to[j]);
            if (d < best) best = d, bj = static_cast<int>(j);
        }
        if (bj < 0 || !(best < bound) || used[bj]) return false;
        used[bj] = true;
        match[i] = bj;
    }
    return true;
}

}  // namespace

Polynomial FamilySpec::at(std::vector<double> t) const {
    t.resize(parameters.size());
    for (std::size_t i = 0; i < parameters.size(); ++i) {
        auto& p = parameters[i];
        if (p.loop && std::fabs(t[i] - p.hi) <= 1e-12 * (1 + std::fabs(p.hi))) t[i] = p.lo;
    }
    Polynomial out = base;
    if (rule) {
        out += to_exact(rule(t));
        return out;
    }
    for (auto& term : terms) {
        if (term.fn == "const") {
            out += term.poly * term.scale;
            continue;
        }
        double c = eval_fn(term.fn, term.freq * t.at(term.param));
        out += term.poly * (term.scale * exact_rational(c));
    }
    return out;
}

nlohmann::json to_json(const FamilySpec& f) {
    nlohmann::json j;
    j["name"] = f.name;
    j["base"] = to_string(f.base);
    j["parameters"] = nlohmann::json::array();
    for (auto& p : f.parameters) j["parameters"].push_back({{"name", p.name}, {"lo", p.lo}, {"hi", p.hi}, {"loop", p.loop}});
    j["terms"] = nlohmann::json::array();
    for (auto& t : f.terms)
        j["terms"].push_back({{"poly", to_string(t.poly)},
                              {"scale", t.scale.get_str()},
                              {"fn", t.fn},
                              {"param", t.param},
                              {"freq", t.freq}});
    if (f.rule) j["rule"] = "builtin";
    return j;
}

FamilySpec family_from_json(const nlohmann::json& j) {
    try {
        FamilySpec f;
        f.name = j.value("name", "family");
        f.base = parse_polynomial(j.at("base").get<std::string>());
        for (auto& p : j.at("parameters")) {
            FamilyParameter q;
            q.name = p.value("name", "t");
            q.lo = parse_bound(p.at("lo"));
            q.hi = parse_bound(p.at("hi"));
            q.loop = p.value("loop", false);
            if (!(q.hi > q.lo)) throw Error(ErrorCode::InvalidFamily, "empty parameter range for " + q.name);
            f.parameters.push_back(q);
        }
        if (f.parameters.empty()) throw Error(ErrorCode::InvalidFamily, "a family needs a parameter");
        for (auto& t : j.value("terms", nlohmann::json::array())) {
            FamilyTerm q;
            q.poly = parse_polynomial(t.at("poly").get<std::string>());
            auto sc = t.value("scale", nlohmann::json("1"));
            if (sc.is_string()) q.scale = parse_polynomial(sc.get<std::string>()).coeff({0, 0, 0});
            else q.scale = exact_rational(sc.get<double>());
            q.fn = t.value("fn", "const");
            if (q.fn != "sin" && q.fn != "cos" && q.fn != "lin" && q.fn != "const")
                throw Error(ErrorCode::InvalidFamily, "unknown coefficient function " + q.fn);
            q.param = t.value("param", 0);
            q.freq = t.value("freq", 1);
            if (q.param < 0 || q.param >= static_cast<int>(f.parameters.size()))
                throw Error(ErrorCode::InvalidFamily, "term refers to a missing parameter");
            f.terms.push_back(q);
        }
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidFamily, e.what());
    }
}

std::vector<Polynomial> sample(const FamilySpec& f, const std::vector<int>& grid) {
    if (grid.size() != f.parameters.size()) throw Error(ErrorCode::InvalidFamily, "one resolution per parameter");
    for (int g : grid)
        if (g <= 0) throw Error(ErrorCode::InvalidFamily, "resolution must be positive");
    std::vector<std::vector<double>> axes;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        auto& p = f.parameters[i];
        std::vector<double> a;
        for (int k = 0; k < grid[i]; ++k) {
            if (p.loop) a.push_back(p.lo + k * (p.hi - p.lo) / grid[i]);
            else a.push_back(grid[i] == 1 ? p.lo : p.lo + k * (p.hi - p.lo) / (grid[i] - 1));
        }
        axes.push_back(a);
    }
    std::vector<Polynomial> out;
    std::vector<int> idx(grid.size(), 0);
    while (true) {
        std::vector<double> t;
        for (std::size_t i = 0; i < grid.size(); ++i) t.push_back(axes[i][idx[i]]);
        out.push_back(f.at(t));
        int i = static_cast<int>(grid.size()) - 1;
        while (i >= 0 && ++idx[i] == grid[i]) idx[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

TrackedPath track(const FamilySpec& f, int param, int steps, std::vector<double> fixed, const TrackOptions& opt,
                  const std::vector<CriticalPoint>* start) {
    if (param < 0 || param >= static_cast<int>(f.parameters.size()))
        throw Error(ErrorCode::InvalidFamily, "no such parameter");
    if (steps <= 0) throw Error(ErrorCode::InvalidFamily, "steps must be positive");
    const FamilyParameter& P = f.parameters[param];
    const std::size_t given = fixed.size();
    fixed.resize(f.parameters.size());
    for (std::size_t i = given; i < fixed.size(); ++i) fixed[i] = f.parameters[i].lo;
    auto poly_at = [&](double t) {
        auto v = fixed;
        v[param] = t;
        return f.at(v);
    };

    TrackedPath out;
    out.param = param;
    out.loop = P.loop;

    std::vector<CriticalPoint> cur = start ? *start : critical_points(poly_at(P.lo), opt.crit);
    auto check_morse = [&](const std::vector<CriticalPoint>& pts, double t) {
        for (auto& c : pts)
            if (c.real && !c.morse)
                throw Error(ErrorCode::CausticHit, "non-Morse real critical point at t = " + std::to_string(t));
    };
    check_morse(cur, P.lo);
    out.samples.push_back({P.lo, false, cur});

    const double hmin = 1.0 / opt.max_steps_per_unit;
    const double h0 = (P.hi - P.lo) / steps;

    // One continuation step; returns false when the step has to be halved.
    auto advance = [&](double t1, bool grid_point, std::vector<CriticalPoint>& next) -> bool {
        Polynomial g = poly_at(t1);
        CompiledPoly cg(g), ag = abs_compiled(g);
        std::vector<cpoint> prev;
        for (auto& c : cur) prev.push_back(to_cpoint(c));
        const long double bound = prev.size() > 1 ? min_pairwise(prev) / 2 : INFINITY;
        std::vector<cpoint> moved;
        for (auto& p : prev) {
            cpoint q = p;
            if (!polish_critical(cg, ag, q)) return false;
            if (!(dist(p, q) < bound)) return false;
            moved.push_back(q);
        }
        if (grid_point && opt.exact_samples) {
            std::vector<CriticalPoint> exact;
            try {
                exact = critical_points(g, opt.crit);
            } catch (const Error& e) {
                throw Error(ErrorCode::CausticHit, std::string("sample is degenerate: ") + e.what());
            }
            std::vector<cpoint> ex;
            for (auto& c : exact) ex.push_back(to_cpoint(c));
            if (ex.size() != moved.size())
                throw Error(ErrorCode::MatchingAmbiguous, "the number of critical points changed along the family");
            std::vector<int> m;
            const long double eb = ex.size() > 1 ? min_pairwise(ex) / 2 : INFINITY;
            if (!nearest_bijection(moved, ex, eb, m)) return false;
            next.clear();
            for (int j : m) next.push_back(exact[j]);
        } else {
            next.clear();
            for (auto& q : moved) next.push_back(make_critical_point(cg, q, opt.crit));
        }
        for (std::size_t i = 0; i < next.size(); ++i) {
            if (next[i].real != cur[i].real || (next[i].real && next[i].index != cur[i].index))
                throw Error(ErrorCode::CausticHit, "a critical point changed type at t = " + std::to_string(t1));
        }
        check_morse(next, t1);
        return true;
    };

    double t = P.lo;
    for (int k = 1; k <= steps; ++k) {
        const double target = k == steps ? P.hi : P.lo + k * h0;
        double h = target - t;
        while (t < target) {
            double t1 = std::min(target, t + h);
            if (target - t1 < 1e-14 * (1 + std::fabs(target))) t1 = target;
            std::vector<CriticalPoint> next;
            if (advance(t1, t1 == target, next)) {
                cur = std::move(next);
                out.samples.push_back({t1, t1 != target, cur});
                t = t1;
            } else {
                h /= 2;
                ++out.halvings;
                if (h < hmin)
                    throw Error(ErrorCode::MatchingAmbiguous,
                                "step bound not reached at t = " + std::to_string(t) + " with maximal refinement");
            }
        }
    }

    if (P.loop) {
        std::vector<cpoint> first, last;
        for (auto& c : out.samples.front().points) first.push_back(to_cpoint(c));
        for (auto& c : out.samples.back().points) last.push_back(to_cpoint(c));
        long double scale = 1;
        for (auto& p : first)
            for (auto& v : p) scale = std::max(scale, std::abs(v));
        long double bound = first.size() > 1 ? std::min(min_pairwise(first) / 2, 1e-6L * scale) : 1e-6L * scale;
        if (!nearest_bijection(last, first, bound, out.permutation))
            throw Error(ErrorCode::MatchingAmbiguous, "loop does not close up");
    }
    return out;
}

std::vector<int> real_strands(const TrackedPath& p, int index) {
    std::vector<int> out;
    if (p.samples.empty()) return out;
    auto& pts = p.samples.front().points;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (pts[i].real && (index < 0 || pts[i].index == index)) out.push_back(static_cast<int>(i));
    return out;
}

Passport passport_at(const TrackedPath& p, std::size_t sample, int nvars) {
    return passport(p.samples.at(sample).points, nvars);
}

std::vector<Configuration> configurations(const TrackedPath& p, const std::vector<int>& strands) {
    std::vector<Configuration> out;
    for (auto& s : p.samples) {
        Configuration c;
        for (int i : strands) {
            auto& pt = s.points.at(i);
            if (!pt.real || pt.location.size() < 2)
                throw Error(ErrorCode::InvalidFamily, "configurations need real planar points");
            c.emplace_back(pt.location[0].real(), pt.location[1].real());
        }
        out.push_back(c);
    }
    return out;
}

int winding_number(const std::vector<Configuration>& loop) {
    if (loop.empty()) return 0;
    const std::size_t m = loop.front().size();
    if (m < 2) throw Error(ErrorCode::InvalidFamily, "winding numbers need at least two points");
    // prod_{i != j} (z_i - z_j) = prod_{i < j} -(z_i - z_j)^2 is symmetric, so no matching is needed
    auto arg = [&](const Configuration& c) {
        if (c.size() != m) throw Error(ErrorCode::InvalidFamily, "configurations of different sizes");
        long double a = 0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                auto d = c[i] - c[j];
                if (d == std::complex<double>(0, 0)) throw Error(ErrorCode::Collision, "two points coincide");
                a += std::numbers::pi_v<long double> + 2 * std::atan2((long double)d.imag(), (long double)d.real());
            }
        return a;
    };
    const long double two_pi = 2 * std::numbers::pi_v<long double>;
    long double total = 0, prev = arg(loop.front());
    for (std::size_t k = 1; k <= loop.size(); ++k) {
        long double a = arg(loop[k % loop.size()]);
        long double d = std::remainder(a - prev, two_pi);
        if (std::fabs(d) >= std::numbers::pi_v<long double> / 2)
            throw Error(ErrorCode::StepTooCoarse, "argument increment " + std::to_string((double)d) + " at step " +
                                                      std::to_string(k));
        total += d;
        prev = a;
    }
    return static_cast<int>(std::lround(total / two_pi));
}

bool is_d4_minus_point(const Polynomial& f, const std::vector<Rational>& p) {
    if (f.vars() != (kX | kY) || p.size() != 2) return false;
    const Polynomial X = Polynomial::variable(0), Y = Polynomial::variable(1);
    Polynomial g = f.substitute(0, X + Polynomial::constant(p[0], kX)).substitute(1, Y + Polynomial::constant(p[1], kY));
    Rational c[4];
    for (auto& [e, q] : g.terms()) {
        int d = e[0] + e[1];
        if (d == 1 || d == 2) return false;
        if (d == 3) c[e[1]] = q;  // x^(3-i) y^i
    }
    // three distinct real lines iff the binary cubic has positive discriminant
    const Rational &a = c[0], &b = c[1], &cc = c[2], &d = c[3];
    Rational disc = b * b * cc * cc - 4 * a * cc * cc * cc - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * cc * d;
    return sgn(disc) > 0;
}

namespace {

FamilySpec d4_loop_family(const std::string& name, const Polynomial& f, const std::vector<Rational>& p,
                          const Rational& delta) {
    FamilySpec s;
    s.name = name;
    s.base = f;
    s.parameters.push_back({"tau", 0, 2 * kPi, true});
    const Rational amp = -3 * delta * delta;
    s.terms.push_back({Polynomial::variable(0) - Polynomial::constant(p[0], kX), amp, "sin", 0, 1});
    s.terms.push_back({Polynomial::variable(1) - Polynomial::constant(p[1], kY), amp, "cos", 0, 1});
    return s;
}

}  // namespace

FamilySpec embedded_d4_loop(const Polynomial& f, const std::vector<Rational>& p, Rational delta, int steps,
                            int ladder) {
    if (!is_d4_minus_point(f, p)) throw Error(ErrorCode::NotD4Point, "no D4- point at the given location");
    std::string last;
    for (int rung = 0; rung <= ladder; ++rung, delta /= 2) {
        FamilySpec s = d4_loop_family("d4-loop", f, p, delta);
        try {
            TrackedPath path = track(s, 0, steps);
            if (real_strands(path, 1).size() >= 2) return s;
            last = "fewer than two saddles";
        } catch (const Error& e) {
            last = e.what();
        }
    }
    throw Error(ErrorCode::DeltaTooLarge, "no delta on the ladder gives a Morse loop (" + last + ")");
}

std::vector<FamilySpec> named_families(const std::string& name) {
    auto P = [](const char* s) { return parse_polynomial(s); };
    const std::vector<Rational> origin{Rational(0), Rational(0)};
    if (name == "d4-basic") return {d4_loop_family("d4-basic", P("3*x^2*y - y^3"), origin, Rational(1, 10))};
    if (name == "e7-fig8") {
        // the three line positions through the node of x^2 + y^3 - y^2
        return {d4_loop_family("e7-fig8-a", P("(x^2 + y^3 - y^2)*(x - 2*y)"), origin, Rational(1, 100)),
                d4_loop_family("e7-fig8-b", P("(x^2 + y^3 - y^2)*x"), origin, Rational(1, 100)),
                d4_loop_family("e7-fig8-c", P("(x^2 + y^3 - y^2)*(x + 2*y)"), origin, Rational(1, 100))};
    }
    if (name == "e8-fig10") {
        return {d4_loop_family("e8-fig10-a", P("x^3 + 1/4*x^2*y - 5/2*x*y^2 - 21/4*x*y^3 + 13/2*y^4 + y^5"), origin,
                               Rational(1, 500)),
                d4_loop_family("e8-fig10-b", P("x^3 + 1/2*x^2*y - 3/4*x*y^2 + 3/4*x*y^3 + 9/4*y^4 + y^5"), origin,
                               Rational(1, 500))};
    }
    throw Error(ErrorCode::InvalidFamily, "unknown family " + name);
}

nlohmann::json to_json(const TrackedPath& p) {
    nlohmann::json j;
    j["param"] = p.param;
    j["loop"] = p.loop;
    j["halvings"] = p.halvings;
    j["permutation"] = p.permutation;
    j["samples"] = nlohmann::json::array();
    for (auto& s : p.samples) {
        nlohmann::json pts = nlohmann::json::array();
        for (auto& c : s.points) {
            nlohmann::json loc = nlohmann::json::array();
            for (auto& v : c.location) loc.push_back({v.real(), v.imag()});
            pts.push_back({{"location", loc}, {"real", c.real}, {"index", c.index}});
        }
        j["samples"].push_back({{"t", s.t}, {"refined", s.refined}, {"points", pts}});
    }
    return j;
}

std::string to_csv(const TrackedPath& p) {
    std::ostringstream o;
    o.precision(17);
    const char* names[] = {"x", "y", "z"};
    std::size_t n = p.samples.empty() || p.samples[0].points.empty() ? 0 : p.samples[0].points[0].location.size();
    o << "t,refined,strand,real,index";
    for (std::size_t i = 0; i < n; ++i) o << ',' << names[i] << "_re," << names[i] << "_im";
    o << '\n';
    for (auto& s : p.samples)
        for (std::size_t k = 0; k < s.points.size(); ++k) {
            auto& c = s.points[k];
            o << s.t << ',' << s.refined << ',' << k << ',' << c.real << ',' << c.index;
            for (auto& v : c.location) o << ',' << v.real() << ',' << v.imag();
            o << '\n';
        }
    return o.str();
}

std::string to_svg(const TrackedPath& p) {
    auto strands = real_strands(p);
    double lo[2] = {INFINITY, INFINITY}, hi[2] = {-INFINITY, -INFINITY};
    for (auto& s : p.samples)
        for (int i : strands)
            for (int d = 0; d < 2 && d < (int)s.points[i].location.size(); ++d) {
                lo[d] = std::min(lo[d], s.points[i].location[d].real());
                hi[d] = std::max(hi[d], s.points[i].location[d].real());
            }
    const double W = 400, pad = 20;
    double span = std::max({hi[0] - lo[0], hi[1] - lo[1], 1e-300});
    auto X = [&](double v) { return pad + (v - lo[0]) / span * (W - 2 * pad); };
    auto Y = [&](double v) { return W - pad - (v - lo[1]) / span * (W - 2 * pad); };
    const char* colors[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a"};
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << W << "\">\n";
    for (int i : strands) {
        int idx = p.samples.front().points[i].index;
        o << "<polyline fill=\"none\" stroke-width=\"1.5\" stroke=\"" << colors[std::clamp(idx, 0, 3)] << "\" points=\"";
        for (auto& s : p.samples) {
            auto& l = s.points[i].location;
            o << X(l[0].real()) << ',' << (l.size() > 1 ? Y(l[1].real()) : W / 2) << ' ';
        }
        o << "\"/>\n";
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace caustic
