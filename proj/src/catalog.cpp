#include "caustic/catalog.hpp"

#include <algorithm>
#include <regex>

#include "caustic/errors.hpp"

namespace caustic {

namespace {

const Polynomial X = Polynomial::variable(0), Y = Polynomial::variable(1), Z = Polynomial::variable(2);

Polynomial num(const Rational& q) { return Polynomial::constant(q); }
Polynomial num(long a, long b = 1) { return Polynomial::constant(Rational(a, b)); }

std::string rat_str(const Rational& q) { return q.get_str(); }

Rational rpow(const Rational& t, int e) {
    Rational r = 1;
    for (int i = 0; i < std::abs(e); ++i) r *= t;
    return e < 0 ? Rational(1 / r) : r;
}

void check(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::InvalidClassParameter, what);
}

std::string sign_char(int s) { return s < 0 ? "-" : "+"; }

}  // namespace

int SingularityClass::variables() const {
    return kind == ClassKind::P8_2 || kind == ClassKind::P8_1 ? 3 : 2;
}

bool SingularityClass::simple() const {
    return kind != ClassKind::P8_2 && kind != ClassKind::J10_3 && kind != ClassKind::P8_1;
}

int SingularityClass::k() const { return mu / 2; }

std::string SingularityClass::name() const {
    switch (kind) {
        case ClassKind::A:
            if (sign == 1 && sign_y == 1) return "A" + std::to_string(mu);
            return "A" + std::to_string(mu) + "(" + sign_char(sign) + "," + sign_char(sign_y) + ")";
        case ClassKind::Dminus: return "D" + std::to_string(mu) + "-";
        case ClassKind::Dplus: return "D" + std::to_string(mu) + "+";
        case ClassKind::Dodd: return (sign < 0 ? "-D" : "D") + std::to_string(mu);
        case ClassKind::E6: return sign < 0 ? "-E6" : "E6";
        case ClassKind::E7: return "E7";
        case ClassKind::E8: return "E8";
        case ClassKind::P8_2: return "P8_2";
        case ClassKind::J10_3: return "J10_3";
        case ClassKind::P8_1: return "P8_1";
    }
    return "?";
}

SingularityClass SingularityClass::A(int mu, int sx, int sy) {
    check(mu >= 1, "A needs mu >= 1");
    check(std::abs(sx) == 1 && std::abs(sy) == 1, "A signs are +1 or -1");
    // x -> -x removes the sign of an odd power
    if (mu % 2 == 0) sx = 1;
    return {ClassKind::A, mu, sx, sy, {}};
}

SingularityClass SingularityClass::Dminus(int mu) {
    check(mu % 2 == 0 && mu >= 4, "D- needs mu = 2k with k >= 2");
    return {ClassKind::Dminus, mu, 1, 1, {}};
}

SingularityClass SingularityClass::Dplus(int mu) {
    check(mu % 2 == 0 && mu >= 4, "D+ needs mu = 2k with k >= 2");
    return {ClassKind::Dplus, mu, 1, 1, {}};
}

SingularityClass SingularityClass::Dodd(int mu, int sign) {
    check(mu % 2 == 1 && mu >= 5, "odd D needs mu = 2k+1 with k >= 2");
    check(std::abs(sign) == 1, "sign is +1 or -1");
    return {ClassKind::Dodd, mu, sign, 1, {}};
}

SingularityClass SingularityClass::E6(int sign) {
    check(std::abs(sign) == 1, "sign is +1 or -1");
    return {ClassKind::E6, 6, sign, 1, {}};
}
SingularityClass SingularityClass::E7() { return {ClassKind::E7, 7, 1, 1, {}}; }
SingularityClass SingularityClass::E8() { return {ClassKind::E8, 8, 1, 1, {}}; }

SingularityClass SingularityClass::P8_2(Rational kappa) {
    check(kappa > 0 && kappa < 1, "P8_2 needs 0 < kappa < 1");
    return {ClassKind::P8_2, 8, 1, 1, kappa};
}

SingularityClass SingularityClass::J10_3(Rational alpha) {
    check(alpha > 0, "J10_3 needs alpha > 0");
    return {ClassKind::J10_3, 10, 1, 1, alpha};
}

SingularityClass SingularityClass::P8_1() { return {ClassKind::P8_1, 8, 1, 1, {}}; }

SingularityClass parse_class(const std::string& text) {
    static const std::regex re(R"(\s*(-?)([ADEJP])(\d+)([+-]?)(?:[_^](\d))?(?:\((.*)\))?\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw Error(ErrorCode::UnknownClass, "cannot parse class name '" + text + "'");
    const bool neg = m[1] == "-";
    const char letter = m[2].str()[0];
    const int mu = std::stoi(m[3]);
    const std::string suffix = m[4], upper = m[5], arg = m[6];
    auto unknown = [&] { return Error(ErrorCode::UnknownClass, "unknown class '" + text + "'"); };
    auto param = [&](const Rational& dflt) {
        if (arg.empty()) return dflt;
        std::string v = arg.substr(arg.find('=') == std::string::npos ? 0 : arg.find('=') + 1);
        try {
            Rational q(v, 10);
            q.canonicalize();
            return q;
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidClassParameter, "bad parameter '" + arg + "'");
        }
    };
    switch (letter) {
        case 'A': {
            if (!suffix.empty() || !upper.empty()) throw unknown();
            int sx = 1, sy = 1;
            if (!arg.empty()) {
                if (arg.size() != 3 || arg[1] != ',') throw Error(ErrorCode::InvalidClassParameter, "A signs look like (+,-)");
                sx = arg[0] == '-' ? -1 : 1;
                sy = arg[2] == '-' ? -1 : 1;
            }
            if (neg) sx = -sx, sy = -sy;
            return SingularityClass::A(mu, sx, sy);
        }
        case 'D':
            if (!upper.empty() || !arg.empty()) throw unknown();
            if (mu % 2 == 1) {
                if (!suffix.empty()) throw unknown();
                return SingularityClass::Dodd(mu, neg ? -1 : 1);
            }
            if (neg || suffix.empty()) throw unknown();
            return suffix == "-" ? SingularityClass::Dminus(mu) : SingularityClass::Dplus(mu);
        case 'E':
            if (!suffix.empty() || !upper.empty() || !arg.empty()) throw unknown();
            if (mu == 6) return SingularityClass::E6(neg ? -1 : 1);
            if (neg) throw unknown();
            if (mu == 7) return SingularityClass::E7();
            if (mu == 8) return SingularityClass::E8();
            throw unknown();
        case 'P':
            if (neg || mu != 8 || !suffix.empty()) throw unknown();
            if (upper == "2") return SingularityClass::P8_2(param(Rational(1, 20)));
            if (upper == "1" && arg.empty()) return SingularityClass::P8_1();
            throw unknown();
        case 'J':
            if (neg || mu != 10 || upper != "3" || !suffix.empty()) throw unknown();
            return SingularityClass::J10_3(param(Rational(1)));
    }
    throw unknown();
}

Polynomial normal_form(const SingularityClass& c) {
    const int k = c.k();
    switch (c.kind) {
        case ClassKind::A: return X.pow(c.mu + 1) * Rational(c.sign) + Y.pow(2) * Rational(c.sign_y);
        case ClassKind::Dminus: return X.pow(2) * Y - Y.pow(2 * k - 1);
        case ClassKind::Dplus: return X.pow(2) * Y + Y.pow(2 * k - 1);
        case ClassKind::Dodd: return (X.pow(2) * Y + Y.pow(2 * k)) * Rational(c.sign);
        case ClassKind::E6: return X.pow(3) + Y.pow(4) * Rational(c.sign);
        case ClassKind::E7: return X.pow(3) + X * Y.pow(3);
        case ClassKind::E8: return X.pow(3) + Y.pow(5);
        case ClassKind::P8_2: return (X - Z) * (X + Z) * (X * c.param - Z) - Y.pow(2) * Z;
        case ClassKind::J10_3: return X * (X + Y.pow(2)) * (X - Y.pow(2) * c.param);
        case ClassKind::P8_1: return X.pow(3) + Y.pow(3) + Z.pow(3);
    }
    return {};
}

DeformationFamily miniversal(const SingularityClass& c, bool shortened) {
    DeformationFamily d;
    d.base = normal_form(c);
    d.shortened = shortened;
    auto& m = d.monomials;
    m.push_back(num(1));
    switch (c.kind) {
        case ClassKind::A:
            for (int i = 1; i < c.mu; ++i) m.push_back(X.pow(i));
            break;
        case ClassKind::Dminus:
        case ClassKind::Dplus:
        case ClassKind::Dodd:
            m.push_back(X);
            for (int i = 1; i <= c.mu - 2; ++i) m.push_back(Y.pow(i));
            break;
        case ClassKind::E6: m.insert(m.end(), {X, Y, X * Y, Y.pow(2), X * Y.pow(2)}); break;
        case ClassKind::E7: m.insert(m.end(), {X, Y, X * Y, Y.pow(2), Y.pow(3), Y.pow(4)}); break;
        case ClassKind::E8: m.insert(m.end(), {X, Y, X * Y, Y.pow(2), X * Y.pow(2), Y.pow(3), X * Y.pow(3)}); break;
        case ClassKind::J10_3:
            m.insert(m.end(), {X, Y, X * Y, Y.pow(2), X * Y.pow(2), Y.pow(3), X * Y.pow(3), Y.pow(4), X * Y.pow(4)});
            break;
        case ClassKind::P8_2:
        case ClassKind::P8_1: m.insert(m.end(), {X, Y, Z, X * Y, X * Z, Y * Z, X * Y * Z}); break;
    }
    if (shortened) m.erase(m.begin());
    for (auto& p : m) p.declare(d.base.vars());
    return d;
}

int predicted_components(const SingularityClass& c) {
    const int k = c.k();
    switch (c.kind) {
        case ClassKind::A: return (c.mu + 2) / 2;
        case ClassKind::Dminus: return (k * k + k) / 2;
        case ClassKind::Dplus: return (k * k + 3 * k - 2) / 2;
        case ClassKind::Dodd: return (k * k + 3 * k) / 2;
        case ClassKind::E6: return 7;
        case ClassKind::E7: return 10;
        case ClassKind::E8: return 15;
        default: throw Error(ErrorCode::NotSimpleClass, c.name() + " is not simple");
    }
}

ComponentCount predicted_b1(const SingularityClass& c) {
    const int k = c.k();
    switch (c.kind) {
        case ClassKind::A: return {0, false};
        case ClassKind::Dminus: return {(k * k - k) / 2, false};
        case ClassKind::Dplus: return {(k * k - 3 * k + 2) / 2, false};
        case ClassKind::Dodd: return {(k * k - k) / 2, false};
        case ClassKind::E6: return {1, false};
        case ClassKind::E7: return {5, true};
        case ClassKind::E8: return {7, true};
        default: throw Error(ErrorCode::NotSimpleClass, c.name() + " is not simple");
    }
}

Polynomial d_product(int qdeg, int real_roots, int below, int s) {
    Polynomial q = num(1);
    for (int i = 1; i <= real_roots; ++i) q = q * (Y - num(2 * i - real_roots - 1));
    for (int l = 1; l <= (qdeg - real_roots) / 2; ++l) q = q * (Y.pow(2) + num(l * l));
    Polynomial f = (Y - num(2 * below - real_roots)) * (X.pow(2) + q * Rational(s));
    f.declare(kX | kY);
    return f;
}

Polynomial embed(const Polynomial& f0, const Polynomial& sub, const Polynomial& nf, const Polynomial& U,
                 const Polynomial& V, const Rational& kappa, const Rational& t, int wu, int wv, int d) {
    Polynomial g;
    const Polynomial diff = sub - nf;
    for (auto& [e, c] : diff.terms()) g.add_term(e, c * rpow(t, d - e[0] * wu - e[1] * wv));
    // simultaneous substitution through the spare variable z
    g = g.substitute(0, Z).substitute(1, V).substitute(2, U);
    Polynomial f = f0 + g * kappa;
    f.declare(kX | kY);
    return f;
}

Polynomial involution(const Polynomial& f) {
    Polynomial g = -f.substitute(0, -X);
    g.declare(f.vars());
    return g;
}

namespace {

Passport reversed(Passport p) { return {p[2], p[1], p[0]}; }

// D-series product recipes of the class with the given sign of Q; each entry is (R, j, passport).
struct DChoice {
    int real_roots, below;
    Passport passport;
};

std::vector<DChoice> d_choices(const SingularityClass& c) {
    std::vector<DChoice> out;
    const int k = c.k();
    switch (c.kind) {
        case ClassKind::Dminus:
            for (int m = 0; m < k; ++m)
                for (int h = 0; h <= m; ++h) out.push_back({2 * m, 2 * h, {m - h, m + 2, h}});
            break;
        case ClassKind::Dplus:
            for (int m = 0; m < k; ++m)
                for (int h = 0; h <= m; ++h) out.push_back({2 * m, 2 * h, {m - h, m, h}});
            for (int j = 1; j < 2 * (k - 1); j += 2)
                out.push_back({2 * (k - 1), j, {(2 * (k - 1) - j + 1) / 2, k, (j + 1) / 2}});
            break;
        case ClassKind::Dodd:
            for (int m = 0; m < k; ++m)
                for (int j = 1; j <= 2 * m + 1; j += 2)
                    out.push_back({2 * m + 1, j, {(2 * m + 1 - j) / 2, m + 1, (j - 1) / 2}});
            for (int j = 0; j < 2 * k; j += 2) out.push_back({2 * k - 1, j, {k - j / 2, k + 1, j / 2}});
            break;
        default: break;
    }
    return out;
}

std::vector<PerturbationRecipe> d_recipes(const SingularityClass& c) {
    std::vector<PerturbationRecipe> out;
    const int k = c.k();
    const bool odd = c.kind == ClassKind::Dodd;
    const int qdeg = odd ? 2 * k - 1 : 2 * k - 2;
    const int s = c.kind == ClassKind::Dminus ? -1 : 1;
    for (auto& ch : d_choices(c)) {
        PerturbationRecipe r;
        r.cls = c;
        r.polynomial = d_product(qdeg, ch.real_roots, ch.below, s);
        r.expected = ch.passport;
        if (odd && c.sign < 0) {
            r.polynomial = -r.polynomial;
            r.expected = reversed(r.expected);
        }
        r.parameters = {{"real_roots_of_Q", std::to_string(ch.real_roots)},
                        {"roots_below_line", std::to_string(ch.below)}};
        r.name = c.name() + " product " + passport_str(r.expected);
        r.source = std::string("zero set: line y = c crossing the curve x^2 ") + (s < 0 ? "= Q(y)" : "= -Q(y)") +
                   ", chosen number of real roots of Q and of roots below the line";
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<PerturbationRecipe> a_recipes(const SingularityClass& c) {
    std::vector<PerturbationRecipe> out;
    for (int R = c.mu; R >= 0; R -= 2) {
        // p' = (mu+1) * prod (x - r_i) * prod (x^2 + l^2), integrated exactly
        Polynomial d = num(c.mu + 1);
        for (int i = 1; i <= R; ++i) d = d * (X - num(2 * i - R - 1));
        for (int l = 1; l <= (c.mu - R) / 2; ++l) d = d * (X.pow(2) + num(l * l));
        Polynomial p;
        for (auto& [e, q] : d.terms()) p.add_term({static_cast<uint8_t>(e[0] + 1), 0, 0}, q / (e[0] + 1));
        PerturbationRecipe r;
        r.cls = c;
        r.polynomial = p * Rational(c.sign) + Y.pow(2) * Rational(c.sign_y);
        r.polynomial.declare(kX | kY);
        // signs of p'' alternate leftwards from the largest root, where it is the sign of x^(mu+1)
        const int up = c.sign > 0 ? (R + 1) / 2 : R / 2, down = R - up;
        r.expected = c.sign_y > 0 ? Passport{up, down, 0} : Passport{0, up, down};
        r.parameters = {{"real_critical_points", std::to_string(R)}};
        r.name = c.name() + " " + std::to_string(R) + " real";
        r.source = "one-variable perturbation with the chosen number of real critical points, plus the square";
        out.push_back(std::move(r));
    }
    return out;
}

// Scale of each secondary morsification: the largest of 1/5, 1/10, 1/20, ... for which
// the solved passport matched, found once by a bounded search and frozen here.
struct Scaled {
    Passport sub;
    int inv_t;
};

// D6- at the origin of x^3 + x*y^3 + x^2*y, where 4(x^2 y + x y^3) = U^2 V - V^5 with U = 2x + y^2, V = y
std::vector<PerturbationRecipe> e7_recipes(const SingularityClass& c) {
    static const Scaled kScales[] = {{{0, 2, 0}, 10}, {{1, 3, 0}, 80},  {{0, 3, 1}, 40},
                                     {{2, 4, 0}, 320}, {{1, 4, 1}, 10}, {{0, 4, 2}, 80}};
    std::vector<PerturbationRecipe> out;
    const Polynomial f0 = X.pow(3) + X * Y.pow(3) + X.pow(2) * Y;
    const SingularityClass d6 = SingularityClass::Dminus(6);
    for (auto& sub : d_recipes(d6)) {
        Rational t(1, 20);
        for (auto& sc : kScales)
            if (sc.sub == sub.expected) t = Rational(1, sc.inv_t);
        PerturbationRecipe r;
        r.cls = c;
        r.polynomial = embed(f0, sub.polynomial, normal_form(d6), X * Rational(2) + Y.pow(2), Y, Rational(1, 4), t, 2, 1, 5);
        r.expected = {sub.expected[0], sub.expected[1], sub.expected[2] + 1};
        r.parameters = {{"eps", "1"}, {"t", rat_str(t)}, {"D6- recipe", passport_str(sub.expected)}};
        r.name = "E7 via D6- " + passport_str(r.expected);
        r.source = "x^3 + x*y^3 + eps*x^2*y splits into D6- and a maximum; the D6- point is then morsified";
        out.push_back(r);
        if (r.expected[0] != 0) continue;
        r.polynomial = involution(r.polynomial);
        r.expected = reversed(r.expected);
        r.name = "E7 via D6-, mirrored " + passport_str(r.expected);
        r.source = "image of a D6- based morsification under f(x, y) -> -f(-x, y)";
        out.push_back(r);
    }
    PerturbationRecipe r;
    r.cls = c;
    r.polynomial = X.pow(3) + X * Y.pow(3) + X * Y * Rational(1, 10);
    r.polynomial.declare(kX | kY);
    r.expected = {0, 1, 0};
    r.parameters = {{"eps", "1/10"}};
    r.name = "E7 single saddle (0,1,0)";
    r.source = "x^3 + x*y^3 + eps*x*y with eps > 0";
    out.push_back(r);
    return out;
}

// E7 at the origin of x^3 + y^5 + s*x*y^3, in the chart (x, s*y); the split point is a
// maximum for s = 1 and a minimum for s = -1
std::vector<PerturbationRecipe> e8_recipes(const SingularityClass& c) {
    struct Choice {
        int s;
        Scaled e7;
    };
    static const Choice kChoices[] = {
        {1, {{0, 4, 3}, 160}}, {1, {{1, 4, 2}, 10}}, {-1, {{1, 4, 2}, 5}}, {1, {{3, 4, 0}, 40}},
        {-1, {{3, 4, 0}, 160}}, {1, {{0, 3, 2}, 40}}, {-1, {{0, 3, 2}, 5}}, {1, {{2, 3, 0}, 5}},
        {-1, {{2, 3, 0}, 40}}, {1, {{0, 2, 1}, 5}},  {1, {{1, 2, 0}, 5}},  {-1, {{1, 2, 0}, 5}},
        {1, {{0, 1, 0}, 5}},   {-1, {{0, 1, 0}, 5}},
    };
    std::vector<PerturbationRecipe> out;
    const SingularityClass e7 = SingularityClass::E7();
    const auto subs = e7_recipes(e7);
    for (auto& ch : kChoices) {
        const int s = ch.s;
        const Polynomial f0 = X.pow(3) + Y.pow(5) + X * Y.pow(3) * Rational(s);
        auto sub = std::find_if(subs.begin(), subs.end(), [&](auto& r) { return r.expected == ch.e7.sub; });
        const Rational t(1, ch.e7.inv_t);
        PerturbationRecipe r;
        r.cls = c;
        r.polynomial = embed(f0, sub->polynomial, normal_form(e7), X, Y * Rational(s), Rational(1), t, 3, 2, 9);
        r.expected = sub->expected;
        (s > 0 ? r.expected[2] : r.expected[0]) += 1;
        r.parameters = {{"eps", std::to_string(s)}, {"t", rat_str(t)}, {"E7 recipe", sub->name}};
        r.name = "E8 via E7 " + passport_str(r.expected);
        r.source = std::string("x^3 + y^5 + eps*x*y^3 splits into E7 and a ") + (s > 0 ? "maximum" : "minimum") +
                   "; the E7 point is then morsified";
        out.push_back(std::move(r));
    }
    PerturbationRecipe r;
    r.cls = c;
    r.polynomial = X.pow(3) + Y.pow(5) + X * Rational(1, 10) + Y * Rational(1, 100);
    r.polynomial.declare(kX | kY);
    r.expected = {0, 0, 0};
    r.parameters = {{"eps", "1/10"}, {"delta", "1/100"}};
    r.name = "E8 no real points (0,0,0)";
    r.source = "x^3 + y^5 + eps*x with eps > 0, made Morse by delta*y with delta > 0";
    out.push_back(r);
    return out;
}

// x^3 - x*y^2 + y^4 = y^4 - nf(y, x) has D4- at the origin and two minima;
// x^3 + x*y^2 + y^4 = y^4 + nf(y, x) has D4+ at the origin and two non-real points
std::vector<PerturbationRecipe> e6_recipes(const SingularityClass& c) {
    std::vector<PerturbationRecipe> out;
    const Rational t(1, 80);
    for (int s : {-1, 1}) {
        const SingularityClass d4 = s < 0 ? SingularityClass::Dminus(4) : SingularityClass::Dplus(4);
        const Polynomial f0 = X.pow(3) + X * Y.pow(2) * Rational(s) + Y.pow(4);
        for (auto& sub : d_recipes(d4)) {
            PerturbationRecipe r;
            r.cls = c;
            r.polynomial = embed(f0, sub.polynomial, normal_form(d4), Y, X, Rational(s), t, 1, 1, 3);
            r.expected = s < 0 ? reversed(sub.expected) : sub.expected;
            if (s < 0) r.expected[0] += 2;
            r.parameters = {{"t", rat_str(t)}, {d4.name() + " recipe", passport_str(sub.expected)}};
            r.name = "E6 via " + d4.name() + " " + passport_str(r.expected);
            r.source = s < 0 ? "x^3 - x*y^2 + y^4 has D4- and two minima; the D4- point is then morsified"
                             : "x^3 + x*y^2 + y^4 has D4+ and two non-real points; the D4+ point is then morsified";
            out.push_back(std::move(r));
        }
    }
    if (c.sign < 0)
        for (auto& r : out) {
            r.polynomial = involution(r.polynomial);
            r.expected = reversed(r.expected);
            r.name = "-" + r.name;
            r.source = "image of the +E6 recipe under f(x, y) -> -f(-x, y): " + r.source;
        }
    return out;
}

}  // namespace

std::vector<PerturbationRecipe> recipes(const SingularityClass& c) {
    switch (c.kind) {
        case ClassKind::A: return a_recipes(c);
        case ClassKind::Dminus:
        case ClassKind::Dplus:
        case ClassKind::Dodd: return d_recipes(c);
        case ClassKind::E6: return e6_recipes(c);
        case ClassKind::E7: return e7_recipes(c);
        case ClassKind::E8: return e8_recipes(c);
        default: throw Error(ErrorCode::NotSimpleClass, c.name() + " has no recipe book");
    }
}

int class_gradient_index(const SingularityClass& c) {
    const Passport p = recipes(c).front().expected;
    return p[0] + p[2] - p[1];
}

nlohmann::json to_json(const PerturbationRecipe& r) {
    nlohmann::json params = nlohmann::json::object();
    for (auto& [k, v] : r.parameters) params[k] = v;
    return {{"class", r.cls.name()},
            {"name", r.name},
            {"polynomial", to_string(r.polynomial)},
            {"parameters", params},
            {"expected_passport", r.expected},
            {"source", r.source}};
}

nlohmann::json catalog_json(const SingularityClass& c) {
    nlohmann::json j;
    j["class"] = c.name();
    j["mu"] = c.mu;
    j["variables"] = c.variables();
    j["normal_form"] = to_string(normal_form(c));
    nlohmann::json mons = nlohmann::json::array();
    for (auto& m : miniversal(c).monomials) mons.push_back(to_string(m));
    j["miniversal"] = mons;
    if (c.simple()) {
        j["components"] = predicted_components(c);
        auto b = predicted_b1(c);
        j["b1"] = b.value;
        j["b1_lower_bound"] = b.lower_bound;
        j["gradient_index"] = class_gradient_index(c);
    }
    return j;
}

}  // namespace caustic
