#include "caustic/polynomial.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>

#include "caustic/errors.hpp"
#include "caustic/kernels.hpp"

namespace caustic {

namespace {

template <class T, class K>
T convert(const K& c) {
    if constexpr (std::is_same_v<K, Rational> && !std::is_same_v<T, Rational>) return T(c.get_d());
    else return T(c);
}

bool is_zero_coef(const Rational& c) { return sgn(c) == 0; }
bool is_zero_coef(double c) { return c == 0.0; }

}  // namespace

template <class K>
Poly<K> Poly<K>::variable(int v) {
    Exponents e{0, 0, 0};
    e[v] = 1;
    return monomial(e, K(1), 1u << v);
}

template <class K>
Poly<K> Poly<K>::constant(const K& c, unsigned vars) {
    return monomial({0, 0, 0}, c, vars);
}

template <class K>
Poly<K> Poly<K>::monomial(const Exponents& e, const K& c, unsigned vars) {
    Poly p(vars);
    for (int k = 0; k < 3; ++k)
        if (e[k]) p.vars_ |= 1u << k;
    p.add_term(e, c);
    return p;
}

template <class K>
std::vector<int> Poly<K>::var_list() const {
    std::vector<int> v;
    for (int k = 0; k < 3; ++k)
        if (vars_ & (1u << k)) v.push_back(k);
    return v;
}

template <class K>
K Poly<K>::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? K(0) : it->second;
}

template <class K>
void Poly<K>::add_term(const Exponents& e, const K& c) {
    if (is_zero_coef(c)) return;
    for (int k = 0; k < 3; ++k)
        if (e[k]) vars_ |= 1u << k;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (is_zero_coef(it->second)) terms_.erase(it);
    }
}

template <class K>
int Poly<K>::degree() const {
    return terms_.empty() ? -1 : terms_.begin()->first[0] + terms_.begin()->first[1] + terms_.begin()->first[2];
}

template <class K>
int Poly<K>::degree_in(int v) const {
    int d = terms_.empty() ? -1 : 0;
    for (auto& [e, c] : terms_) d = std::max<int>(d, e[v]);
    return d;
}

template <class K>
Poly<K> Poly<K>::operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

template <class K>
Poly<K>& Poly<K>::operator+=(const Poly& o) {
    vars_ |= o.vars_;
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

template <class K>
Poly<K>& Poly<K>::operator-=(const Poly& o) {
    vars_ |= o.vars_;
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

template <class K>
Poly<K>& Poly<K>::operator*=(const K& c) {
    if (is_zero_coef(c)) terms_.clear();
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

template <class K>
Poly<K> Poly<K>::mul(const Poly& o) const {
    Poly r(vars_ | o.vars_);
    for (auto& [ea, ca] : terms_)
        for (auto& [eb, cb] : o.terms_) {
            Exponents e;
            for (int k = 0; k < 3; ++k) {
                int s = ea[k] + eb[k];
                if (s > 255) throw Error(ErrorCode::ParseError, "exponent overflow");
                e[k] = static_cast<uint8_t>(s);
            }
            r.add_term(e, ca * cb);
        }
    return r;
}

template <class K>
Poly<K> Poly<K>::pow(int e) const {
    Poly r = constant(K(1), vars_), b = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * b;
        if (e > 1) b = b * b;
    }
    return r;
}

template <class K>
Poly<K> Poly<K>::derivative(int v) const {
    Poly r(vars_);
    for (auto& [e, c] : terms_) {
        if (!e[v]) continue;
        Exponents f = e;
        f[v]--;
        r.add_term(f, c * K(e[v]));
    }
    return r;
}

template <class K>
Poly<K> Poly<K>::substitute(int v, const Poly& q) const {
    Poly r((vars_ & ~(1u << v)) | q.vars_);
    std::vector<Poly> pw{constant(K(1))};
    for (auto& [e, c] : terms_) {
        while (static_cast<int>(pw.size()) <= e[v]) pw.push_back(pw.back() * q);
        Exponents f = e;
        f[v] = 0;
        r += monomial(f, c) * pw[e[v]];
    }
    r.vars_ = (vars_ & ~(1u << v)) | q.vars_;
    for (auto& [e, c] : r.terms_)
        for (int k = 0; k < 3; ++k)
            if (e[k]) r.vars_ |= 1u << k;
    return r;
}

template <class K>
template <class T>
T Poly<K>::eval(std::span<const T> point) const {
    std::vector<int> vl = var_list();
    if (point.size() != vl.size()) throw Error(ErrorCode::ParseError, "point dimension does not match the variables");
    T s(0);
    for (auto& [e, c] : terms_) {
        T m = convert<T>(c);
        for (std::size_t i = 0; i < vl.size(); ++i)
            for (int j = 0; j < e[vl[i]]; ++j) m *= point[i];
        s += m;
    }
    return s;
}

template class Poly<Rational>;
template class Poly<double>;
template Rational Poly<Rational>::eval<Rational>(std::span<const Rational>) const;
template double Poly<double>::eval<double>(std::span<const double>) const;
template std::complex<double> Poly<double>::eval<std::complex<double>>(std::span<const std::complex<double>>) const;

template <class K>
std::vector<Poly<K>> gradient(const Poly<K>& p) {
    std::vector<Poly<K>> g;
    for (int v : p.var_list()) {
        Poly<K> d = p.derivative(v);
        d.declare(p.vars());
        g.push_back(d);
    }
    return g;
}

template <class K>
std::vector<std::vector<Poly<K>>> hessian(const Poly<K>& p) {
    std::vector<std::vector<Poly<K>>> h;
    for (auto& gi : gradient(p)) {
        std::vector<Poly<K>> row;
        for (int v : p.var_list()) {
            Poly<K> d = gi.derivative(v);
            d.declare(p.vars());
            row.push_back(d);
        }
        h.push_back(row);
    }
    return h;
}

template std::vector<Polynomial> gradient(const Polynomial&);
template std::vector<PolynomialF> gradient(const PolynomialF&);
template std::vector<std::vector<Polynomial>> hessian(const Polynomial&);
template std::vector<std::vector<PolynomialF>> hessian(const PolynomialF&);

// ---------------------------------------------------------------- conversions

PolynomialF to_float(const Polynomial& p) {
    PolynomialF r(p.vars());
    for (auto& [e, c] : p.terms()) r.add_term(e, to_double(c));
    return r;
}

Rational exact_rational(double v) {
    if (!std::isfinite(v)) throw Error(ErrorCode::ParseError, "non-finite coefficient");
    return Rational(v);
}

Polynomial to_exact(const PolynomialF& p) {
    Polynomial r(p.vars());
    for (auto& [e, c] : p.terms()) r.add_term(e, exact_rational(c));
    return r;
}

double to_double(const Rational& q) {
    double d = q.get_d();
    double best = d;
    Rational err = abs(q - Rational(d));
    for (double c : {std::nextafter(d, -INFINITY), std::nextafter(d, INFINITY)}) {
        if (!std::isfinite(c)) continue;
        Rational e = abs(q - Rational(c));
        int cmpv = cmp(e, err);
        // ties go to the even significand
        if (cmpv < 0 || (cmpv == 0 && (std::bit_cast<uint64_t>(c) & 1) == 0)) err = e, best = c;
    }
    return best;
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) { return p.eval<Rational>(point); }

double evaluate(const Polynomial& p, std::span<const double> point) {
    std::vector<Rational> q;
    for (double v : point) q.push_back(exact_rational(v));
    return to_double(p.eval<Rational>(q));
}

double evaluate(const PolynomialF& p, std::span<const double> point) { return evaluate(to_exact(p), point); }

std::complex<double> evaluate(const PolynomialF& p, std::span<const std::complex<double>> point) {
    return p.eval<std::complex<double>>(point);
}

// ---------------------------------------------------------------- text

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Polynomial run() {
        Polynomial p = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& m) {
        throw Error(ErrorCode::ParseError, m + " at offset " + std::to_string(i_));
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    Polynomial expr() {
        Polynomial p = term();
        for (;;) {
            if (eat('+')) p += term();
            else if (eat('-')) p -= term();
            else return p;
        }
    }
    Polynomial term() {
        Polynomial p = unary();
        for (;;) {
            if (eat('*')) {
                p = p * unary();
            } else if (eat('/')) {
                Polynomial d = unary();
                if (d.degree() != 0) fail("division by a non-constant");
                p *= Rational(1) / d.coeff({0, 0, 0});
            } else {
                skip();
                if (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '(' || s_[i_] == '.'))
                    fail("implicit multiplication is not allowed");
                return p;
            }
        }
    }
    Polynomial unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    Polynomial power() {
        Polynomial b = atom();
        if (eat('^')) {
            skip();
            std::size_t st = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (st == i_) fail("exponent must be a non-negative integer");
            if (i_ - st > 3) fail("exponent too large");
            b = b.pow(std::stoi(s_.substr(st, i_ - st)));
        }
        return b;
    }
    Polynomial atom() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            Polynomial p = expr();
            if (!eat(')')) fail("missing ')'");
            return p;
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            ++i_;
            if (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) fail("unknown identifier");
            return Polynomial::variable(c - 'x');
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return Polynomial::constant(number());
        fail("unexpected '" + std::string(1, c) + "'");
    }
    Rational number() {
        std::string digits;
        int frac = 0;
        bool dot = false;
        while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || (s_[i_] == '.' && !dot))) {
            if (s_[i_] == '.') dot = true;
            else {
                digits += s_[i_];
                if (dot) ++frac;
            }
            ++i_;
        }
        if (digits.empty()) fail("malformed number");
        int exp10 = 0;
        if (i_ < s_.size() && (s_[i_] == 'e' || s_[i_] == 'E')) {
            ++i_;
            int sg = 1;
            if (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-')) sg = s_[i_++] == '-' ? -1 : 1;
            std::size_t st = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (st == i_ || i_ - st > 4) fail("malformed exponent");
            exp10 = sg * std::stoi(s_.substr(st, i_ - st));
        }
        mpz_class num(digits, 10), ten = 10, scale;
        int e = exp10 - frac;
        mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(std::abs(e)));
        Rational r = e >= 0 ? Rational(num * scale) : Rational(num, scale);
        r.canonicalize();
        return r;
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

std::string monomial_text(const Exponents& e) {
    std::string s;
    for (int k = 0; k < 3; ++k) {
        if (!e[k]) continue;
        if (!s.empty()) s += "*";
        s += static_cast<char>('x' + k);
        if (e[k] > 1) s += "^" + std::to_string(e[k]);
    }
    return s;
}

std::string coef_text(const Rational& c) { return c.get_str(); }

std::string coef_text(double c) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", c);
    return buf;
}

template <class K>
std::string render(const Poly<K>& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto& [e, c] : p.terms()) {
        bool neg = c < 0;
        K a = neg ? K(-c) : c;
        if (first) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        first = false;
        std::string m = monomial_text(e);
        if (m.empty()) s += coef_text(a);
        else if (a == K(1)) s += m;
        else s += coef_text(a) + "*" + m;
    }
    return s;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text) { return Parser(text).run(); }
std::string to_string(const Polynomial& p) { return render(p); }
std::string to_string(const PolynomialF& p) { return render(p); }

// ---------------------------------------------------------------- compiled

CompiledPoly::CompiledPoly(const PolynomialF& p) : nv_(p.nvars()) {
    std::vector<int> vl = p.var_list();
    for (auto& [e, c] : p.terms()) {
        coef_.push_back(c);
        for (int i = 0; i < 3; ++i) exps_.push_back(i < nv_ ? e[vl[i]] : 0);
    }
}

template <class T>
T CompiledPoly::value(const T* pt) const {
    T s(0);
    for (std::size_t t = 0; t < coef_.size(); ++t) {
        T m(coef_[t]);
        for (int k = 0; k < nv_; ++k)
            for (int j = 0; j < exps_[t * 3 + k]; ++j) m *= pt[k];
        s += m;
    }
    return s;
}

namespace {

template <class T>
T ipow(T b, int e) {
    T r(1);
    for (int j = 0; j < e; ++j) r *= b;
    return r;
}

}  // namespace

template <class T>
void CompiledPoly::grad(const T* pt, T* g) const {
    for (int k = 0; k < nv_; ++k) g[k] = T(0);
    for (std::size_t t = 0; t < coef_.size(); ++t) {
        const uint8_t* e = &exps_[t * 3];
        for (int k = 0; k < nv_; ++k) {
            if (!e[k]) continue;
            T m(coef_[t] * e[k]);
            for (int l = 0; l < nv_; ++l) m *= ipow(pt[l], e[l] - (l == k));
            g[k] += m;
        }
    }
}

template <class T>
void CompiledPoly::hess(const T* pt, T* h) const {
    for (int k = 0; k < nv_ * nv_; ++k) h[k] = T(0);
    for (std::size_t t = 0; t < coef_.size(); ++t) {
        const uint8_t* e = &exps_[t * 3];
        for (int a = 0; a < nv_; ++a)
            for (int b = a; b < nv_; ++b) {
                int f[3] = {e[0], e[1], e[2]};
                double c = coef_[t];
                c *= f[a], f[a]--;
                if (c == 0.0) continue;
                c *= f[b], f[b]--;
                if (c == 0.0) continue;
                T m(c);
                for (int l = 0; l < nv_; ++l) m *= ipow(pt[l], f[l]);
                h[a * nv_ + b] += m;
            }
    }
    for (int a = 0; a < nv_; ++a)
        for (int b = 0; b < a; ++b) h[a * nv_ + b] = h[b * nv_ + a];
}

void CompiledPoly::values(const double* pts, std::size_t n, double* out) const {
    kernels().poly_eval(coef_.data(), exps_.data(), static_cast<int>(coef_.size()), nv_, pts, n, out);
}

#define CAUSTIC_COMPILED(T)                                 \
    template T CompiledPoly::value<T>(const T*) const;      \
    template void CompiledPoly::grad<T>(const T*, T*) const; \
    template void CompiledPoly::hess<T>(const T*, T*) const;
CAUSTIC_COMPILED(double)
CAUSTIC_COMPILED(long double)
CAUSTIC_COMPILED(std::complex<double>)
CAUSTIC_COMPILED(std::complex<long double>)
#undef CAUSTIC_COMPILED

}  // namespace caustic
