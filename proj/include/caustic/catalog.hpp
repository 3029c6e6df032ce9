#pragma once

#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "caustic/passport.hpp"
#include "caustic/polynomial.hpp"

namespace caustic {

enum class ClassKind { A, Dminus, Dplus, Dodd, E6, E7, E8, P8_2, J10_3, P8_1 };

struct SingularityClass {
    ClassKind kind = ClassKind::A;
    int mu = 1;
    int sign = 1;     // Dodd and E6; for A the sign of x^(mu+1)
    int sign_y = 1;   // A only: sign of y^2
    Rational param;   // alpha for J10_3, kappa for P8_2

    int variables() const;
    bool simple() const;
    int k() const;  // D series: mu = 2k or 2k + 1
    std::string name() const;
    bool operator==(const SingularityClass&) const = default;

    static SingularityClass A(int mu, int sx = 1, int sy = 1);
    static SingularityClass Dminus(int mu);
    static SingularityClass Dplus(int mu);
    static SingularityClass Dodd(int mu, int sign = 1);
    static SingularityClass E6(int sign = 1);
    static SingularityClass E7();
    static SingularityClass E8();
    static SingularityClass P8_2(Rational kappa = Rational(1, 20));
    static SingularityClass J10_3(Rational alpha = Rational(1));
    static SingularityClass P8_1();
};

// "A3", "A3(+,-)", "D6-", "D6+", "D5", "-D5", "E6", "-E6", "E7", "E8", "P8_2", "P8^1", "J10_3"
SingularityClass parse_class(const std::string& name);

struct DeformationFamily {
    Polynomial base;
    std::vector<Polynomial> monomials;
    bool shortened = false;
};

Polynomial normal_form(const SingularityClass& c);
DeformationFamily miniversal(const SingularityClass& c, bool shortened = false);

struct ComponentCount {
    int value;
    bool lower_bound;  // true when only a lower bound is known
};
int predicted_components(const SingularityClass& c);
ComponentCount predicted_b1(const SingularityClass& c);

struct PerturbationRecipe {
    SingularityClass cls;
    std::string name;
    std::vector<std::pair<std::string, std::string>> parameters;
    Polynomial polynomial;
    Passport expected;
    std::string source;
};

std::vector<PerturbationRecipe> recipes(const SingularityClass& c);
// m- + m+ - m0 of the first recipe
int class_gradient_index(const SingularityClass& c);

nlohmann::json to_json(const PerturbationRecipe& r);
nlohmann::json catalog_json(const SingularityClass& c);

// Product morsification (y - c)(x^2 + s Q(y)) of the D series: Q is monic with real
// roots at the odd integers -R+1, ..., R-1 and factors y^2 + l^2; c sits above j roots.
Polynomial d_product(int qdeg, int real_roots, int below, int s);

// f0 + kappa * g(U, V) where g is (sub - nf) rescaled by t along weights (wu, wv, d).
Polynomial embed(const Polynomial& f0, const Polynomial& sub, const Polynomial& nf, const Polynomial& U,
                 const Polynomial& V, const Rational& kappa, const Rational& t, int wu, int wv, int d);

// f(x, y) -> -f(-x, y)
Polynomial involution(const Polynomial& f);

}  // namespace caustic
