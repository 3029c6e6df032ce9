#pragma once

#include <complex>
#include <json.hpp>
#include <vector>

#include "caustic/catalog.hpp"
#include "caustic/polynomial.hpp"
#include "caustic/passport.hpp"

namespace caustic {

struct CriticalPoint {
    std::vector<std::complex<double>> location;
    std::complex<double> value;
    bool real = false;
    bool morse = true;  // meaningful for real points
    int index = -1;     // Morse index of a real Morse point
};

struct CritOptions {
    double real_tol = 1e-8;   // |Im| <= real_tol * (1 + |Re|) per coordinate
    double morse_tol = 1e-8;  // |det H| > morse_tol * product of Hessian row norms
};

// All complex critical points of f (1 to 3 variables). Real points first, sorted by
// value; then non-real points. Throws DegenerateCriticalPoint when a critical point
// is not isolated-simple, EliminationFailure when elimination breaks down.
std::vector<CriticalPoint> critical_points(const Polynomial& f, const CritOptions& opt = {});
std::vector<CriticalPoint> critical_points(const PolynomialF& f, const CritOptions& opt = {});

// Counts of real critical points by Morse index; throws NotMorse.
Passport passport(const std::vector<CriticalPoint>& pts, int nvars);
Passport passport(const Polynomial& f, const CritOptions& opt = {});
int gradient_index(const Passport& p);

// Morse data of a real symmetric matrix (n <= 3).
struct MorseData {
    bool morse;
    int index;
};
MorseData classify_hessian(const double* h, int n, double tol);

// {polynomial, points:[{location, value, real, index}], passport, morse}
nlohmann::json critical_report(const Polynomial& f, const std::vector<CriticalPoint>& pts);

// Newton on grad f = 0 from a complex start point; returns false if it does not settle.
bool polish_critical(const CompiledPoly& f, const CompiledPoly& absf, std::vector<std::complex<long double>>& p,
                     int max_iter = 60);
// Reality test, real-slice polish and Morse data of a polished point.
CriticalPoint make_critical_point(const CompiledPoly& f, const std::vector<std::complex<long double>>& p,
                                  const CritOptions& opt = {});

struct RecipeCheck {
    std::string name;
    Passport expected, computed;
    int complex_points = 0;  // all critical points found over C
    int gradient_index = 0;
    bool ok = false;
    std::string error;
};

struct RecipeReport {
    SingularityClass cls;
    std::vector<RecipeCheck> checks;
    int distinct = 0;    // distinct computed passports
    int predicted = 0;   // Table value for the class
    bool ok = false;     // every check passed, counts agree, common gradient index
};

// Solves every recipe of the class. Throws RecipeMismatch naming the first offending
// recipe unless collect_only is set.
RecipeReport verify_recipes(const SingularityClass& c, bool collect_only = false, const CritOptions& opt = {});
nlohmann::json to_json(const RecipeReport& r);

}  // namespace caustic
