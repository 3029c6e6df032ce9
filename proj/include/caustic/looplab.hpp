#pragma once

#include <array>
#include <complex>
#include <functional>
#include <json.hpp>
#include <string>
#include <vector>

#include "caustic/critlab.hpp"

namespace caustic {

struct FamilyParameter {
    std::string name;
    double lo = 0, hi = 1;
    bool loop = false;  // the endpoints give the same polynomial
};

// scale * fn(freq * t[param]) * poly, fn one of sin, cos, lin, const
struct FamilyTerm {
    Polynomial poly;
    Rational scale;
    std::string fn = "const";
    int param = 0;
    int freq = 1;
};

struct FamilySpec {
    std::string name;
    Polynomial base;
    std::vector<FamilyParameter> parameters;
    std::vector<FamilyTerm> terms;
    // Replaces the term list when set (families whose coefficients are not trigonometric).
    std::function<PolynomialF(const std::vector<double>&)> rule;

    // Parameters at a loop's upper end are folded back to its lower end, so loops close exactly.
    Polynomial at(std::vector<double> t) const;
};

nlohmann::json to_json(const FamilySpec& f);
FamilySpec family_from_json(const nlohmann::json& j);

// Loop parameters get n points k(hi-lo)/n, others n points spanning [lo, hi]. Row major,
// first parameter slowest.
std::vector<Polynomial> sample(const FamilySpec& f, const std::vector<int>& grid);

struct TrackOptions {
    CritOptions crit;
    int max_steps_per_unit = 1 << 14;
    // Solve every requested sample from scratch and match it against the continued points.
    // Off, samples come from Newton continuation certified by a constant count of distinct points.
    bool exact_samples = true;
};

struct TrackSample {
    double t = 0;
    bool refined = false;  // inserted by step halving
    std::vector<CriticalPoint> points;  // strand order: points[i] continues points[i] of the previous sample
};

struct TrackedPath {
    int param = 0;
    bool loop = false;
    std::vector<TrackSample> samples;
    // loop only: strand i ends on the start point permutation[i]
    std::vector<int> permutation;
    int halvings = 0;
};

// Follows every complex critical point while parameter `param` runs over its range in `steps`
// steps, the other parameters held at `fixed` (default: their lower ends). Steps are halved
// until each point moves less than half the minimal pairwise distance.
TrackedPath track(const FamilySpec& f, int param, int steps, std::vector<double> fixed = {},
                  const TrackOptions& opt = {}, const std::vector<CriticalPoint>* start = nullptr);

std::vector<int> real_strands(const TrackedPath& p, int index = -1);
Passport passport_at(const TrackedPath& p, std::size_t sample, int nvars);

using Configuration = std::vector<std::complex<double>>;

// Planar configurations (x + iy) of the given strands, one per sample.
std::vector<Configuration> configurations(const TrackedPath& p, const std::vector<int>& strands);

// Total argument increment of prod_{i != j} (z_i - z_j) over 2 pi, the closing step included.
int winding_number(const std::vector<Configuration>& loop);

// Cycle through the D4- point p of f: f - 3 delta^2 (sin tau (x - p1) + cos tau (y - p2)).
// delta is halved until every sample is Morse with a constant passport.
FamilySpec embedded_d4_loop(const Polynomial& f, const std::vector<Rational>& p, Rational delta, int steps = 64,
                            int ladder = 6);
// Checks that f has a D4- point at p: vanishing 1-jet and 2-jet, cubic with three real lines.
bool is_d4_minus_point(const Polynomial& f, const std::vector<Rational>& p);

// Built-in families: d4-basic, e7-fig8 (three), e8-fig10 (two).
std::vector<FamilySpec> named_families(const std::string& name);

nlohmann::json to_json(const TrackedPath& p);
std::string to_csv(const TrackedPath& p);
std::string to_svg(const TrackedPath& p);

struct TorusReport {
    double epsilon = 0, alpha = 0, amplitude = 0;
    int grid = 0;
    int samples = 0, good_samples = 0;  // Morse with passport (1,4,1)
    std::vector<int> windings_upper, windings_lower;  // one per loop of the other angle
    bool base_ok = false;  // two D4- points, one minimum and one maximum elsewhere
    bool ok = false;
    std::string error;
};

TorusReport j10_torus(double epsilon = 0.3, double alpha = 1, int grid = 32);
nlohmann::json to_json(const TorusReport& r);

// Rows: xi (the L axis), eta, zeta as linear forms in x, y, z.
std::array<std::array<double, 3>, 3> p8_adapted_coordinates(double kappa, double theta);
FamilySpec p8_klein_family(double kappa, double epsilon);  // parameters theta in [0, pi), tau

struct KleinReport {
    double kappa = 0, epsilon = 0;
    int grid = 0;
    int samples = 0, good_samples = 0;  // four real Morse points, passport (0,2,2,0)
    int tau_swaps = 0;                  // tau-loops exchanging the index-1 pair
    int index2_separated = 0;           // samples whose index-2 points lie on opposite sides of ker L
    double axis_angle_increment = 0;    // over the base loop
    bool axis_reversed = false;
    double max_kernel_distance = 0;  // of index-1 points
    double bound = 0;                // epsilon^(8/3)
    double max_index1_radius = 0, min_index2_radius = 0;
    bool ok = false;
    std::string error;
};

KleinReport p8_klein(double kappa = 0.05, double epsilon = 0.05, int grid = 64);
nlohmann::json to_json(const KleinReport& r);

}  // namespace caustic
