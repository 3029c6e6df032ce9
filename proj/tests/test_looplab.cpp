#include <doctest.h>

#include <cmath>
#include <numbers>

#include "caustic/errors.hpp"
#include "caustic/looplab.hpp"

using namespace caustic;

namespace {

constexpr double kPi = std::numbers::pi;

Polynomial P(const char* s) { return parse_polynomial(s); }

// the two real saddles closest to the origin
std::vector<int> local_saddles(const TrackedPath& p) {
    std::vector<int> out;
    for (int i : real_strands(p, 1)) {
        auto& l = p.samples.front().points[i].location;
        if (std::abs(l[0]) + std::abs(l[1]) < 0.5) out.push_back(i);
    }
    return out;
}

FamilySpec d4_basic_twice() {
    FamilySpec f = named_families("d4-basic").front();
    f.parameters[0].hi = 4 * kPi;
    return f;
}

}  // namespace

TEST_CASE("sampling") {
    FamilySpec f = named_families("d4-basic").front();
    auto s = sample(f, {4});
    REQUIRE(s.size() == 4);
    for (int k = 0; k < 4; ++k) CHECK(s[k] == f.at({k * kPi / 2}));
    CHECK(s[0] == P("3*x^2*y - y^3 - 3/100*y"));
    CHECK(f.at({2 * kPi}) == f.at({0}));  // loops close exactly

    FamilySpec c;
    c.base = P("x^3 - x + y^2");
    c.parameters = {{"t", 0, 1, true}};
    for (auto& q : sample(c, {5})) CHECK(q == c.base);

    FamilySpec two;
    two.base = P("x*(x + y^2 - 9/100)*(x - y^2 + 9/100)");
    two.parameters = {{"a", 0, 2 * kPi, true}, {"b", 0, 2 * kPi, true}};
    two.terms = {{P("x"), Rational(1, 1000), "sin", 0, 1}, {P("y"), Rational(1, 1000), "cos", 1, 1}};
    CHECK(sample(two, {8, 8}).size() == 64);
    CHECK_THROWS_AS(sample(two, {8}), Error);
    CHECK_THROWS_AS(sample(two, {8, 0}), Error);
}

TEST_CASE("basic D4 loop: monodromy, winding and closed forms") {
    FamilySpec f = named_families("d4-basic").front();
    TrackedPath p = track(f, 0, 256);
    auto saddles = real_strands(p, 1);
    REQUIRE(saddles.size() == 2);
    CHECK(p.permutation[saddles[0]] == saddles[1]);
    CHECK(p.permutation[saddles[1]] == saddles[0]);
    const double eps = 0.1;
    double worst = 0;
    for (auto& s : p.samples) {
        const double hx = eps * std::cos(s.t / 2), hy = eps * std::sin(s.t / 2);
        for (int i : saddles) {
            auto& l = s.points[i].location;
            worst = std::max(worst, std::min(std::hypot(l[0].real() - hx, l[1].real() - hy),
                                             std::hypot(l[0].real() + hx, l[1].real() + hy)));
        }
        CHECK(passport(s.points, 2) == Passport{0, 2, 0});
    }
    CHECK(worst < 1e-9);
    CHECK(winding_number(configurations(p, saddles)) == 1);

    // twice around: the square of a transposition, winding 2
    TrackedPath q = track(d4_basic_twice(), 0, 512);
    for (std::size_t i = 0; i < q.permutation.size(); ++i) CHECK(q.permutation[i] == static_cast<int>(i));
    CHECK(winding_number(configurations(q, real_strands(q, 1))) == 2);

    // reversal negates
    auto conf = configurations(p, saddles);
    std::reverse(conf.begin(), conf.end());
    CHECK(winding_number(conf) == -1);
}

TEST_CASE("constant loop and winding errors") {
    FamilySpec c;
    c.base = P("x^3 - 3*x + y^3 - 3*y");
    c.parameters = {{"t", 0, 1, true}};
    TrackedPath p = track(c, 0, 8);
    for (std::size_t i = 0; i < p.permutation.size(); ++i) CHECK(p.permutation[i] == static_cast<int>(i));
    CHECK(winding_number(configurations(p, real_strands(p))) == 0);

    const Configuration a{{0, 0}, {1, 0}};
    CHECK(winding_number({a, a, a}) == 0);
    // a pair turning half way around in two steps of pi/2
    const Configuration b{{0, 0}, {0, 1}}, d{{0, 0}, {-1, 0}};
    try {
        winding_number({a, b, d, b});
        FAIL("expected StepTooCoarse");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::StepTooCoarse);
    }
    try {
        winding_number({Configuration{{1, 1}, {1, 1}}});
        FAIL("expected Collision");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Collision);
    }
    CHECK_THROWS_AS(winding_number({Configuration{{1, 1}}}), Error);
    // the basic loop's saddles sampled at quarter turns: rejected rather than miscounted
    std::vector<Configuration> coarse;
    for (int k = 0; k < 4; ++k) {
        auto z = std::polar(0.1, k * kPi / 4);
        coarse.push_back({z, -z});
    }
    CHECK_THROWS_AS(winding_number(coarse), Error);
}

TEST_CASE("embedded D4 loops") {
    const std::vector<Rational> o{Rational(0), Rational(0)};
    FamilySpec f = embedded_d4_loop(P("3*x^2*y - y^3"), o, Rational(1, 10));
    FamilySpec basic = named_families("d4-basic").front();
    for (double t : {0.0, 1.0, 2.5, 4.0}) CHECK(f.at({t}) == basic.at({t}));

    CHECK(is_d4_minus_point(P("(x^2 + y^3 - y^2)*(x - 2*y)"), o));
    CHECK(is_d4_minus_point(P("(x - 1)^3 - 3*(x - 1)*(y + 2)^2"), {Rational(1), Rational(-2)}));
    CHECK(!is_d4_minus_point(P("x^2*y + y^3"), o));  // D4+
    CHECK(!is_d4_minus_point(P("x^2*y"), o));        // not isolated
    CHECK(!is_d4_minus_point(P("3*x^2*y - y^3 + x^2"), o));
    CHECK_THROWS_AS(embedded_d4_loop(P("x^2 + y^2"), o, Rational(1, 10)), Error);
    try {
        embedded_d4_loop(P("x^2*y + y^3"), o, Rational(1, 10));
        FAIL("expected NotD4Point");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotD4Point);
    }
    // a loop far larger than the Morse points around the D4- point crosses the caustic
    try {
        embedded_d4_loop(P("(x^2 + y^3 - y^2)*(x - 2*y)"), o, Rational(1), 64, 0);
        FAIL("expected DeltaTooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DeltaTooLarge);
    }
    // the ladder shrinks delta until the loop stays in one component
    FamilySpec g = embedded_d4_loop(P("(x^2 + y^3 - y^2)*(x - 2*y)"), o, Rational(1), 64, 8);
    TrackedPath p = track(g, 0, 64);
    CHECK(passport_at(p, 0, 2) == Passport{0, 3, 2});
}

TEST_CASE("loops in E7 and E8 components") {
    const Passport e7[] = {{0, 3, 2}, {1, 3, 1}, {2, 3, 0}};
    const Passport e8[] = {{3, 3, 0}, {2, 3, 1}};
    auto check = [](const std::vector<FamilySpec>& fams, const Passport* want) {
        for (std::size_t i = 0; i < fams.size(); ++i) {
            CAPTURE(fams[i].name);
            TrackedPath p = track(fams[i], 0, 64);
            CHECK(passport_at(p, 0, 2) == want[i]);
            auto loc = local_saddles(p);
            REQUIRE(loc.size() == 2);
            CHECK(p.permutation[loc[0]] == loc[1]);
            CHECK(winding_number(configurations(p, loc)) == 1);
        }
    };
    auto f7 = named_families("e7-fig8");
    REQUIRE(f7.size() == 3);
    check(f7, e7);
    auto f8 = named_families("e8-fig10");
    REQUIRE(f8.size() == 2);
    check(f8, e8);
    CHECK_THROWS_AS(named_families("e9"), Error);
}

TEST_CASE("J10 torus on a small grid") {
    TorusReport r = j10_torus(0.3, 1, 16);
    CHECK(r.error.empty());
    CHECK(r.base_ok);
    CHECK(r.samples == 256);
    CHECK(r.good_samples == 256);
    CHECK(r.windings_upper == std::vector<int>(16, 1));
    CHECK(r.windings_lower == std::vector<int>(16, 1));
    CHECK(r.ok);
    CHECK(to_json(r)["ok"] == true);
}

TEST_CASE("P8 adapted coordinates") {
    for (double kappa : {0.0, 0.05, 0.1})
        for (double theta : {0.0, 0.4, 1.3, 2.9}) {
            CAPTURE(kappa);
            CAPTURE(theta);
            auto R = p8_adapted_coordinates(kappa, theta);
            CHECK(std::hypot(R[0][0], R[0][1], R[0][2]) == doctest::Approx(1));
            // eta, zeta do not see the L direction
            for (int i = 1; i < 3; ++i) CHECK(std::fabs(R[i][0] * R[0][0] + R[i][1] * R[0][1]) < 1e-15);
            // restriction of f_kappa to ker L equals 3 eta^2 zeta - zeta^3
            for (auto [u, w] : {std::pair{0.3, -0.7}, {1.0, 0.2}, {-0.5, 0.5}}) {
                double x = -std::sin(theta) * u, y = std::cos(theta) * u, z = w;
                double f = (x - z) * (x + z) * (kappa * x - z) - y * y * z;
                double eta = R[1][0] * x + R[1][1] * y + R[1][2] * z, zeta = R[2][0] * x + R[2][1] * y + R[2][2] * z;
                CHECK(f == doctest::Approx(3 * eta * eta * zeta - zeta * zeta * zeta).epsilon(1e-12));
            }
        }
    auto R = p8_adapted_coordinates(0, 0);
    CHECK(R[1][1] == doctest::Approx(1 / std::sqrt(3.0)));
    CHECK(R[2][2] == doctest::Approx(-1));
}

TEST_CASE("P8 Klein family") {
    KleinReport r = p8_klein(0.05, 0.05, 16);
    CHECK(r.error.empty());
    CHECK(r.samples == 256);
    CHECK(r.good_samples == 256);
    CHECK(r.tau_swaps == 16);
    CHECK(r.index2_separated == 256);
    CHECK(r.axis_reversed);
    CHECK(std::fabs(r.axis_angle_increment - kPi) < 1e-3);
    CHECK(r.max_kernel_distance <= 10 * r.bound);
    CHECK(r.ok);

    // index-1 points near +-eps^2 (0, cos tau/2, sin tau/2) in adapted coordinates
    const double kappa = 0.05, eps = 0.05, theta = 0.7;
    FamilySpec f = p8_klein_family(kappa, eps);
    TrackOptions opt;
    opt.exact_samples = false;
    auto start = critical_points(f.at({theta, 0}));
    TrackedPath p = track(f, 1, 32, {theta}, opt, &start);
    auto R = p8_adapted_coordinates(kappa, theta);
    double worst = 0;
    for (auto& s : p.samples) {
        if (s.t >= 2 * kPi) continue;
        for (int i : real_strands(p, 1)) {
            auto& l = s.points[i].location;
            double eta = 0, zeta = 0;
            for (int k = 0; k < 3; ++k) eta += R[1][k] * l[k].real(), zeta += R[2][k] * l[k].real();
            double a = std::cos(s.t / 2) * eps * eps, b = std::sin(s.t / 2) * eps * eps;
            worst = std::max(worst, std::min(std::hypot(eta - a, zeta - b), std::hypot(eta + a, zeta + b)) / (eps * eps));
        }
    }
    CHECK(worst < 0.1);
}

TEST_CASE("family and path export") {
    FamilySpec f = named_families("d4-basic").front();
    FamilySpec g = family_from_json(to_json(f));
    for (double t : {0.0, 0.3, 5.0}) CHECK(g.at({t}) == f.at({t}));
    auto j = nlohmann::json::parse(R"({"base": "3*x^2*y - y^3", "parameters": [{"name": "tau", "lo": 0, "hi": "2pi", "loop": true}],
        "terms": [{"poly": "x", "scale": "-3/100", "fn": "sin"}, {"poly": "y", "scale": "-3/100", "fn": "cos"}]})");
    FamilySpec h = family_from_json(j);
    CHECK(h.parameters[0].hi == doctest::Approx(2 * kPi));
    CHECK(h.at({1.0}) == f.at({1.0}));
    CHECK_THROWS_AS(family_from_json(nlohmann::json::parse(R"({"base": "x", "parameters": []})")), Error);
    CHECK_THROWS_AS(family_from_json(nlohmann::json::parse(
                        R"({"base": "x", "parameters": [{"lo": 0, "hi": 1}], "terms": [{"poly": "y", "fn": "tan"}]})")),
                    Error);

    TrackedPath p = track(f, 0, 32);
    auto pj = to_json(p);
    CHECK(pj["samples"].size() == p.samples.size());
    std::string csv = to_csv(p);
    CHECK(csv.rfind("t,refined,strand,real,index,x_re,x_im,y_re,y_im", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(1 + 4 * p.samples.size()));
    std::string svg = to_svg(p);
    CHECK(svg.find("<polyline") != std::string::npos);
}
