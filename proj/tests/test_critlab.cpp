#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "caustic/critlab.hpp"
#include "caustic/errors.hpp"

using namespace caustic;

namespace {

Polynomial P(const std::string& s) { return parse_polynomial(s); }

bool conjugation_closed(const std::vector<CriticalPoint>& pts) {
    for (auto& p : pts) {
        bool found = false;
        for (auto& q : pts) {
            double d = 0;
            for (std::size_t i = 0; i < p.location.size(); ++i) d = std::max(d, std::abs(std::conj(p.location[i]) - q.location[i]));
            found = found || d < 1e-9;
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("basic D4 family: closed forms") {
    const double eps = 0.1;
    for (double tau : {0.0, 0.7, 1.9, 3.0, 4.4, 6.0}) {
        const double s = std::sin(tau), c = std::cos(tau);
        // 3x^2 y - y^3 - 3 eps^2 (x sin tau + y cos tau), coefficients taken exactly from the doubles
        Polynomial f = P("3*x^2*y - y^3") - P("x") * exact_rational(3 * eps * eps * s) - P("y") * exact_rational(3 * eps * eps * c);
        auto pts = critical_points(f);
        REQUIRE(pts.size() == 4);
        CHECK(passport(pts, 2) == Passport{0, 2, 0});
        const double hx = eps * std::cos(tau / 2), hy = eps * std::sin(tau / 2);
        int matched = 0;
        for (auto& p : pts) {
            if (p.real) {
                CHECK(p.index == 1);
                double d = std::min(std::hypot(p.location[0].real() - hx, p.location[1].real() - hy),
                                    std::hypot(p.location[0].real() + hx, p.location[1].real() + hy));
                CHECK(d < 1e-9);
            } else {
                // +-i eps (-sin tau/2, cos tau/2)
                std::complex<double> ex(0, -eps * std::sin(tau / 2)), ey(0, eps * std::cos(tau / 2));
                double d = std::min(std::abs(p.location[0] - ex) + std::abs(p.location[1] - ey),
                                    std::abs(p.location[0] + ex) + std::abs(p.location[1] + ey));
                CHECK(d < 1e-9);
            }
            ++matched;
        }
        CHECK(matched == 4);
        CHECK(conjugation_closed(pts));
    }
}

TEST_CASE("small examples") {
    auto pts = critical_points(P("x^4 - 2*x^2 + y^2"));
    REQUIRE(pts.size() == 3);
    CHECK(passport(pts, 2) == Passport{2, 1, 0});
    for (auto& p : pts) {
        CHECK(p.real);
        double x = p.location[0].real();
        if (std::abs(x) < 1e-12) CHECK(p.index == 1);
        else {
            CHECK(std::abs(std::abs(x) - 1) < 1e-12);
            CHECK(p.index == 0);
            CHECK(p.value.real() == doctest::Approx(-1).epsilon(1e-14));
        }
    }
    CHECK(passport(P("x^2 + y^2")) == Passport{1, 0, 0});
    CHECK(passport(P("x^3 + x*y^3 + 1/10*x*y")) == Passport{0, 1, 0});
    for (int k = 2; k <= 5; ++k) {
        CAPTURE(k);
        auto f = P("x^2*y - y^" + std::to_string(2 * k - 1) + " - 1/10*y");
        auto q = critical_points(f);
        CHECK(q.size() == static_cast<std::size_t>(2 * k));
        CHECK(passport(q, 2) == Passport{0, 2, 0});
    }
    CHECK(passport(P("x")) == Passport{0, 0});  // no critical points
    CHECK(gradient_index(Passport{1, 3, 0}) == -2);
    CHECK(gradient_index(Passport{0, 4, 3}) == -1);
}

TEST_CASE("degenerate inputs are flagged") {
    // x^3 + y^5 + eps x: f_y = 5 y^4 has a four-fold root
    try {
        critical_points(P("x^3 + y^5 + 1/10*x"));
        FAIL("expected DegenerateCriticalPoint");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateCriticalPoint);
    }
    CHECK(passport(P("x^3 + y^5 + 1/10*x + 1/100*y")) == Passport{0, 0, 0});
    try {
        critical_points(P("(x^2 + y^2 - 1)^2"));
        FAIL("expected a failure");
    } catch (const Error& e) {
        CHECK((e.code() == ErrorCode::EliminationFailure || e.code() == ErrorCode::DegenerateCriticalPoint));
    }
    CHECK_THROWS_AS(critical_points(P("x^3 + y^2")), Error);
    CHECK(passport(P("x*y")) == Passport{0, 1, 0});
    CriticalPoint flat;
    flat.real = true;
    flat.morse = false;
    try {
        passport({flat}, 2);
        FAIL("expected NotMorse");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotMorse);
    }
}

TEST_CASE("hessian classification") {
    const double a[] = {1, 0, 0, 2};
    CHECK(classify_hessian(a, 2, 1e-8).index == 0);
    const double b[] = {1, 3, 3, 1};
    CHECK(classify_hessian(b, 2, 1e-8).index == 1);
    const double c[] = {1, 1, 1, 1};
    CHECK(!classify_hessian(c, 2, 1e-8).morse);
    const double d[] = {-1e9, 0, 0, -1e-3};  // anisotropic but nondegenerate
    CHECK(classify_hessian(d, 2, 1e-8).index == 2);
    const double e[] = {1, 0, 0, 0, -1, 0, 0, 0, -1};
    CHECK(classify_hessian(e, 3, 1e-8).index == 2);
}

TEST_CASE("three variables") {
    auto pts = critical_points(P("x^3 - 3*x + y^2 - z^2 + x*z/5"));
    CHECK(pts.size() == 2);
    CHECK(passport(pts, 3) == Passport{0, 1, 1, 0});
    auto q = critical_points(P("(x - z)*(x + z)*(1/20*x - z) - y^2*z + 1/10*x*y + 1/50*y*z - 1/1000*x - 1/700*y + 1/300*z"));
    CHECK(q.size() <= 8);
    CHECK(conjugation_closed(q));
}

TEST_CASE("hessian against finite differences of the gradient") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(-1, 1);
    for (const char* s : {"x^3 + x*y^3 + 1/10*x*y", "x^2*y - y^5 + 3/7*x*y^2", "x^4 - 2*x^2 + y^2 + x*y"}) {
        CompiledPoly f(P(s));
        for (int trial = 0; trial < 20; ++trial) {
            double p[2] = {U(rng), U(rng)}, h[4], gp[2], gm[2];
            f.hess(p, h);
            for (int j = 0; j < 2; ++j) {
                const double step = 1e-5;
                double q[2] = {p[0], p[1]};
                q[j] += step;
                f.grad(q, gp);
                q[j] -= 2 * step;
                f.grad(q, gm);
                for (int i = 0; i < 2; ++i) {
                    double fd = (gp[i] - gm[i]) / (2 * step);
                    CHECK(std::abs(fd - h[i * 2 + j]) <= 1e-6 * (1 + std::abs(h[i * 2 + j])));
                }
            }
        }
    }
}

TEST_CASE("recipe verification") {
    for (const char* s : {"A1", "A4", "A5(+,-)", "D4-", "D4+", "D5", "-D5", "D6-", "D6+", "D7", "E6", "-E6", "E7", "E8"}) {
        CAPTURE(s);
        auto c = parse_class(s);
        auto rep = verify_recipes(c);
        CHECK(rep.ok);
        CHECK(rep.distinct == predicted_components(c));
        std::set<int> idx;
        for (auto& ch : rep.checks) {
            CHECK(ch.complex_points == c.mu);
            idx.insert(ch.gradient_index);
        }
        CHECK(idx.size() == 1);
        CHECK(*idx.begin() == class_gradient_index(c));
    }
    auto j = to_json(verify_recipes(SingularityClass::E8()));
    CHECK(j["distinct"] == 15);
    CHECK(j["recipes"].size() == 15);
}

TEST_CASE("report") {
    auto f = P("x^4 - 2*x^2 + y^2");
    auto j = critical_report(f, critical_points(f));
    CHECK(j["passport"] == nlohmann::json::array({2, 1, 0}));
    CHECK(j["points"].size() == 3);
}
