#include <algorithm>
#include <cmath>
#include <numbers>

#include "caustic/catalog.hpp"
#include "caustic/errors.hpp"
#include "caustic/looplab.hpp"

namespace caustic {

namespace {

constexpr double kPi = std::numbers::pi;

// Small-denominator rational when the double is one (0.3 -> 3/10), else the exact value.
Rational nice_rational(double v) {
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double x = v;
    for (int it = 0; it < 40; ++it) {
        double a = std::floor(x);
        if (std::fabs(a) > 1e9) break;
        long ai = static_cast<long>(a);
        long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > 1000000) break;
        p0 = p1, q0 = q1, p1 = p2, q1 = q2;
        if (static_cast<double>(p1) / static_cast<double>(q1) == v) return Rational(p1, q1);
        if (x == a) break;
        x = 1 / (x - a);
    }
    return exact_rational(v);
}

double norm3(const std::vector<std::complex<double>>& a) {
    double s = 0;
    for (auto& v : a) s += std::norm(v);
    return std::sqrt(s);
}

std::vector<int> nearest_saddles(const TrackedPath& path, double px, double py) {
    auto idx = real_strands(path, 1);
    auto& pts = path.samples.front().points;
    auto d = [&](int i) { return std::hypot(pts[i].location[0].real() - px, pts[i].location[1].real() - py); };
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d(a) < d(b); });
    if (idx.size() > 2) idx.resize(2);
    return idx;
}

// Winding of the saddle pair nearest (px, py) along one loop, resampled finer while the
// argument steps are too coarse.
int pair_winding(const FamilySpec& f, int param, const std::vector<double>& fixed, int steps, double px, double py,
                 const TrackedPath* first) {
    for (int n = steps;; n *= 2) {
        TrackedPath p = first && n == steps ? *first : track(f, param, n, fixed);
        auto pair = nearest_saddles(p, px, py);
        if (pair.size() != 2) throw Error(ErrorCode::VerificationMismatch, "no saddle pair at the D4- point");
        try {
            return winding_number(configurations(p, pair));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::StepTooCoarse || n >= (1 << 12)) throw;
        }
    }
}

}  // namespace

TorusReport j10_torus(double epsilon, double alpha, int grid) {
    TorusReport r;
    r.epsilon = epsilon, r.alpha = alpha, r.grid = grid;
    try {
        if (!(epsilon > 0) || !(alpha > 0) || grid < 4) throw Error(ErrorCode::InvalidFamily, "need epsilon, alpha > 0, grid >= 4");
        const Rational e = nice_rational(epsilon), a = nice_rational(alpha);
        const Polynomial X = Polynomial::variable(0), Y = Polynomial::variable(1);
        auto C = [](const Rational& c) { return Polynomial::constant(c, kX | kY); };
        const Polynomial w = Y * Y - C(e * e);
        FamilySpec f;
        f.name = "j10-torus";
        f.base = X * (X + w) * (X - w * a);
        f.parameters = {{"tau1", 0, 2 * kPi, true}, {"tau2", 0, 2 * kPi, true}};
        // Near (0, +-e) these are x and y -+ e; near the other point their 1-jets vanish,
        // so each angle moves only its own D4- point.
        const Polynomial up = Y + C(e), dn = C(e) - Y;
        const Rational delta = e * e * e * e, amp = -3 * delta * delta;
        r.amplitude = 3 * std::pow(to_double(delta), 2);
        const Rational h = 1 / (2 * e), q = 1 / (4 * e * e);
        f.terms = {{X * up * h, amp, "sin", 0, 1},
                   {(Y - C(e)) * up * up * q, amp, "cos", 0, 1},
                   {X * dn * h, amp, "sin", 1, 1},
                   {(Y + C(e)) * dn * dn * q, amp, "cos", 1, 1}};

        r.base_ok = is_d4_minus_point(f.base, {Rational(0), e}) && is_d4_minus_point(f.base, {Rational(0), Rational(-e)});
        const double ed = to_double(e);
        const Passport want{1, 4, 1};
        for (int j = 0; j < grid; ++j) {
            TrackedPath p = track(f, 0, grid, {0, 2 * kPi * j / grid});
            for (std::size_t s = 0; s + 1 < p.samples.size(); ++s) {
                if (p.samples[s].refined) continue;
                ++r.samples;
                r.good_samples += passport_at(p, s, 2) == want;
            }
            const std::vector<double> fixed{0, 2 * kPi * j / grid};
            auto pair = nearest_saddles(p, 0, ed);
            r.windings_upper.push_back(pair_winding(f, 0, fixed, grid, 0, ed, &p));
            if (j == 0 && r.base_ok) {
                // away from the two D4- points: one minimum and one maximum
                auto low = nearest_saddles(p, 0, -ed);
                int mins = 0, maxs = 0, other = 0;
                auto& pts = p.samples.front().points;
                for (std::size_t i = 0; i < pts.size(); ++i) {
                    if (!pts[i].real) continue;
                    int ii = static_cast<int>(i);
                    if (std::count(pair.begin(), pair.end(), ii) || std::count(low.begin(), low.end(), ii)) continue;
                    if (pts[i].index == 0) ++mins;
                    else if (pts[i].index == 2) ++maxs;
                    else ++other;
                }
                r.base_ok = mins == 1 && maxs == 1 && other == 0;
            }
        }
        for (int i = 0; i < grid; ++i) {
            r.windings_lower.push_back(pair_winding(f, 1, {2 * kPi * i / grid, 0}, grid, 0, -ed, nullptr));
        }
        auto ones = [](const std::vector<int>& v) { return std::all_of(v.begin(), v.end(), [](int x) { return x == 1; }); };
        r.ok = r.base_ok && r.samples == grid * grid && r.good_samples == r.samples && ones(r.windings_upper) &&
               ones(r.windings_lower);
    } catch (const Error& e) {
        r.error = e.what();
        r.ok = false;
    }
    return r;
}

nlohmann::json to_json(const TorusReport& r) {
    return {{"epsilon", r.epsilon},
            {"alpha", r.alpha},
            {"grid", r.grid},
            {"amplitude", r.amplitude},
            {"samples", r.samples},
            {"passport_141_samples", r.good_samples},
            {"windings_upper", r.windings_upper},
            {"windings_lower", r.windings_lower},
            {"base_ok", r.base_ok},
            {"ok", r.ok},
            {"error", r.error}};
}

std::array<std::array<double, 3>, 3> p8_adapted_coordinates(double kappa, double theta) {
    const double s = std::sin(theta), c = std::cos(theta);
    // restriction to ker L in (u, w), u along (-s, c, 0), w = z:
    // -kappa s^3 u^3 - u^2 w + kappa s u w^2 + w^3; its lines are w = m u
    const double cu3 = -kappa * s * s * s, cu2w = -1, cuw2 = kappa * s, cw3 = 1;
    auto poly = [&](double m) { return cw3 * m * m * m + cuw2 * m * m + cu2w * m + cu3; };
    auto dpoly = [&](double m) { return 3 * cw3 * m * m + 2 * cuw2 * m + cu2w; };
    double m[3] = {0, -1, 1};  // the lines of -z (x^2 + y^2 - z^2), matched to zeta = 0, zeta = +-sqrt3 eta
    for (double& r : m) {
        for (int it = 0; it < 100; ++it) {
            double d = poly(r) / dpoly(r);
            r -= d;
            if (std::fabs(d) < 1e-17) break;
        }
        if (std::fabs(poly(r)) > 1e-12) throw Error(ErrorCode::InvalidFamily, "restricted cubic lost a real line");
    }
    if (!(m[1] < m[0] && m[0] < m[2])) throw Error(ErrorCode::InvalidFamily, "kappa too large for the line matching");
    // A (1, m_i) parallel to (1, 0), (1, sqrt3), (1, -sqrt3)
    const double r3 = std::sqrt(3.0);
    double A[2][2];
    A[1][1] = 1, A[1][0] = -m[0];
    A[0][1] = ((m[1] - m[0]) - (m[0] - m[2])) / (r3 * (m[1] - m[2]));
    A[0][0] = (m[1] - m[0]) / r3 - A[0][1] * m[1];
    auto target = [&](double u, double w) {
        double eta = A[0][0] * u + A[0][1] * w, zeta = A[1][0] * u + A[1][1] * w;
        return 3 * eta * eta * zeta - zeta * zeta * zeta;
    };
    auto cubic = [&](double u, double w) { return cu3 * u * u * u + cu2w * u * u * w + cuw2 * u * w * w + cw3 * w * w * w; };
    double best = 0, ratio = 0;
    for (auto [u, w] : {std::pair{0.0, 1.0}, {1.0, 0.0}, {1.0, 1.0}, {1.0, -1.0}}) {
        double t = target(u, w);
        if (std::fabs(t) > best) best = std::fabs(t), ratio = cubic(u, w) / t;
    }
    const double lam = std::cbrt(ratio);
    for (auto& row : A)
        for (double& v : row) v *= lam;
    std::array<std::array<double, 3>, 3> out;
    out[0] = {c, s, 0};
    for (int i = 0; i < 2; ++i) out[i + 1] = {-s * A[i][0], c * A[i][0], A[i][1]};
    return out;
}

FamilySpec p8_klein_family(double kappa, double epsilon) {
    FamilySpec f;
    f.name = "p8-klein";
    f.base = normal_form(SingularityClass::P8_2(nice_rational(kappa)));
    f.parameters = {{"theta", 0, kPi, true}, {"tau", 0, 2 * kPi, true}};
    f.rule = [kappa, epsilon](const std::vector<double>& t) {
        auto R = p8_adapted_coordinates(kappa, t[0]);
        auto lin = [](const std::array<double, 3>& r) {
            PolynomialF p(kX | kY | kZ);
            for (int i = 0; i < 3; ++i) p += PolynomialF::variable(i) * r[i];
            return p;
        };
        PolynomialF xi = lin(R[0]);
        const double e4 = 3 * std::pow(epsilon, 4);
        return xi * xi * epsilon - lin(R[1]) * (e4 * std::sin(t[1])) - lin(R[2]) * (e4 * std::cos(t[1]));
    };
    return f;
}

KleinReport p8_klein(double kappa, double epsilon, int grid) {
    KleinReport r;
    r.kappa = kappa, r.epsilon = epsilon, r.grid = grid;
    r.bound = std::pow(epsilon, 8.0 / 3.0);
    r.min_index2_radius = INFINITY;
    try {
        if (!(kappa >= 0) || !(epsilon > 0) || grid < 4) throw Error(ErrorCode::InvalidFamily, "need kappa >= 0, epsilon > 0, grid >= 4");
        FamilySpec f = p8_klein_family(kappa, epsilon);
        auto start = critical_points(f.at({0, 0}));
        // with all 2^3 points in hand, continuation that keeps them distinct loses none
        if (start.size() != 8) throw Error(ErrorCode::MatchingAmbiguous, "expected 8 complex critical points");
        TrackOptions opt;
        opt.exact_samples = false;

        TrackedPath base = track(f, 0, grid, {0, 0}, opt, &start);
        auto axis = real_strands(base, 1);
        if (axis.size() != 2) throw Error(ErrorCode::VerificationMismatch, "expected two index-1 points");
        std::vector<double> v0;
        double total = 0, prev = 0;
        for (std::size_t s = 0; s < base.samples.size(); ++s) {
            auto& a = base.samples[s].points[axis[0]].location;
            auto& b = base.samples[s].points[axis[1]].location;
            double v[3];
            for (int i = 0; i < 3; ++i) v[i] = a[i].real() - b[i].real();
            double az = std::atan2(v[1], v[0]);
            if (s == 0) v0.assign(v, v + 3);
            else total += std::remainder(az - prev, 2 * kPi);
            prev = az;
            if (s + 1 == base.samples.size()) {
                double dot = 0, n0 = 0, n1 = 0;
                for (int i = 0; i < 3; ++i) dot += v[i] * v0[i], n0 += v0[i] * v0[i], n1 += v[i] * v[i];
                r.axis_reversed = dot / std::sqrt(n0 * n1) < -1 + 1e-9;
            }
        }
        r.axis_angle_increment = total;

        for (std::size_t s = 0; s + 1 < base.samples.size(); ++s) {
            if (base.samples[s].refined) continue;
            const double theta = base.samples[s].t;
            TrackedPath loop = track(f, 1, grid, {theta, 0}, opt, &base.samples[s].points);
            auto ones = real_strands(loop, 1);
            if (ones.size() == 2 && loop.permutation[ones[0]] == ones[1] && loop.permutation[ones[1]] == ones[0])
                ++r.tau_swaps;
            const double c = std::cos(theta), sn = std::sin(theta);
            for (std::size_t k = 0; k + 1 < loop.samples.size(); ++k) {
                if (loop.samples[k].refined) continue;
                ++r.samples;
                auto& pts = loop.samples[k].points;
                int real = 0;
                std::vector<double> side2;
                for (auto& p : pts) {
                    if (!p.real) continue;
                    ++real;
                    const double l = c * p.location[0].real() + sn * p.location[1].real();
                    const double rad = norm3(p.location);
                    if (p.index == 1) {
                        r.max_kernel_distance = std::max(r.max_kernel_distance, std::fabs(l));
                        r.max_index1_radius = std::max(r.max_index1_radius, rad);
                    } else if (p.index == 2) {
                        side2.push_back(l);
                        r.min_index2_radius = std::min(r.min_index2_radius, rad);
                    }
                }
                r.good_samples += real == 4 && passport(pts, 3) == Passport{0, 2, 2, 0};
                r.index2_separated += side2.size() == 2 && side2[0] * side2[1] < 0;
            }
        }
        r.ok = r.samples == grid * grid && r.good_samples == r.samples && r.tau_swaps == grid &&
               r.index2_separated == r.samples && std::fabs(r.axis_angle_increment - kPi) <= 1e-3 && r.axis_reversed &&
               r.max_kernel_distance <= 10 * r.bound;
    } catch (const Error& e) {
        r.error = e.what();
        r.ok = false;
    }
    return r;
}

nlohmann::json to_json(const KleinReport& r) {
    return {{"kappa", r.kappa},
            {"epsilon", r.epsilon},
            {"grid", r.grid},
            {"samples", r.samples},
            {"passport_0220_samples", r.good_samples},
            {"tau_loops_swapping_index1", r.tau_swaps},
            {"index2_separated_samples", r.index2_separated},
            {"axis_angle_increment", r.axis_angle_increment},
            {"axis_reversed", r.axis_reversed},
            {"max_kernel_distance", r.max_kernel_distance},
            {"bound_eps_8_3", r.bound},
            {"observed_constant", r.bound > 0 ? r.max_kernel_distance / r.bound : 0},
            {"max_index1_radius", r.max_index1_radius},
            {"min_index2_radius", std::isfinite(r.min_index2_radius) ? r.min_index2_radius : 0},
            {"ok", r.ok},
            {"error", r.error}};
}

}  // namespace caustic
