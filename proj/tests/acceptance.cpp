// One line per acceptance criterion. Exit status 0 iff all pass.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "caustic/acampo.hpp"
#include "caustic/catalog.hpp"
#include "caustic/critlab.hpp"
#include "caustic/enumerator.hpp"
#include "caustic/errors.hpp"
#include "caustic/json_io.hpp"
#include "caustic/looplab.hpp"
#include "caustic/report.hpp"

using namespace caustic;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Checker {
    bool ok = true;
    std::ostringstream why;
    void require(bool c, const std::string& what) {
        if (!c) {
            ok = false;
            why << " [failed: " << what << "]";
        }
    }
};

Divide shipped_divide(const std::string& cls) { return divide_from_json(read_json_file(data_dir() + "/divides/" + cls + ".json")); }

EnumerateOptions quiet() { return {}; }

Outcome finish(const Checker& c, std::string detail) {
    while (!detail.empty() && (detail.back() == ' ' || detail.back() == ',' || detail.back() == ';')) detail.pop_back();
    return {c.ok, detail + c.why.str()};
}

Outcome statistics(int table, const char* cls, double budget, double& seconds) {
    auto t0 = std::chrono::steady_clock::now();
    auto e = enumerate_all(load_seed(cls), quiet());
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Checker c;
    for (auto& entry : statistics_entries(table, e))
        c.require(entry.ok, entry.row + " " + entry.what + " computed " + entry.computed.dump());
    c.require(seconds < budget, "runtime");
    std::ostringstream d;
    d << "total " << e.total() << ", " << e.components.size() << " components, sizes";
    for (auto& col : table_columns(e)) d << " " << col.size << (col.labels.size() > 1 ? "x2" : "");
    d << c.why.str();
    return {c.ok, d.str()};
}

Outcome criterion1() {
    double s = 0;
    auto o = statistics(2, "E7", 60, s);
    o.detail += " (" + std::to_string(s) + " s)";
    return o;
}

Outcome criterion2() {
    double s = 0;
    auto o = statistics(3, "E8", 600, s);
    o.detail += " (" + std::to_string(s) + " s)";
    return o;
}

Outcome criterion3() {
    Checker c;
    std::ostringstream d;
    for (auto [cls, want] : {std::pair{"E7", 4}, std::pair{"E8", 5}}) {
        auto e = enumerate_all(load_seed(cls), quiet());
        const int mu = e.mu;
        int n = 0;
        for (auto& comp : e.components) {
            int real = std::accumulate(comp.passport.begin(), comp.passport.end(), 0);
            c.require(comp.all_real == (real == mu), std::string(cls) + " all_real flag");
            n += comp.all_real;
        }
        c.require(n == want, std::string(cls) + " all-real count");
        d << cls << ": " << n << " all-real components; ";
    }
    return finish(c, d.str());
}

Outcome criterion4() {
    Checker c;
    std::ostringstream d;
    for (auto [cls, want] : {std::pair{"A2", 2}, std::pair{"A3", 2}, std::pair{"D4-", 3}, std::pair{"E6", 7}}) {
        auto e = enumerate_all(load_seed(cls), quiet());
        c.require(static_cast<int>(e.components.size()) == want, cls);
        d << cls << " " << e.components.size() << ", ";
        if (std::string(cls) == "D4-") {
            std::set<Passport> got;
            for (auto& comp : e.components) got.insert(comp.passport);
            c.require(got == std::set<Passport>{{1, 3, 0}, {0, 3, 1}, {0, 2, 0}}, "D4- passports");
            d << "D4- passports";
            for (auto& p : got) d << " " << passport_str(p);
            d << ", ";
        }
    }
    return finish(c, d.str());
}

Outcome criterion5() {
    Checker c;
    std::ostringstream d;
    std::vector<std::pair<std::string, int>> classes{{"E6", 7}, {"E7", 10}, {"E8", 15}};
    for (int k = 2; k <= 5; ++k) classes.push_back({"D" + std::to_string(2 * k) + "-", k * (k + 1) / 2});
    int recipes = 0;
    for (auto& [name, want] : classes) {
        auto rep = verify_recipes(parse_class(name), true);
        for (auto& ch : rep.checks) {
            ++recipes;
            c.require(ch.ok && ch.computed == ch.expected, name + " " + ch.name + (ch.error.empty() ? "" : ": " + ch.error));
        }
        c.require(rep.distinct == want, name + " distinct " + std::to_string(rep.distinct));
        d << name << " " << rep.distinct << ", ";
    }
    d << recipes << " recipes";
    return finish(c, d.str());
}

Outcome criterion6() {
    auto t0 = std::chrono::steady_clock::now();
    FamilySpec f = named_families("d4-basic").front();
    TrackedPath p = track(f, 0, 256);
    auto saddles = real_strands(p, 1);
    Checker c;
    c.require(saddles.size() == 2, "two saddles");
    if (saddles.size() != 2) return {false, c.why.str()};
    c.require(p.permutation[saddles[0]] == saddles[1] && p.permutation[saddles[1]] == saddles[0], "transposition");
    const double eps = 0.1;
    double worst = 0;
    for (auto& s : p.samples) {
        const double hx = eps * std::cos(s.t / 2), hy = eps * std::sin(s.t / 2);
        for (int i : saddles) {
            auto& l = s.points[i].location;
            worst = std::max(worst, std::min(std::hypot(l[0].real() - hx, l[1].real() - hy),
                                             std::hypot(l[0].real() + hx, l[1].real() + hy)));
        }
    }
    const int w = winding_number(configurations(p, saddles));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(w == 1, "winding");
    c.require(worst < 1e-9, "closed forms");
    c.require(secs < 1, "runtime");
    char buf[200];
    std::snprintf(buf, sizeof buf, "winding %d, saddles swapped, closed-form deviation %.2e, %.3f s", w, worst, secs);
    return {c.ok, buf + c.why.str()};
}

Outcome criterion7() {
    auto t0 = std::chrono::steady_clock::now();
    TorusReport r = j10_torus(0.3, 1, 32);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Checker c;
    c.require(r.error.empty(), r.error);
    c.require(r.samples == 1024 && r.good_samples == 1024, "Morse with passport (1,4,1)");
    auto ones = [](const std::vector<int>& v) { return v.size() == 32 && std::all_of(v.begin(), v.end(), [](int w) { return w == 1; }); };
    c.require(ones(r.windings_upper) && ones(r.windings_lower), "windings");
    c.require(r.ok, "report");
    c.require(secs < 60, "runtime");
    char buf[200];
    std::snprintf(buf, sizeof buf, "%d/%d samples (1,4,1), %zu+%zu loop windings all 1, %.1f s", r.good_samples,
                  r.samples, r.windings_upper.size(), r.windings_lower.size(), secs);
    return {c.ok, buf + c.why.str()};
}

Outcome criterion8() {
    auto t0 = std::chrono::steady_clock::now();
    const double eps = 0.05;
    KleinReport r = p8_klein(0.05, eps, 64);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double bound = std::pow(eps, 8.0 / 3.0);
    Checker c;
    c.require(r.error.empty(), r.error);
    c.require(r.samples == 64 * 64 && r.good_samples == r.samples, "four real Morse points, passport (0,2,2,0)");
    c.require(r.tau_swaps == 64, "tau loops swap the index-1 pair");
    c.require(std::fabs(r.axis_angle_increment - std::numbers::pi) <= 1e-3 && r.axis_reversed, "axis reversal");
    c.require(r.max_kernel_distance <= 10 * bound, "distance to ker L");
    c.require(secs < 120, "runtime");
    char buf[300];
    std::snprintf(buf, sizeof buf,
                  "%d/%d samples (0,2,2,0), %d/64 tau swaps, axis angle %.6f, ker L distance %.2e = %.3f eps^(8/3), %.1f s",
                  r.good_samples, r.samples, r.tau_swaps, r.axis_angle_increment, r.max_kernel_distance,
                  r.max_kernel_distance / bound, secs);
    return {c.ok, buf + c.why.str()};
}

// Arm lengths of a tree with exactly one branch vertex; empty if the graph is not such a tree.
std::vector<int> arms(const VirtualMorsification& vm) {
    const int n = vm.mu;
    std::vector<std::vector<int>> adj(n);
    int edges = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (vm.gram(i, j) != 0) {
                if (std::abs(vm.gram(i, j)) != 1) return {};
                adj[i].push_back(j), adj[j].push_back(i), ++edges;
            }
    if (edges != n - 1) return {};
    std::vector<int> branch;
    for (int i = 0; i < n; ++i) {
        if (adj[i].size() > 3) return {};
        if (adj[i].size() == 3) branch.push_back(i);
    }
    if (branch.size() != 1) return {};
    std::vector<int> out;
    std::vector<bool> seen(n, false);
    seen[branch[0]] = true;
    for (int next : adj[branch[0]]) {
        int len = 0, prev = branch[0];
        for (int v = next; v >= 0 && !seen[v];) {
            seen[v] = true, ++len;
            int w = -1;
            for (int u : adj[v])
                if (u != prev) w = u;
            prev = v, v = w;
        }
        out.push_back(len + 1);  // counting the branch vertex
    }
    if (std::count(seen.begin(), seen.end(), true) != n) return {};
    std::sort(out.begin(), out.end());
    return out;
}

Outcome criterion9() {
    Checker c;
    std::ostringstream d;
    struct Case {
        const char* cls;
        Passport passport;
        std::vector<int> tree;
    };
    for (auto& [cls, want, tree] : {Case{"E7", {3, 4, 0}, {2, 3, 4}}, Case{"E8", {4, 4, 0}, {2, 3, 5}}}) {
        Divide dv = shipped_divide(cls);
        auto vm = seed_from_divide(dv);
        auto sym = seed_from_divide(symmetrize(dv));
        c.require(passport_of(vm) == want, std::string(cls) + " passport");
        Passport mirrored(want.rbegin(), want.rend());
        c.require(passport_of(sym) == mirrored, std::string(cls) + " symmetrized passport");
        for (auto* v : {&vm, &sym}) {
            c.require(arms(*v) == tree, std::string(cls) + " tree shape");
            c.require(diagram_automorphisms(*v) == 1, std::string(cls) + " automorphisms");
        }
        d << cls << " " << passport_str(passport_of(vm)) << "/" << passport_str(passport_of(sym)) << " T(";
        for (std::size_t i = 0; i < tree.size(); ++i) d << (i ? "," : "") << tree[i];
        d << ") trivial automorphisms; ";
    }
    return finish(c, d.str());
}

Outcome criterion10() {
    Checker c;
    auto vm = load_seed("E7");
    MorseEngine eng(vm);
    auto e = enumerate_all(vm, quiet());
    std::vector<std::size_t> ids(e.total());
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), std::mt19937(20240611));
    ids.resize(1000);
    std::size_t flips = 0, involutions = 0;
    for (std::size_t id : ids) {
        const auto& st = e.states[id];
        const std::string k0 = eng.key(st);
        const auto cox = eng.coxeter(st);
        const Passport p0 = eng.passport(st);
        for (auto& [f, n] : eng.successors(st)) {
            ++flips;
            const std::string tag = flip_str(f);
            if (!crosses_caustic(f.kind)) c.require(eng.passport(n) == p0, "passport " + tag);
            c.require(gradient_index(eng.passport(n)) == gradient_index(p0), "gradient index " + tag);
            auto m = eng.to_vm(n);
            bool form = true;
            for (int i = 0; i < m.mu; ++i)
                for (int j = 0; j < m.mu; ++j) form = form && m.gram(i, j) == m.gram(j, i) && (i != j || m.gram(i, i) == -2);
            c.require(form, "form " + tag);
            c.require(eng.coxeter(n) == cox, "monodromy " + tag);
            std::optional<MorseEngine::State> back;
            if (f.kind == FlipKind::PairExchangeOver) back = eng.apply(n, Flip{FlipKind::PairExchangeUnder, f.position});
            if (f.kind == FlipKind::PairExchangeUnder) back = eng.apply(n, Flip{FlipKind::PairExchangeOver, f.position});
            if (f.kind == FlipKind::MaxwellReal) back = eng.apply(n, f);
            if (f.kind == FlipKind::Discriminant) back = eng.apply(n, Flip{FlipKind::Discriminant, 0, -f.side});
            if (back) {
                ++involutions;
                c.require(eng.key(*back) == k0, "involution " + tag);
            }
        }
    }
    EnumerateOptions one, four;
    one.workers = 1;
    four.workers = 4;
    auto a = enumerate_all(vm, one), b = enumerate_all(vm, four);
    bool same = a.total() == b.total() && a.component_of == b.component_of;
    for (std::size_t i = 0; same && i < a.total(); ++i) same = eng.key(a.states[i]) == eng.key(b.states[i]);
    c.require(same, "determinism across worker counts");
    std::ostringstream d;
    d << ids.size() << " E7 states, " << flips << " flips, " << involutions << " inverse pairs checked, 1 vs 4 workers identical";
    return finish(c, d.str());
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"E7 enumeration", criterion1},
        {"E8 enumeration", criterion2},
        {"all-real components", criterion3},
        {"small classes", criterion4},
        {"recipe verification", criterion5},
        {"D4 winding oracle", criterion6},
        {"J10 torus", criterion7},
        {"P8 Klein family", criterion8},
        {"A'Campo seeds", criterion9},
        {"flip properties", criterion10},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
