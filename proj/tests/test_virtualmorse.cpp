#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "caustic/acampo.hpp"
#include "caustic/enumerator.hpp"
#include "caustic/errors.hpp"
#include "caustic/json_io.hpp"

using namespace caustic;

namespace {

VirtualMorsification seed(const std::string& cls) {
    return seed_from_divide(divide_from_json(read_json_file(std::string(CAUSTIC_DATA_DIR) + "/divides/" + cls + ".json")));
}

std::map<Passport, std::size_t> sizes_by_passport(const Enumeration& e) {
    std::map<Passport, std::size_t> m;
    for (auto& c : e.components) m[c.passport] += c.size;
    return m;
}

}  // namespace

TEST_CASE("divide seeds") {
    auto e7 = seed("E7");
    CHECK(e7.mu == 7);
    CHECK(passport_of(e7) == Passport{3, 4, 0});
    CHECK(e7.gradient_index == -1);
    auto e8 = seed("E8");
    CHECK(passport_of(e8) == Passport{4, 4, 0});
    CHECK(e8.gradient_index == 0);
    CHECK(diagram_automorphisms(e7) == 1);
    CHECK(diagram_automorphisms(e8) == 1);
    // D4-: one bounded triangle, three double points
    auto d4 = seed("D4-");
    CHECK(passport_of(d4) == Passport{1, 3, 0});
    CHECK(diagram_automorphisms(d4) == 6);
}

TEST_CASE("divide validation") {
    Divide d = divide_from_json(read_json_file(std::string(CAUSTIC_DATA_DIR) + "/divides/A3.json"));
    d.corners[1].position = 1;  // same sign on adjacent quadrants
    CHECK_THROWS_AS(seed_from_divide(d), Error);
}

TEST_CASE("small classes: totals, components and passports") {
    // totals frozen from an independent dense-matrix implementation of the same model
    struct Row {
        const char* cls;
        std::size_t comps, total;
    };
    for (Row r : {Row{"A1", 1, 2}, Row{"A2", 2, 4}, Row{"A3", 2, 6}, Row{"D4-", 3, 13}, Row{"D4+", 4, 0},
                  Row{"E6", 7, 456}, Row{"D6-", 6, 850}}) {
        CAPTURE(r.cls);
        auto e = enumerate_all(seed(r.cls));
        CHECK(e.components.size() == r.comps);
        if (r.total) CHECK(e.total() == r.total);
    }
    auto d4 = sizes_by_passport(enumerate_all(seed("D4-")));
    CHECK(d4 == std::map<Passport, std::size_t>{{{0, 2, 0}, 3}, {{0, 3, 1}, 5}, {{1, 3, 0}, 5}});
    auto e6 = sizes_by_passport(enumerate_all(seed("E6")));
    CHECK(e6 == std::map<Passport, std::size_t>{{{0, 0, 0}, 33}, {{0, 1, 1}, 18}, {{1, 1, 0}, 33}, {{1, 2, 1}, 20},
                                                {{2, 2, 0}, 65}, {{2, 3, 1}, 56}, {{3, 3, 0}, 231}});
    auto d4p = enumerate_all(seed("D4+"));
    std::vector<Passport> ps;
    for (auto& c : d4p.components) ps.push_back(c.passport);
    std::sort(ps.begin(), ps.end());
    CHECK(ps == std::vector<Passport>{{0, 0, 0}, {0, 1, 1}, {1, 1, 0}, {1, 2, 1}});
}

TEST_CASE("E7 enumeration") {
    auto e = enumerate_all(seed("E7"));
    CHECK(e.total() == 8648);
    CHECK(e.components.size() == 10);
    auto m = sizes_by_passport(e);
    CHECK(m[{0, 1, 0}] == 260);
    CHECK(m[{1, 2, 0}] == 312);
    CHECK(m[{0, 2, 1}] == 312);
    CHECK(m[{2, 3, 0}] == 636);
    CHECK(m[{1, 3, 1}] == 348);
    CHECK(m[{3, 4, 0}] == 2384);
    CHECK(m[{2, 4, 1}] == 688);
    // all-real component: (mu + 1) times the linear extensions of the oriented tree (298)
    for (auto& c : e.components)
        if (c.all_real) CHECK(c.size % 8 == 0);
}

TEST_CASE("symmetrized divide mirrors the passports") {
    auto a = enumerate_all(seed("E6"));
    auto b = enumerate_all(seed_from_divide(symmetrize(divide_from_json(
        read_json_file(std::string(CAUSTIC_DATA_DIR) + "/divides/E6.json")))));
    auto ma = sizes_by_passport(a), mb = sizes_by_passport(b);
    CHECK(ma.size() == mb.size());
    for (auto& [p, n] : ma) CHECK(mb[Passport{p[2], p[1], p[0]}] == n);
}

TEST_CASE("flip properties on sampled states") {
    auto s = seed("E6");
    MorseEngine eng(s);
    auto e = enumerate_all(s);
    std::mt19937 rng(3);
    std::vector<std::size_t> sample(e.total());
    std::iota(sample.begin(), sample.end(), 0);
    std::shuffle(sample.begin(), sample.end(), rng);
    sample.resize(150);
    for (std::size_t id : sample) {
        const auto& st = e.states[id];
        const auto cox = eng.coxeter(st);
        const std::string k0 = eng.key(st);
        auto vm = eng.to_vm(st);
        CHECK_NOTHROW(validate(vm));
        CHECK(canonical_key(vm) == k0);
        for (auto& [f, n] : eng.successors(st)) {
            CAPTURE(flip_str(f));
            CHECK(eng.coxeter(n) == cox);
            if (!crosses_caustic(f.kind)) CHECK(eng.passport(n) == eng.passport(st));
            if (f.kind == FlipKind::MaxwellReal) CHECK(eng.key(*eng.apply(n, f)) == k0);
            if (f.kind == FlipKind::PairExchangeOver)
                CHECK(eng.key(*eng.apply(n, Flip{FlipKind::PairExchangeUnder, f.position})) == k0);
            if (f.kind == FlipKind::Discriminant)
                CHECK(eng.key(*eng.apply(n, Flip{FlipKind::Discriminant, 0, -f.side})) == k0);
        }
    }
}

TEST_CASE("canonical key ignores orientation of basis cycles") {
    auto vm = seed("E6");
    auto flipped = vm;
    const int n = vm.mu;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int s = (i == 2 ? -1 : 1) * (j == 2 ? -1 : 1);
            flipped.intersections[i * n + j] *= s;
            flipped.conjugation[i * n + j] *= s;
        }
    CHECK(canonical_key(flipped) == canonical_key(vm));
}

TEST_CASE("apply_flip rejects unavailable flips") {
    auto vm = seed("A2");
    CHECK_THROWS_AS(apply_flip(vm, Flip{FlipKind::CausticDeath, 0}), Error);  // values on both sides of zero
    vm = apply_flip(vm, Flip{FlipKind::Discriminant, 0, +1});
    CHECK_THROWS_AS(apply_flip(vm, Flip{FlipKind::MaxwellReal, 0}), Error);
    auto after = apply_flip(vm, Flip{FlipKind::CausticDeath, 0});
    CHECK(after.real_count() == 0);
    CHECK(passport_of(after) == Passport{0, 0, 0});
}

TEST_CASE("enumeration is deterministic across worker counts") {
    auto s = seed("E6");
    EnumerateOptions one, four;
    one.workers = 1;
    four.workers = 4;
    auto a = enumerate_all(s, one), b = enumerate_all(s, four);
    REQUIRE(a.total() == b.total());
    for (std::size_t i = 0; i < a.total(); ++i) CHECK(a.component_of[i] == b.component_of[i]);
}

TEST_CASE("state cap") {
    EnumerateOptions o;
    o.cap = 100;
    CHECK_THROWS_AS(enumerate_all(seed("E6"), o), Error);
}

TEST_CASE("shipped seeds match their divides") {
    for (const char* cls : {"A1", "A2", "A3", "D4+", "D4-", "D6-", "E6", "E7", "E8"}) {
        CAPTURE(cls);
        CHECK(to_json(load_seed(cls)) == to_json(seed(cls)));
    }
    CHECK(to_json(load_seed("seeds/e7.json")) == to_json(seed("E7")));
    CHECK_THROWS_AS(load_seed("no-such-class"), Error);
}
