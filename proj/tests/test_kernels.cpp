#include <doctest.h>

#include <random>
#include <vector>

#include "caustic/kernels.hpp"

using namespace caustic;

TEST_CASE("avx2 lattice kernels agree with the scalar reference") {
    const KernelTable* v = avx2_kernels();
    if (!v) return;
    const KernelTable& s = scalar_kernels();
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int n : {8, 16}) {
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<int32_t> a(n), b(n), G(n * n), o1(n), o2(n);
            for (auto& x : a) x = d(rng);
            for (auto& x : b) x = d(rng);
            for (auto& x : G) x = d(rng);
            CHECK(s.dot(a.data(), b.data(), n) == v->dot(a.data(), b.data(), n));
            s.matvec(G.data(), n, a.data(), o1.data(), n);
            v->matvec(G.data(), n, a.data(), o2.data(), n);
            CHECK(o1 == o2);
            auto x1 = b, x2 = b;
            int c = d(rng);
            s.axpy(c, a.data(), x1.data(), n);
            v->axpy(c, a.data(), x2.data(), n);
            CHECK(x1 == x2);
        }
    }
}

TEST_CASE("avx2 batched evaluation is bitwise equal to scalar") {
    const KernelTable* v = avx2_kernels();
    if (!v) return;
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-2, 2);
    std::vector<double> coef{1.5, -3.0, 0.25, 7.0, -1.0};
    std::vector<uint8_t> exps{3, 0, 0, 1, 3, 0, 1, 1, 0, 0, 4, 0, 0, 0, 0};
    for (std::size_t np : {1u, 4u, 7u, 33u}) {
        std::vector<double> pts(np * 2), o1(np), o2(np);
        for (auto& p : pts) p = u(rng);
        scalar_kernels().poly_eval(coef.data(), exps.data(), 5, 2, pts.data(), np, o1.data());
        v->poly_eval(coef.data(), exps.data(), 5, 2, pts.data(), np, o2.data());
        CHECK(o1 == o2);
    }
}

TEST_CASE("dispatch can be forced to the scalar table") {
    force_isa(Isa::Scalar);
    CHECK(kernels().isa == Isa::Scalar);
    force_isa(Isa::Avx2);
    CHECK(kernels().isa == (avx2_kernels() ? Isa::Avx2 : Isa::Scalar));
}
