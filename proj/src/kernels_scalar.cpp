#include "caustic/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace caustic {
namespace {

int32_t dot_scalar(const int32_t* a, const int32_t* b, int n) {
    int32_t s = 0;
    for (int i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

void matvec_scalar(const int32_t* G, int stride, const int32_t* x, int32_t* out, int n) {
    for (int i = 0; i < n; ++i) out[i] = dot_scalar(G + i * stride, x, stride);
}

void axpy_scalar(int32_t c, const int32_t* v, int32_t* x, int n) {
    for (int i = 0; i < n; ++i) x[i] += c * v[i];
}

void poly_eval_scalar(const double* coef, const uint8_t* exps, int nterms, int nv,
                      const double* pts, std::size_t npts, double* out) {
    for (std::size_t i = 0; i < npts; ++i) {
        const double* p = pts + i * nv;
        double s = 0.0;
        for (int t = 0; t < nterms; ++t) {
            double m = coef[t];
            for (int k = 0; k < nv; ++k)
                for (int e = 0; e < exps[t * 3 + k]; ++e) m *= p[k];
            s += m;
        }
        out[i] = s;
    }
}

const KernelTable kScalar{Isa::Scalar, dot_scalar, matvec_scalar, axpy_scalar, poly_eval_scalar};

const KernelTable* g_forced = nullptr;

const KernelTable& select() {
    const char* env = std::getenv("CAUSTIC_ISA");
    if (env && std::strcmp(env, "scalar") == 0) return kScalar;
    if (const KernelTable* k = avx2_kernels()) return *k;
    return kScalar;
}

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

const KernelTable& kernels() {
    if (g_forced) return *g_forced;
    static const KernelTable& chosen = select();
    return chosen;
}

void force_isa(Isa isa) {
    if (isa == Isa::Avx2 && avx2_kernels()) g_forced = avx2_kernels();
    else g_forced = &kScalar;
}

}  // namespace caustic
