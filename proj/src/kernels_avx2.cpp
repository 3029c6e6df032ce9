#include "caustic/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__)
#include <immintrin.h>

namespace caustic {
namespace {

inline int32_t hsum(__m256i v) {
    __m128i lo = _mm256_castsi256_si128(v);
    __m128i hi = _mm256_extracti128_si256(v, 1);
    __m128i s = _mm_add_epi32(lo, hi);
    s = _mm_add_epi32(s, _mm_shuffle_epi32(s, 0x4e));
    s = _mm_add_epi32(s, _mm_shuffle_epi32(s, 0xb1));
    return _mm_cvtsi128_si32(s);
}

// n is a multiple of 8
int32_t dot_avx2(const int32_t* a, const int32_t* b, int n) {
    __m256i acc = _mm256_setzero_si256();
    for (int i = 0; i < n; i += 8) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(x, y));
    }
    return hsum(acc);
}

void matvec_avx2(const int32_t* G, int stride, const int32_t* x, int32_t* out, int n) {
    for (int i = 0; i < n; ++i) out[i] = dot_avx2(G + i * stride, x, stride);
}

void axpy_avx2(int32_t c, const int32_t* v, int32_t* x, int n) {
    __m256i cc = _mm256_set1_epi32(c);
    for (int i = 0; i < n; i += 8) {
        __m256i* px = reinterpret_cast<__m256i*>(x + i);
        __m256i a = _mm256_loadu_si256(px);
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
        _mm256_storeu_si256(px, _mm256_add_epi32(a, _mm256_mullo_epi32(cc, b)));
    }
}

// four points per pass; the tail goes through the scalar loop
void poly_eval_avx2(const double* coef, const uint8_t* exps, int nterms, int nv,
                    const double* pts, std::size_t npts, double* out) {
    std::size_t i = 0;
    for (; i + 4 <= npts; i += 4) {
        __m256d c[3];
        for (int k = 0; k < nv; ++k)
            c[k] = _mm256_set_pd(pts[(i + 3) * nv + k], pts[(i + 2) * nv + k],
                                 pts[(i + 1) * nv + k], pts[i * nv + k]);
        __m256d s = _mm256_setzero_pd();
        for (int t = 0; t < nterms; ++t) {
            __m256d m = _mm256_set1_pd(coef[t]);
            for (int k = 0; k < nv; ++k)
                for (int e = 0; e < exps[t * 3 + k]; ++e) m = _mm256_mul_pd(m, c[k]);
            s = _mm256_add_pd(s, m);
        }
        _mm256_storeu_pd(out + i, s);
    }
    if (i < npts)
        scalar_kernels().poly_eval(coef, exps, nterms, nv, pts + i * nv, npts - i, out + i);
}

const KernelTable kAvx2{Isa::Avx2, dot_avx2, matvec_avx2, axpy_avx2, poly_eval_avx2};

}  // namespace

const KernelTable* avx2_kernels() {
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok ? &kAvx2 : nullptr;
}

}  // namespace caustic

#else

namespace caustic {
const KernelTable* avx2_kernels() { return nullptr; }
}  // namespace caustic

#endif
