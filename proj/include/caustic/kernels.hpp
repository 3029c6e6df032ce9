#pragma once

#include <cstddef>
#include <cstdint>

namespace caustic {

// Lattice vectors are int32 arrays padded to a multiple of 8 lanes.
constexpr int kLanes = 8;
constexpr int kMaxRank = 16;

inline int padded(int n) { return (n + kLanes - 1) / kLanes * kLanes; }

enum class Isa { Scalar, Avx2 };

struct KernelTable {
    Isa isa;
    int32_t (*dot)(const int32_t* a, const int32_t* b, int n);
    // out = G x, G row-major n x stride
    void (*matvec)(const int32_t* G, int stride, const int32_t* x, int32_t* out, int n);
    // x += c * v
    void (*axpy)(int32_t c, const int32_t* v, int32_t* x, int n);
    // out[i] = sum_t coef[t] * prod_k pts[i*nv+k]^exps[t*3+k], for a batch of points
    void (*poly_eval)(const double* coef, const uint8_t* exps, int nterms, int nv,
                      const double* pts, std::size_t npts, double* out);
};

const KernelTable& scalar_kernels();
// nullptr when the CPU or the build lacks AVX2
const KernelTable* avx2_kernels();

// Selected once on first use; CAUSTIC_ISA=scalar forces the reference kernels.
const KernelTable& kernels();
void force_isa(Isa isa);

}  // namespace caustic
