#include <cstdlib>
#include <string_view>

#include "amalgam/kernels.hpp"

namespace amalgam::simd {

namespace {

ComplexSum dot_scalar(const double* are, const double* aim, const double* bre, const double* bim, std::size_t n) {
    double sr[4] = {0, 0, 0, 0};
    double si[4] = {0, 0, 0, 0};
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t l = k & 3;
        const double rr = are[k] * bre[k];
        const double ii = aim[k] * bim[k];
        const double ri = are[k] * bim[k];
        const double ir = aim[k] * bre[k];
        sr[l] += rr - ii;
        si[l] += ri + ir;
    }
    return {(sr[0] + sr[1]) + (sr[2] + sr[3]), (si[0] + si[1]) + (si[2] + si[3])};
}

void axpy_scalar(double* yre, double* yim, double cre, double cim, const double* xre, const double* xim,
                 std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        const double rr = cre * xre[k];
        const double ii = cim * xim[k];
        const double ri = cre * xim[k];
        const double ir = cim * xre[k];
        yre[k] += rr - ii;
        yim[k] += ri + ir;
    }
}

const Kernels kScalar{"scalar", dot_scalar, axpy_scalar};

}  // namespace

const Kernels& scalar_kernels() { return kScalar; }

#ifndef AMALGAM_HAVE_AVX2
const Kernels* avx2_kernels() { return nullptr; }
#endif

const Kernels& active_kernels() {
    static const Kernels* chosen = [] {
        const char* env = std::getenv("AMALGAM_SIMD");
        if (env && std::string_view(env) == "scalar") return &kScalar;
        const Kernels* avx = avx2_kernels();
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
        if (avx && __builtin_cpu_supports("avx2")) return avx;
#endif
        return &kScalar;
    }();
    return *chosen;
}

}  // namespace amalgam::simd
