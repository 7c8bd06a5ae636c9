// Built with -mavx2 -ffp-contract=off; only reached after a runtime CPU check.
#include <immintrin.h>

#include "amalgam/kernels.hpp"

namespace amalgam::simd {

namespace {

ComplexSum dot_avx2(const double* are, const double* aim, const double* bre, const double* bim, std::size_t n) {
    __m256d sr = _mm256_setzero_pd();
    __m256d si = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d ar = _mm256_loadu_pd(are + k);
        const __m256d ai = _mm256_loadu_pd(aim + k);
        const __m256d br = _mm256_loadu_pd(bre + k);
        const __m256d bi = _mm256_loadu_pd(bim + k);
        sr = _mm256_add_pd(sr, _mm256_sub_pd(_mm256_mul_pd(ar, br), _mm256_mul_pd(ai, bi)));
        si = _mm256_add_pd(si, _mm256_add_pd(_mm256_mul_pd(ar, bi), _mm256_mul_pd(ai, br)));
    }
    alignas(32) double lr[4];
    alignas(32) double li[4];
    _mm256_store_pd(lr, sr);
    _mm256_store_pd(li, si);
    for (std::size_t l = 0; k < n; ++k, ++l) {
        const double rr = are[k] * bre[k];
        const double ii = aim[k] * bim[k];
        const double ri = are[k] * bim[k];
        const double ir = aim[k] * bre[k];
        lr[l] += rr - ii;
        li[l] += ri + ir;
    }
    return {(lr[0] + lr[1]) + (lr[2] + lr[3]), (li[0] + li[1]) + (li[2] + li[3])};
}

void axpy_avx2(double* yre, double* yim, double cre, double cim, const double* xre, const double* xim,
               std::size_t n) {
    const __m256d cr = _mm256_set1_pd(cre);
    const __m256d ci = _mm256_set1_pd(cim);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d xr = _mm256_loadu_pd(xre + k);
        const __m256d xi = _mm256_loadu_pd(xim + k);
        const __m256d re = _mm256_sub_pd(_mm256_mul_pd(cr, xr), _mm256_mul_pd(ci, xi));
        const __m256d im = _mm256_add_pd(_mm256_mul_pd(cr, xi), _mm256_mul_pd(ci, xr));
        _mm256_storeu_pd(yre + k, _mm256_add_pd(_mm256_loadu_pd(yre + k), re));
        _mm256_storeu_pd(yim + k, _mm256_add_pd(_mm256_loadu_pd(yim + k), im));
    }
    for (; k < n; ++k) {
        const double rr = cre * xre[k];
        const double ii = cim * xim[k];
        const double ri = cre * xim[k];
        const double ir = cim * xre[k];
        yre[k] += rr - ii;
        yim[k] += ri + ir;
    }
}

const Kernels kAvx2{"avx2", dot_avx2, axpy_avx2};

}  // namespace

const Kernels* avx2_kernels() { return &kAvx2; }

}  // namespace amalgam::simd
