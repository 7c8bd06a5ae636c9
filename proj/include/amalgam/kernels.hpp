#pragma once

#include <cstddef>

namespace amalgam::simd {

struct ComplexSum {
    double re;
    double im;
};

// Complex vectors are stored split: real parts and imaginary parts in separate arrays.

/// Σ a_k b_k (no conjugation). Four interleaved partial sums, lane l taking k ≡ l (mod 4),
/// combined as (s0 + s1) + (s2 + s3); every implementation follows this order exactly.
using DotFn = ComplexSum (*)(const double* are, const double* aim, const double* bre, const double* bim,
                             std::size_t n);

/// y_k += c x_k.
using AxpyFn = void (*)(double* yre, double* yim, double cre, double cim, const double* xre, const double* xim,
                        std::size_t n);

struct Kernels {
    const char* name;
    DotFn dot;
    AxpyFn axpy;
};

const Kernels& scalar_kernels();

/// nullptr when the build has no AVX2 variant.
const Kernels* avx2_kernels();

/// AVX2 when compiled in and supported by the CPU, otherwise scalar. AMALGAM_SIMD=scalar in the
/// environment forces the reference path.
const Kernels& active_kernels();

}  // namespace amalgam::simd
