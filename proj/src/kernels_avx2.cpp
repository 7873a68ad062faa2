#include "tfbs/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

// AVX2+FMA variants. Compiled with per-function target attributes so the
// rest of the library keeps the baseline ISA; dispatch guarantees these
// only run on CPUs that support them. Results may differ from the scalar
// reference by the usual FMA/reassociation ulps, which the equivalence
// tests bound.
namespace tfbs::kernels::detail {

#define TFBS_AVX2 __attribute__((target("avx2,fma")))

TFBS_AVX2 void axpy_avx2(double* y, const double* x, double a,
                         std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vy = _mm256_loadu_pd(y + i);
        const __m256d vx = _mm256_loadu_pd(x + i);
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, vx, vy));
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

TFBS_AVX2 void scaled_copy_avx2(double* dst, const double* src, double a,
                                std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(dst + i,
                         _mm256_mul_pd(va, _mm256_loadu_pd(src + i)));
    }
    for (; i < n; ++i) dst[i] = a * src[i];
}

TFBS_AVX2 void stencil3_avx2(double* dst, const double* src, double w0,
                             double w1, double w2, std::size_t n) {
    const __m256d v0 = _mm256_set1_pd(w0);
    const __m256d v1 = _mm256_set1_pd(w1);
    const __m256d v2 = _mm256_set1_pd(w2);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d acc = _mm256_mul_pd(v0, _mm256_loadu_pd(src + i));
        acc = _mm256_fmadd_pd(v1, _mm256_loadu_pd(src + i + 1), acc);
        acc = _mm256_fmadd_pd(v2, _mm256_loadu_pd(src + i + 2), acc);
        _mm256_storeu_pd(dst + i, acc);
    }
    for (; i < n; ++i) {
        dst[i] = w0 * src[i] + w1 * src[i + 1] + w2 * src[i + 2];
    }
}

TFBS_AVX2 double max_abs_diff_avx2(const double* a, const double* b,
                                   std::size_t n) {
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    __m256d vmax = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d =
            _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        vmax = _mm256_max_pd(vmax, _mm256_andnot_pd(sign_mask, d));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, vmax);
    double m = lanes[0];
    for (int k = 1; k < 4; ++k) {
        if (lanes[k] > m) m = lanes[k];
    }
    for (; i < n; ++i) {
        const double d = std::fabs(a[i] - b[i]);
        if (d > m) m = d;
    }
    return m;
}

TFBS_AVX2 double sum_sq_diff_avx2(const double* a, const double* b,
                                  std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d =
            _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_fmadd_pd(d, d, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

#undef TFBS_AVX2

}  // namespace tfbs::kernels::detail

#endif  // x86-64
