#include "tfbs/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <string_view>

namespace tfbs::kernels {

namespace detail {

void axpy_scalar(double* y, const double* x, double a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scaled_copy_scalar(double* dst, const double* src, double a,
                        std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a * src[i];
}

void stencil3_scalar(double* dst, const double* src, double w0, double w1,
                     double w2, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] = w0 * src[i] + w1 * src[i + 1] + w2 * src[i + 2];
    }
}

double max_abs_diff_scalar(const double* a, const double* b, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = std::fabs(a[i] - b[i]);
        if (d > m) m = d;
    }
    return m;
}

double sum_sq_diff_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

}  // namespace detail

namespace {

Isa detect() {
#if defined(__x86_64__) || defined(_M_X64)
    if (const char* env = std::getenv("TFBS_ISA")) {
        const std::string_view v(env);
        if (v == "scalar") return Isa::scalar;
        if (v == "avx2") return Isa::avx2;
    }
    if (__builtin_cpu_supports("avx2")) return Isa::avx2;
#endif
    return Isa::scalar;
}

Isa& current() {
    static Isa isa = detect();
    return isa;
}

}  // namespace

Isa active_isa() { return current(); }

void force_isa(Isa isa) {
#if !defined(__x86_64__) && !defined(_M_X64)
    isa = Isa::scalar;  // only the reference kernels exist here
#endif
    current() = isa;
}

void axpy(double* y, const double* x, double a, std::size_t n) {
#if defined(__x86_64__) || defined(_M_X64)
    if (current() == Isa::avx2) return detail::axpy_avx2(y, x, a, n);
#endif
    detail::axpy_scalar(y, x, a, n);
}

void scaled_copy(double* dst, const double* src, double a, std::size_t n) {
#if defined(__x86_64__) || defined(_M_X64)
    if (current() == Isa::avx2) {
        return detail::scaled_copy_avx2(dst, src, a, n);
    }
#endif
    detail::scaled_copy_scalar(dst, src, a, n);
}

void stencil3(double* dst, const double* src, double w0, double w1, double w2,
              std::size_t n) {
#if defined(__x86_64__) || defined(_M_X64)
    if (current() == Isa::avx2) {
        return detail::stencil3_avx2(dst, src, w0, w1, w2, n);
    }
#endif
    detail::stencil3_scalar(dst, src, w0, w1, w2, n);
}

double max_abs_diff(const double* a, const double* b, std::size_t n) {
#if defined(__x86_64__) || defined(_M_X64)
    if (current() == Isa::avx2) return detail::max_abs_diff_avx2(a, b, n);
#endif
    return detail::max_abs_diff_scalar(a, b, n);
}

double sum_sq_diff(const double* a, const double* b, std::size_t n) {
#if defined(__x86_64__) || defined(_M_X64)
    if (current() == Isa::avx2) return detail::sum_sq_diff_avx2(a, b, n);
#endif
    return detail::sum_sq_diff_scalar(a, b, n);
}

}  // namespace tfbs::kernels
