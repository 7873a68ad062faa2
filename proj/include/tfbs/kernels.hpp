#pragma once

#include <cstddef>

// Vector kernels for the solver's inner loops: the weighted history
// accumulation, the three-term collocation stencils and the discrete
// norms. Each kernel has a scalar reference implementation and an AVX2
// variant; the active variant is chosen once at startup from CPUID and
// can be pinned with force_isa() or the TFBS_ISA environment variable
// ("scalar" / "avx2"). Both variants are equivalence-tested against
// each other.
namespace tfbs::kernels {

enum class Isa { scalar, avx2 };

/// Instruction set currently dispatched to.
Isa active_isa();

/// Overrides dispatch (tests and benchmarking).
void force_isa(Isa isa);

/// y[i] += a * x[i]
void axpy(double* y, const double* x, double a, std::size_t n);

/// dst[i] = a * src[i]
void scaled_copy(double* dst, const double* src, double a, std::size_t n);

/// dst[i] = w0*src[i] + w1*src[i+1] + w2*src[i+2]; src has n+2 entries.
void stencil3(double* dst, const double* src, double w0, double w1,
              double w2, std::size_t n);

/// max_i |a[i] - b[i]|
double max_abs_diff(const double* a, const double* b, std::size_t n);

/// sum_i (a[i] - b[i])^2
double sum_sq_diff(const double* a, const double* b, std::size_t n);

namespace detail {
// Reference implementations, exposed for equivalence tests.
void axpy_scalar(double* y, const double* x, double a, std::size_t n);
void scaled_copy_scalar(double* dst, const double* src, double a,
                        std::size_t n);
void stencil3_scalar(double* dst, const double* src, double w0, double w1,
                     double w2, std::size_t n);
double max_abs_diff_scalar(const double* a, const double* b, std::size_t n);
double sum_sq_diff_scalar(const double* a, const double* b, std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
void axpy_avx2(double* y, const double* x, double a, std::size_t n);
void scaled_copy_avx2(double* dst, const double* src, double a,
                      std::size_t n);
void stencil3_avx2(double* dst, const double* src, double w0, double w1,
                   double w2, std::size_t n);
double max_abs_diff_avx2(const double* a, const double* b, std::size_t n);
double sum_sq_diff_avx2(const double* a, const double* b, std::size_t n);
#endif
}  // namespace detail

}  // namespace tfbs::kernels
