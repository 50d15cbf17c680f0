#pragma once

#include <cstddef>
#include <cstdint>

// Data-parallel inner loops of the filter bank. Every kernel has a scalar
// reference implementation and, on x86-64, an AVX2 variant selected at
// runtime. The dispatched and scalar paths are equivalence-tested.
namespace sgfb::kernels {

enum class Backend { Scalar, Avx2 };

Backend active_backend();
const char* backend_name(Backend b);

// Pin the scalar path regardless of CPU support (tests, benchmarks).
void set_force_scalar(bool force);

// dst[i] = a[i] * b[i]
void diag_mul(const double* a, const double* b, double* dst, std::size_t n);

// Two-channel spectral fold of a length-n GFT vector (n even):
//   d_lp[k] = h[k]*u[k] + h[r]*u[r]
//   d_hp[k] = (1-h[k])*u[k] - (1-h[r])*u[r],   r = n-1-k, k < n/2.
void subband_fold(const double* h, const double* u, double* d_lp, double* d_hp, std::size_t n);

// Inverse of the fold: y[k] = d_lp[k] + d_hp[k], y[n-1-k] = d_lp[k] - d_hp[k].
void subband_unfold(const double* d_lp, const double* d_hp, double* y, std::size_t n);

// Applies the closed-form synthesis inverse to the combined spectrum:
//   z[i] = pt[i] * (y[i] - psi[n-1-i] * y[n-1-i])
// Exactly two multiplications per output coefficient. z must not alias y.
void synthesis_inverse_apply(const double* y, const double* psi, const double* pt, double* z,
                             std::size_t n);

// Scalar reference implementations, always available (test oracles).
namespace scalar {
void diag_mul(const double* a, const double* b, double* dst, std::size_t n);
void subband_fold(const double* h, const double* u, double* d_lp, double* d_hp, std::size_t n);
void subband_unfold(const double* d_lp, const double* d_hp, double* y, std::size_t n);
void synthesis_inverse_apply(const double* y, const double* psi, const double* pt, double* z,
                             std::size_t n);
}  // namespace scalar

// Instrumented scalar variant; returns the number of floating-point
// multiplications performed (2n for a length-n input).
std::uint64_t synthesis_inverse_apply_counted(const double* y, const double* psi,
                                              const double* pt, double* z, std::size_t n);

}  // namespace sgfb::kernels
