#include "sgfb/kernels.hpp"

#include <atomic>

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define SGFB_HAVE_AVX2_PATH 1
#include <immintrin.h>
#else
#define SGFB_HAVE_AVX2_PATH 0
#endif

namespace sgfb::kernels {

namespace {
std::atomic<bool> g_force_scalar{false};

bool avx2_available() {
#if SGFB_HAVE_AVX2_PATH
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
#else
  return false;
#endif
}

bool use_avx2() { return avx2_available() && !g_force_scalar.load(std::memory_order_relaxed); }
}  // namespace

void set_force_scalar(bool force) { g_force_scalar.store(force, std::memory_order_relaxed); }

Backend active_backend() { return use_avx2() ? Backend::Avx2 : Backend::Scalar; }

const char* backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

namespace scalar {

void diag_mul(const double* a, const double* b, double* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] * b[i];
}

void subband_fold(const double* h, const double* u, double* d_lp, double* d_hp, std::size_t n) {
  const std::size_t half = n / 2;
  for (std::size_t k = 0; k < half; ++k) {
    const std::size_t r = n - 1 - k;
    d_lp[k] = h[k] * u[k] + h[r] * u[r];
    d_hp[k] = (1.0 - h[k]) * u[k] - (1.0 - h[r]) * u[r];
  }
}

void subband_unfold(const double* d_lp, const double* d_hp, double* y, std::size_t n) {
  const std::size_t half = n / 2;
  for (std::size_t k = 0; k < half; ++k) {
    y[k] = d_lp[k] + d_hp[k];
    y[n - 1 - k] = d_lp[k] - d_hp[k];
  }
}

void synthesis_inverse_apply(const double* y, const double* psi, const double* pt, double* z,
                             std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = n - 1 - i;
    z[i] = pt[i] * (y[i] - psi[r] * y[r]);
  }
}

}  // namespace scalar

std::uint64_t synthesis_inverse_apply_counted(const double* y, const double* psi,
                                              const double* pt, double* z, std::size_t n) {
  std::uint64_t mults = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = n - 1 - i;
    const double folded = psi[r] * y[r];
    ++mults;
    z[i] = pt[i] * (y[i] - folded);
    ++mults;
  }
  return mults;
}

#if SGFB_HAVE_AVX2_PATH

namespace avx2 {

// reverse the four lanes of a 256-bit double vector
__attribute__((target("avx2"), always_inline)) inline __m256d reverse4(__m256d v) {
  return _mm256_permute4x64_pd(v, 0b00011011);
}

__attribute__((target("avx2"))) void diag_mul(const double* a, const double* b, double* dst,
                                                  std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d va = _mm256_loadu_pd(a + i);
    __m256d vb = _mm256_loadu_pd(b + i);
    _mm256_storeu_pd(dst + i, _mm256_mul_pd(va, vb));
  }
  for (; i < n; ++i) dst[i] = a[i] * b[i];
}

__attribute__((target("avx2"))) void subband_fold(const double* h, const double* u,
                                                      double* d_lp, double* d_hp, std::size_t n) {
  const std::size_t half = n / 2;
  const __m256d ones = _mm256_set1_pd(1.0);
  std::size_t k = 0;
  for (; k + 4 <= half; k += 4) {
    const std::size_t rbase = n - 4 - k;  // reversed block [n-1-k .. n-4-k]
    __m256d hk = _mm256_loadu_pd(h + k);
    __m256d uk = _mm256_loadu_pd(u + k);
    __m256d hr = reverse4(_mm256_loadu_pd(h + rbase));
    __m256d ur = reverse4(_mm256_loadu_pd(u + rbase));
    // plain mul/add keeps results bit-identical to the scalar reference
    __m256d lp = _mm256_add_pd(_mm256_mul_pd(hk, uk), _mm256_mul_pd(hr, ur));
    __m256d gk = _mm256_sub_pd(ones, hk);
    __m256d gr = _mm256_sub_pd(ones, hr);
    __m256d hp = _mm256_sub_pd(_mm256_mul_pd(gk, uk), _mm256_mul_pd(gr, ur));
    _mm256_storeu_pd(d_lp + k, lp);
    _mm256_storeu_pd(d_hp + k, hp);
  }
  for (; k < half; ++k) {
    const std::size_t r = n - 1 - k;
    d_lp[k] = h[k] * u[k] + h[r] * u[r];
    d_hp[k] = (1.0 - h[k]) * u[k] - (1.0 - h[r]) * u[r];
  }
}

__attribute__((target("avx2"))) void subband_unfold(const double* d_lp, const double* d_hp,
                                                        double* y, std::size_t n) {
  const std::size_t half = n / 2;
  std::size_t k = 0;
  for (; k + 4 <= half; k += 4) {
    __m256d lp = _mm256_loadu_pd(d_lp + k);
    __m256d hp = _mm256_loadu_pd(d_hp + k);
    _mm256_storeu_pd(y + k, _mm256_add_pd(lp, hp));
    _mm256_storeu_pd(y + n - 4 - k, reverse4(_mm256_sub_pd(lp, hp)));
  }
  for (; k < half; ++k) {
    y[k] = d_lp[k] + d_hp[k];
    y[n - 1 - k] = d_lp[k] - d_hp[k];
  }
}

__attribute__((target("avx2"))) void synthesis_inverse_apply(const double* y,
                                                                 const double* psi,
                                                                 const double* pt, double* z,
                                                                 std::size_t n) {
  // z must not alias y: reversed reads of y happen after forward writes of z
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d yi = _mm256_loadu_pd(y + i);
    __m256d yr = reverse4(_mm256_loadu_pd(y + n - 4 - i));
    __m256d pr = reverse4(_mm256_loadu_pd(psi + n - 4 - i));
    __m256d pti = _mm256_loadu_pd(pt + i);
    __m256d folded = _mm256_sub_pd(yi, _mm256_mul_pd(pr, yr));  // y[i] - psi[r]*y[r]
    _mm256_storeu_pd(z + i, _mm256_mul_pd(pti, folded));
  }
  for (; i < n; ++i) {
    const std::size_t r = n - 1 - i;
    z[i] = pt[i] * (y[i] - psi[r] * y[r]);
  }
}

}  // namespace avx2

#endif  // SGFB_HAVE_AVX2_PATH

void diag_mul(const double* a, const double* b, double* dst, std::size_t n) {
#if SGFB_HAVE_AVX2_PATH
  if (use_avx2()) return avx2::diag_mul(a, b, dst, n);
#endif
  scalar::diag_mul(a, b, dst, n);
}

void subband_fold(const double* h, const double* u, double* d_lp, double* d_hp, std::size_t n) {
#if SGFB_HAVE_AVX2_PATH
  if (use_avx2()) return avx2::subband_fold(h, u, d_lp, d_hp, n);
#endif
  scalar::subband_fold(h, u, d_lp, d_hp, n);
}

void subband_unfold(const double* d_lp, const double* d_hp, double* y, std::size_t n) {
#if SGFB_HAVE_AVX2_PATH
  if (use_avx2()) return avx2::subband_unfold(d_lp, d_hp, y, n);
#endif
  scalar::subband_unfold(d_lp, d_hp, y, n);
}

void synthesis_inverse_apply(const double* y, const double* psi, const double* pt, double* z,
                             std::size_t n) {
#if SGFB_HAVE_AVX2_PATH
  if (use_avx2()) return avx2::synthesis_inverse_apply(y, psi, pt, z, n);
#endif
  scalar::synthesis_inverse_apply(y, psi, pt, z, n);
}

}  // namespace sgfb::kernels
