#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "sgfb/filterbank.hpp"

namespace sgfb {

enum class SignalKind { SpectrallySmooth, SpectrallyLocalized };

struct TestSignal {
  SignalKind kind;
  Eigen::VectorXd values;  // unit l2 norm
};

// Spectral coefficients exp(-decay * lambda_n), inverse-transformed and
// normalized. decay = 0 gives a flat spectrum; decay < 0 picks the default
// where the coefficient at lambda_max is 1e-2 of the one at lambda_0.
TestSignal gen_smooth_signal(const SpectralBasis& basis, double decay = -1.0);

// Gaussian bump around a spectral index with a small seeded perturbation,
// inverse-transformed and normalized.
TestSignal gen_localized_signal(const SpectralBasis& basis, int center_index, double width,
                                std::uint64_t seed);

// 10 log10(|ref|^2 / |ref - est|^2), capped at 300 dB on exact equality.
double snr_db(const Eigen::VectorXd& reference, const Eigen::VectorXd& estimate);

// Keep coefficients with |c| > t in both channels independently.
SubbandCoefficients hard_threshold(const SubbandCoefficients& sub, double t);

// Keep the round(fraction * n) largest-magnitude coefficients across the
// concatenation [d_lp | d_hp]; ties broken by lower global index.
SubbandCoefficients nla_keep_fraction(const SubbandCoefficients& sub, double fraction);

struct NlaCurve {
  std::vector<double> fractions;
  std::vector<double> snr_db;
};

NlaCurve run_nla(const SpectralBasis& basis, const FilterKernel& lp, const Eigen::VectorXd& f,
                 const std::vector<double>& fractions);

struct DenoiseConfig {
  double sigma = 1.0;
  double threshold = -1.0;  // < 0 means the default 3 * sigma
  int runs = 1000;
  std::uint64_t seed = 0;
  int threads = 1;

  double effective_threshold() const { return threshold < 0.0 ? 3.0 * sigma : threshold; }
};

struct DenoiseResult {
  double delta_snr_db;          // mean over runs
  std::vector<double> per_run;  // indexed by run
  DenoiseConfig config;
};

// Monte-Carlo denoising: per run, add white Gaussian noise (independent
// counter-derived stream per run), analyze, hard-threshold, synthesize,
// and report the SNR improvement over the raw noisy signal. Runs may be
// computed on several threads; aggregation is by run index, so the result
// does not depend on the thread count.
DenoiseResult run_denoise(const SpectralBasis& basis, const FilterKernel& lp,
                          const Eigen::VectorXd& f, const DenoiseConfig& cfg);

}  // namespace sgfb
