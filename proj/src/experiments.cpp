#include "sgfb/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include "sgfb/rng.hpp"

namespace sgfb {

TestSignal gen_smooth_signal(const SpectralBasis& basis, double decay) {
  const auto& lam = basis.eigenvalues;
  const int n = basis.size();
  if (decay < 0.0) {
    const double lmax = lam(n - 1);
    decay = lmax > 0.0 ? std::log(100.0) / lmax : 1.0;
  }
  Eigen::VectorXd fbar(n);
  for (int i = 0; i < n; ++i) fbar(i) = std::exp(-decay * lam(i));
  Eigen::VectorXd f = igft(basis, fbar);
  f /= f.norm();
  return {SignalKind::SpectrallySmooth, std::move(f)};
}

TestSignal gen_localized_signal(const SpectralBasis& basis, int center_index, double width,
                                std::uint64_t seed) {
  const int n = basis.size();
  if (center_index < 0 || center_index >= n)
    throw Error(ErrorCode::IndexOutOfRange, "bump center outside spectrum");
  if (width <= 0.0) throw Error(ErrorCode::InvalidArgument, "bump width must be positive");
  Rng rng = Rng::derived(seed, 0x10c41);
  Eigen::VectorXd fbar(n);
  for (int i = 0; i < n; ++i) {
    const double d = (i - center_index) / width;
    fbar(i) = std::exp(-0.5 * d * d) * (1.0 + 0.05 * rng.normal());
  }
  Eigen::VectorXd f = igft(basis, fbar);
  f /= f.norm();
  return {SignalKind::SpectrallyLocalized, std::move(f)};
}

double snr_db(const Eigen::VectorXd& reference, const Eigen::VectorXd& estimate) {
  if (reference.size() != estimate.size())
    throw Error(ErrorCode::LengthMismatch, "reference and estimate lengths differ");
  const double ref_energy = reference.squaredNorm();
  if (ref_energy == 0.0) throw Error(ErrorCode::ZeroReference, "reference signal is zero");
  const double err_energy = (reference - estimate).squaredNorm();
  if (err_energy == 0.0) return 300.0;
  return std::min(300.0, 10.0 * std::log10(ref_energy / err_energy));
}

SubbandCoefficients hard_threshold(const SubbandCoefficients& sub, double t) {
  if (t < 0.0) throw Error(ErrorCode::InvalidArgument, "threshold must be nonnegative");
  SubbandCoefficients out = sub;
  for (auto* channel : {&out.d_lp, &out.d_hp})
    for (int i = 0; i < channel->size(); ++i)
      if (std::abs((*channel)(i)) <= t) (*channel)(i) = 0.0;
  return out;
}

SubbandCoefficients nla_keep_fraction(const SubbandCoefficients& sub, double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0))
    throw Error(ErrorCode::FractionOutOfRange, "fraction must lie in (0, 1]");
  const int half = sub.half_size();
  const int n = 2 * half;
  const int keep = std::max(1, static_cast<int>(std::lround(fraction * n)));
  if (keep >= n) return sub;

  auto coeff = [&](int i) { return i < half ? sub.d_lp(i) : sub.d_hp(i - half); };
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  // ties broken by lower global index (d_lp block first)
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(coeff(a)) > std::abs(coeff(b));
  });

  SubbandCoefficients out;
  out.d_lp = Eigen::VectorXd::Zero(half);
  out.d_hp = Eigen::VectorXd::Zero(half);
  for (int m = 0; m < keep; ++m) {
    const int i = order[m];
    if (i < half)
      out.d_lp(i) = sub.d_lp(i);
    else
      out.d_hp(i - half) = sub.d_hp(i - half);
  }
  return out;
}

NlaCurve run_nla(const SpectralBasis& basis, const FilterKernel& lp, const Eigen::VectorXd& f,
                 const std::vector<double>& fractions) {
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    if (!(fractions[i] > 0.0 && fractions[i] <= 1.0))
      throw Error(ErrorCode::FractionOutOfRange, "fractions must lie in (0, 1]");
    if (i > 0 && fractions[i] <= fractions[i - 1])
      throw Error(ErrorCode::InvalidArgument, "fractions must be strictly increasing");
  }
  const SynthesisInverse inv = make_synthesis_inverse(lp);
  const SubbandCoefficients sub = analyze(basis, lp, f);

  NlaCurve curve;
  curve.fractions = fractions;
  curve.snr_db.reserve(fractions.size());
  for (double fraction : fractions) {
    const Eigen::VectorXd rec = synthesize(basis, inv, nla_keep_fraction(sub, fraction));
    curve.snr_db.push_back(snr_db(f, rec));
  }
  return curve;
}

DenoiseResult run_denoise(const SpectralBasis& basis, const FilterKernel& lp,
                          const Eigen::VectorXd& f, const DenoiseConfig& cfg) {
  if (cfg.sigma <= 0.0) throw Error(ErrorCode::InvalidArgument, "sigma must be positive");
  if (cfg.runs < 1) throw Error(ErrorCode::InvalidArgument, "runs must be >= 1");
  const int n = basis.size();
  if (f.size() != n) throw Error(ErrorCode::LengthMismatch, "signal does not match basis");

  const SynthesisInverse inv = make_synthesis_inverse(lp);
  const double t = cfg.effective_threshold();

  DenoiseResult result;
  result.config = cfg;
  result.per_run.assign(cfg.runs, 0.0);

  auto one_run = [&](int run) {
    Rng rng = Rng::derived(cfg.seed, static_cast<std::uint64_t>(run));
    Eigen::VectorXd noise(n);
    for (int i = 0; i < n; ++i) noise(i) = cfg.sigma * rng.normal();
    const Eigen::VectorXd noisy = f + noise;
    const SubbandCoefficients sub = hard_threshold(analyze(basis, lp, noisy), t);
    const Eigen::VectorXd denoised = synthesize(basis, inv, sub);
    const double err = (denoised - f).squaredNorm();
    const double noise_energy = noise.squaredNorm();
    result.per_run[run] =
        err == 0.0 ? 300.0 : 10.0 * std::log10(noise_energy / err);
  };

  const int threads = std::max(1, cfg.threads);
  if (threads == 1) {
    for (int r = 0; r < cfg.runs; ++r) one_run(r);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int w = 0; w < threads; ++w)
      pool.emplace_back([&] {
        for (int r = next.fetch_add(1); r < cfg.runs; r = next.fetch_add(1)) one_run(r);
      });
    for (auto& th : pool) th.join();
  }

  // deterministic aggregation: per_run is indexed by run
  result.delta_snr_db =
      std::accumulate(result.per_run.begin(), result.per_run.end(), 0.0) / cfg.runs;
  return result;
}

}  // namespace sgfb
