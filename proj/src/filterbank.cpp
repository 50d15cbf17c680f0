#include "sgfb/filterbank.hpp"

#include <cmath>
#include <limits>

#include "sgfb/kernels.hpp"

namespace sgfb {

FilterKernel design_ideal_kernel(const SpectralBasis& basis, double lambda_cut, double epsilon) {
  const int n = basis.size();
  if (n % 2 != 0)
    throw Error(ErrorCode::OddVertexCount, "ideal kernel needs even basis size");
  const auto& lam = basis.eigenvalues;
  if (!(lambda_cut > lam(0) && lambda_cut <= lam(n / 2 - 1)))
    throw Error(ErrorCode::CutoffOutOfRange,
                "ideal cutoff must lie in (lambda_0, lambda_{n/2-1}]");
  if (epsilon < 0.0 || epsilon >= 1.0)
    throw Error(ErrorCode::InvalidArgument, "epsilon must lie in [0, 1)");

  FilterKernel k;
  k.design = KernelDesign::Ideal;
  k.lambda_cut = lambda_cut;
  k.epsilon = epsilon;
  k.values.resize(n);
  for (int i = 0; i < n; ++i) k.values(i) = lam(i) <= lambda_cut ? 1.0 : epsilon;

  // epsilon = 0 with a both-stopband pair makes psi_k = psi_{n-1-k} = -1
  if (epsilon == 0.0 && k.values(n / 2 - 1) != 1.0)
    throw Error(ErrorCode::PRViolation,
                "epsilon = 0 requires the maximal cutoff lambda_{n/2-1}");
  // epsilon = 0 with a both-passband pair makes psi_k = psi_{n-1-k} = +1,
  // which happens when the spectrum has no gap at the half point
  if (epsilon == 0.0 && k.values(n / 2) == 1.0)
    throw Error(ErrorCode::PRViolation,
                "epsilon = 0 requires lambda_{n/2} > lambda_{n/2-1}");
  return k;
}

FilterKernel design_exact_ideal_kernel(const SpectralBasis& basis) {
  const int n = basis.size();
  if (n % 2 != 0)
    throw Error(ErrorCode::OddVertexCount, "ideal kernel needs even basis size");
  return design_ideal_kernel(basis, basis.eigenvalues(n / 2 - 1), 0.0);
}

FilterKernel design_butterworth_kernel(const SpectralBasis& basis, double lambda_cut, int beta) {
  if (lambda_cut <= 0.0)
    throw Error(ErrorCode::CutoffOutOfRange, "butterworth cutoff must be positive");
  if (beta < 1) throw Error(ErrorCode::InvalidArgument, "butterworth order must be >= 1");

  FilterKernel k;
  k.design = KernelDesign::Butterworth;
  k.lambda_cut = lambda_cut;
  k.beta = beta;
  k.values.resize(basis.size());
  for (int i = 0; i < basis.size(); ++i) {
    const double ratio = basis.eigenvalues(i) / lambda_cut;
    k.values(i) = 1.0 / std::sqrt(1.0 + std::pow(ratio, 2.0 * beta));
  }
  return k;
}

FilterKernel highpass_kernel(const FilterKernel& lp) {
  FilterKernel hp = lp;
  hp.values = Eigen::VectorXd::Ones(lp.size()) - lp.values;
  return hp;
}

FoldCoefficients fold_coefficients(const FilterKernel& lp) {
  return {2.0 * lp.values - Eigen::VectorXd::Ones(lp.size())};
}

PrReport pr_check(const FoldCoefficients& fold, double tol) {
  const int n = fold.size();
  if (n % 2 != 0) throw Error(ErrorCode::OddVertexCount, "PR check needs even length");
  PrReport report{true, std::numeric_limits<double>::infinity(), -1};
  for (int k = 0; k < n / 2; ++k) {
    const double det = std::abs(1.0 - fold.psi(k) * fold.psi(n - 1 - k));
    if (det < report.margin) {
      report.margin = det;
      report.worst_pair = k;
    }
  }
  report.ok = report.margin > tol;
  return report;
}

SynthesisInverse make_synthesis_inverse(const FoldCoefficients& fold, double tol) {
  const PrReport report = pr_check(fold, tol);
  if (!report.ok)
    throw Error(ErrorCode::SingularSynthesis,
                "PR margin " + std::to_string(report.margin) + " at pair " +
                    std::to_string(report.worst_pair) + " is below tolerance");
  const int n = fold.size();
  SynthesisInverse inv;
  inv.psi = fold.psi;
  inv.psi_tilde.resize(n);
  for (int k = 0; k < n / 2; ++k) {
    const double v = 1.0 / (1.0 - fold.psi(k) * fold.psi(n - 1 - k));
    inv.psi_tilde(k) = v;
    inv.psi_tilde(n - 1 - k) = v;
  }
  return inv;
}

SynthesisInverse make_synthesis_inverse(const FilterKernel& lp, double tol) {
  return make_synthesis_inverse(fold_coefficients(lp), tol);
}

SubbandCoefficients analyze(const SpectralBasis& basis0, const FilterKernel& lp,
                            const Eigen::VectorXd& f) {
  const int n = basis0.size();
  if (n % 2 != 0) throw Error(ErrorCode::OddVertexCount, "analysis needs even vertex count");
  if (lp.size() != n) throw Error(ErrorCode::LengthMismatch, "kernel does not match basis");
  const Eigen::VectorXd ubar = gft(basis0, f);

  SubbandCoefficients sub;
  sub.d_lp.resize(n / 2);
  sub.d_hp.resize(n / 2);
  kernels::subband_fold(lp.values.data(), ubar.data(), sub.d_lp.data(), sub.d_hp.data(),
                        static_cast<std::size_t>(n));
  return sub;
}

Eigen::VectorXd synthesize(const SpectralBasis& basis0, const SynthesisInverse& inv,
                           const SubbandCoefficients& sub) {
  const int n = basis0.size();
  if (inv.size() != n || 2 * sub.half_size() != n)
    throw Error(ErrorCode::LengthMismatch, "synthesis inputs do not match basis size");

  Eigen::VectorXd y(n), z(n);
  kernels::subband_unfold(sub.d_lp.data(), sub.d_hp.data(), y.data(),
                          static_cast<std::size_t>(n));
  kernels::synthesis_inverse_apply(y.data(), inv.psi.data(), inv.psi_tilde.data(), z.data(),
                                   static_cast<std::size_t>(n));
  return igft(basis0, z);
}

Eigen::VectorXd subband_to_reduced_vertex(const SpectralBasis& basis1, const Eigen::VectorXd& d) {
  return igft(basis1, d);
}

}  // namespace sgfb
