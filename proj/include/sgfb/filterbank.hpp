#pragma once

#include <Eigen/Dense>
#include <string>

#include "sgfb/spectral.hpp"

namespace sgfb {

enum class KernelDesign { Ideal, Butterworth, Custom };

// Per-eigenvalue diagonal low-pass response, index-aligned with the basis
// eigenvalues.
struct FilterKernel {
  Eigen::VectorXd values;
  KernelDesign design = KernelDesign::Custom;
  double lambda_cut = 0.0;
  double epsilon = 0.0;  // Ideal only
  int beta = 0;          // Butterworth only

  int size() const { return static_cast<int>(values.size()); }
};

// H(n) = 1 for lambda_n <= lambda_cut, epsilon otherwise.
// Requires lambda_0 < lambda_cut <= lambda_{n/2-1}. epsilon = 0 is only
// valid at the maximal cutoff; any stopband pair with epsilon = 0 breaks
// the reconstruction condition.
FilterKernel design_ideal_kernel(const SpectralBasis& basis, double lambda_cut, double epsilon);

// Maximal ideal cutoff lambda_{n/2-1} with epsilon = 0: the exact ideal filter.
FilterKernel design_exact_ideal_kernel(const SpectralBasis& basis);

// H(n) = (1 + (lambda_n / lambda_cut)^(2 beta))^(-1/2)
FilterKernel design_butterworth_kernel(const SpectralBasis& basis, double lambda_cut, int beta);

// H_HP(n) = 1 - H_LP(n)
FilterKernel highpass_kernel(const FilterKernel& lp);

// psi_n = 2 H_LP(n) - 1
struct FoldCoefficients {
  Eigen::VectorXd psi;
  int size() const { return static_cast<int>(psi.size()); }
};

FoldCoefficients fold_coefficients(const FilterKernel& lp);

struct PrReport {
  bool ok;
  double margin;    // min over pairs of |1 - psi_k * psi_{n-1-k}|
  int worst_pair;   // k achieving the margin
};

// Invertibility check of the combine matrix: every index-reversed pair
// (psi_k, psi_{n-1-k}) must have psi_k * psi_{n-1-k} != 1.
PrReport pr_check(const FoldCoefficients& fold, double tol = 1e-8);

// psi_tilde(k) = psi_tilde(n-1-k) = 1 / (1 - psi_k * psi_{n-1-k});
// realizes the synthesis inverse with two multiplications per coefficient.
struct SynthesisInverse {
  Eigen::VectorXd psi;
  Eigen::VectorXd psi_tilde;
  int size() const { return static_cast<int>(psi.size()); }
};

// Throws SingularSynthesis when the PR margin is at or below tol.
SynthesisInverse make_synthesis_inverse(const FoldCoefficients& fold, double tol = 1e-8);
SynthesisInverse make_synthesis_inverse(const FilterKernel& lp, double tol = 1e-8);

// Critically sampled two-channel output: n/2 + n/2 spectral coefficients.
struct SubbandCoefficients {
  Eigen::VectorXd d_lp;
  Eigen::VectorXd d_hp;
  int half_size() const { return static_cast<int>(d_lp.size()); }
};

// GFT, diagonal filtering, and spectral folding in one pass. The sampling
// matrices are applied structurally; no dense operator is formed.
SubbandCoefficients analyze(const SpectralBasis& basis0, const FilterKernel& lp,
                            const Eigen::VectorXd& f);

// Upsample-combine, closed-form inverse (2n multiplications), inverse GFT.
Eigen::VectorXd synthesize(const SpectralBasis& basis0, const SynthesisInverse& inv,
                           const SubbandCoefficients& sub);

// Vertex-domain view of a half-length subband on the reduced graph: U1 * d.
Eigen::VectorXd subband_to_reduced_vertex(const SpectralBasis& basis1, const Eigen::VectorXd& d);

}  // namespace sgfb
