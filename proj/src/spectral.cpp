#include "sgfb/spectral.hpp"

#include <algorithm>
#include <numeric>

#include "sgfb/kernels.hpp"

namespace sgfb {

SpectralBasis eigendecompose(const LaplacianMatrix& lap) {
  const auto& m = lap.matrix;
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12)
    throw Error(ErrorCode::NotSymmetric,
                "Laplacian asymmetry " + std::to_string(asym) + " exceeds 1e-12");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::ConvergenceFailure, "eigendecomposition did not converge");

  SpectralBasis basis{solver.eigenvalues(), solver.eigenvectors(), lap.kind};

  // sign convention: first entry with |.| > 1e-12 positive in each column
  for (int c = 0; c < basis.size(); ++c) {
    for (int r = 0; r < basis.size(); ++r) {
      const double v = basis.eigenvectors(r, c);
      if (std::abs(v) > 1e-12) {
        if (v < 0.0) basis.eigenvectors.col(c) = -basis.eigenvectors.col(c);
        break;
      }
    }
  }
  return basis;
}

Eigen::VectorXd gft(const SpectralBasis& basis, const Eigen::VectorXd& f) {
  if (f.size() != basis.size())
    throw Error(ErrorCode::LengthMismatch, "signal length does not match basis size");
  return basis.eigenvectors.transpose() * f;
}

Eigen::VectorXd igft(const SpectralBasis& basis, const Eigen::VectorXd& fbar) {
  if (fbar.size() != basis.size())
    throw Error(ErrorCode::LengthMismatch, "spectral length does not match basis size");
  return basis.eigenvectors * fbar;
}

Eigen::VectorXd apply_diagonal_filter(const Eigen::VectorXd& kernel,
                                      const Eigen::VectorXd& fbar) {
  if (kernel.size() != fbar.size())
    throw Error(ErrorCode::LengthMismatch, "kernel length does not match signal length");
  Eigen::VectorXd out(fbar.size());
  kernels::diag_mul(kernel.data(), fbar.data(), out.data(), static_cast<std::size_t>(fbar.size()));
  return out;
}

std::vector<int> select_sampling_set(const SpectralBasis& basis) {
  const int n = basis.size();
  if (n % 2 != 0)
    throw Error(ErrorCode::OddVertexCount, "sampling set selection needs even vertex count");
  const Eigen::VectorXd last = basis.eigenvectors.col(n - 1);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return last(a) > last(b); });
  order.resize(n / 2);
  std::sort(order.begin(), order.end());
  return order;
}

}  // namespace sgfb
