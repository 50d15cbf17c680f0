#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sgfb/laplacian.hpp"

namespace sgfb {

// Eigendecomposition of a graph Laplacian: the GFT engine.
// Eigenvalues ascending, eigenvector columns orthonormal. Sign convention:
// in each column the first entry with |.| > 1e-12 is positive, so repeated
// decompositions of the same matrix are bit-identical.
struct SpectralBasis {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;  // U, columns are u_0 .. u_{n-1}
  LaplacianKind kind;

  int size() const { return static_cast<int>(eigenvalues.size()); }
};

SpectralBasis eigendecompose(const LaplacianMatrix& lap);

// f_bar = U^T f
Eigen::VectorXd gft(const SpectralBasis& basis, const Eigen::VectorXd& f);

// f = U f_bar
Eigen::VectorXd igft(const SpectralBasis& basis, const Eigen::VectorXd& fbar);

// Elementwise product of a diagonal kernel with a spectral signal, O(n).
Eigen::VectorXd apply_diagonal_filter(const Eigen::VectorXd& kernel, const Eigen::VectorXd& fbar);

// The n/2 vertex indices with the largest entries of the last eigenvector,
// ties broken by lower index, returned sorted ascending.
std::vector<int> select_sampling_set(const SpectralBasis& basis);

}  // namespace sgfb
