#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sgfb/graph.hpp"

namespace sgfb {

// Vertex-sampling spline bank baseline: H_LP = (I + B)/2 with
// B = sum_l w_l A_norm^l, synthesis via the dense inverse 2 (I + K B)^{-1}.
// Kept as the complexity and quality reference for the spectral path.
struct VertexBank {
  Eigen::MatrixXd b;          // polynomial of the normalized adjacency
  Eigen::VectorXd k_diag;     // +1 kept, -1 discarded
  std::vector<int> keep_set;
  double rcond_estimate;      // of (I + K B), from the LU diagonal

  int size() const { return static_cast<int>(b.rows()); }
};

// weights are 1-indexed in the polynomial: weights[l-1] multiplies A_norm^l.
// Throws SingularVertexSynthesis when (I + K B) is numerically singular.
VertexBank vs_build(const Graph& g, const std::vector<double>& weights,
                    const std::vector<int>& keep_set);

// y = (I + K B) f / 2, then f_out = 2 (I + K B)^{-1} y. Dense O(n^3) solve
// per call; that cost is the point of the comparison.
Eigen::VectorXd vs_roundtrip(const VertexBank& bank, const Eigen::VectorXd& f);

// Synthesis stage alone: f_out = 2 (I + K B)^{-1} y.
Eigen::VectorXd vs_synthesize(const VertexBank& bank, const Eigen::VectorXd& y);

}  // namespace sgfb
