#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sgfb/graph.hpp"

namespace sgfb {

enum class LaplacianKind { Combinatorial, Normalized };

const char* to_string(LaplacianKind kind);
LaplacianKind laplacian_kind_from_string(const std::string& s);

struct LaplacianMatrix {
  LaplacianKind kind;
  Eigen::MatrixXd matrix;

  int size() const { return static_cast<int>(matrix.rows()); }
};

// L = D - A, or the normalized form I - D^{-1/2} A D^{-1/2}.
// Normalized requires every degree > 0.
LaplacianMatrix laplacian(const Graph& g, LaplacianKind kind);

// Kron reduction onto the kept vertex set. The Schur complement is always
// taken on the combinatorial Laplacian; for Normalized the reduced matrix is
// re-normalized from the reduced degrees afterwards.
LaplacianMatrix kron_reduce(const Graph& g, const std::vector<int>& keep, LaplacianKind kind);

}  // namespace sgfb
