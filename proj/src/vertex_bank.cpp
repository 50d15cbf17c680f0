#include "sgfb/vertex_bank.hpp"

#include <set>

namespace sgfb {

namespace {

Eigen::MatrixXd normalized_adjacency(const Graph& g) {
  const Eigen::VectorXd deg = g.degrees();
  for (int i = 0; i < g.size(); ++i)
    if (deg(i) <= 0.0)
      throw Error(ErrorCode::ZeroDegreeVertex, "vertex " + std::to_string(i) + " is isolated");
  const Eigen::VectorXd dinv = deg.cwiseSqrt().cwiseInverse();
  return dinv.asDiagonal() * g.adjacency() * dinv.asDiagonal();
}

double lu_rcond_estimate(const Eigen::PartialPivLU<Eigen::MatrixXd>& lu) {
  const Eigen::VectorXd diag = lu.matrixLU().diagonal().cwiseAbs();
  const double dmax = diag.maxCoeff();
  if (dmax == 0.0) return 0.0;
  return diag.minCoeff() / dmax;
}

}  // namespace

VertexBank vs_build(const Graph& g, const std::vector<double>& weights,
                    const std::vector<int>& keep_set) {
  const int n = g.size();
  if (weights.empty()) throw Error(ErrorCode::InvalidArgument, "need at least one weight");
  std::set<int> keep(keep_set.begin(), keep_set.end());
  if (keep.empty() || static_cast<int>(keep.size()) == n)
    throw Error(ErrorCode::InvalidArgument, "keep set must be a proper nonempty subset");
  if (*keep.begin() < 0 || *keep.rbegin() >= n)
    throw Error(ErrorCode::IndexOutOfRange, "keep set index out of range");

  const Eigen::MatrixXd a = normalized_adjacency(g);

  // Horner: B = A (w_1 I + A (w_2 I + ... A (w_J I)))
  const int order = static_cast<int>(weights.size());
  Eigen::MatrixXd m = weights[order - 1] * Eigen::MatrixXd::Identity(n, n);
  for (int l = order - 1; l >= 1; --l) {
    m = (a * m).eval();
    m.diagonal().array() += weights[l - 1];
  }
  Eigen::MatrixXd b = a * m;

  VertexBank bank;
  bank.b = std::move(b);
  bank.keep_set.assign(keep.begin(), keep.end());
  bank.k_diag = Eigen::VectorXd::Constant(n, -1.0);
  for (int i : bank.keep_set) bank.k_diag(i) = 1.0;

  Eigen::MatrixXd system = Eigen::MatrixXd::Identity(n, n) + bank.k_diag.asDiagonal() * bank.b;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
  bank.rcond_estimate = lu_rcond_estimate(lu);
  if (bank.rcond_estimate < 1e-12)
    throw Error(ErrorCode::SingularVertexSynthesis,
                "(I + K B) is numerically singular (rcond ~ " +
                    std::to_string(bank.rcond_estimate) + ")");
  return bank;
}

Eigen::VectorXd vs_synthesize(const VertexBank& bank, const Eigen::VectorXd& y) {
  const int n = bank.size();
  if (y.size() != n) throw Error(ErrorCode::LengthMismatch, "signal does not match bank size");
  Eigen::MatrixXd system = Eigen::MatrixXd::Identity(n, n) + bank.k_diag.asDiagonal() * bank.b;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
  if (lu_rcond_estimate(lu) < 1e-12)
    throw Error(ErrorCode::SingularVertexSynthesis, "(I + K B) is numerically singular");
  return 2.0 * lu.solve(y);
}

Eigen::VectorXd vs_roundtrip(const VertexBank& bank, const Eigen::VectorXd& f) {
  const int n = bank.size();
  if (f.size() != n) throw Error(ErrorCode::LengthMismatch, "signal does not match bank size");
  const Eigen::VectorXd y =
      0.5 * (f + bank.k_diag.asDiagonal() * (bank.b * f));
  return vs_synthesize(bank, y);
}

}  // namespace sgfb
