#include "sgfb/laplacian.hpp"

#include <algorithm>
#include <set>

namespace sgfb {

const char* to_string(LaplacianKind kind) {
  return kind == LaplacianKind::Combinatorial ? "combinatorial" : "normalized";
}

LaplacianKind laplacian_kind_from_string(const std::string& s) {
  if (s == "combinatorial") return LaplacianKind::Combinatorial;
  if (s == "normalized") return LaplacianKind::Normalized;
  throw Error(ErrorCode::InvalidArgument, "unknown laplacian kind '" + s + "'");
}

LaplacianMatrix laplacian(const Graph& g, LaplacianKind kind) {
  const Eigen::VectorXd deg = g.degrees();
  Eigen::MatrixXd l = Eigen::MatrixXd(deg.asDiagonal()) - g.adjacency();
  if (kind == LaplacianKind::Combinatorial) return {kind, std::move(l)};
  for (int i = 0; i < g.size(); ++i)
    if (deg(i) <= 0.0)
      throw Error(ErrorCode::ZeroDegreeVertex,
                  "vertex " + std::to_string(i) + " is isolated; normalized Laplacian undefined");
  const Eigen::VectorXd dinv = deg.cwiseSqrt().cwiseInverse();
  Eigen::MatrixXd ln = dinv.asDiagonal() * l * dinv.asDiagonal();
  // exact symmetry despite floating-point scaling
  ln = 0.5 * (ln + ln.transpose()).eval();
  return {kind, std::move(ln)};
}

LaplacianMatrix kron_reduce(const Graph& g, const std::vector<int>& keep, LaplacianKind kind) {
  const int n = g.size();
  if (keep.empty()) throw Error(ErrorCode::EmptyKeepSet, "keep set is empty");
  std::set<int> keep_set(keep.begin(), keep.end());
  if (static_cast<int>(keep_set.size()) != static_cast<int>(keep.size()))
    throw Error(ErrorCode::InvalidArgument, "keep set has duplicates");
  if (*keep_set.begin() < 0 || *keep_set.rbegin() >= n)
    throw Error(ErrorCode::IndexOutOfRange, "keep set index out of range");
  if (static_cast<int>(keep_set.size()) == n)
    throw Error(ErrorCode::InvalidArgument, "keep set must be a proper subset");

  std::vector<int> kept(keep_set.begin(), keep_set.end());
  std::vector<int> removed;
  removed.reserve(n - kept.size());
  for (int i = 0; i < n; ++i)
    if (!keep_set.count(i)) removed.push_back(i);

  const LaplacianMatrix comb = laplacian(g, LaplacianKind::Combinatorial);
  const auto& l = comb.matrix;
  const int nk = static_cast<int>(kept.size());
  const int nr = static_cast<int>(removed.size());

  Eigen::MatrixXd l_vv(nk, nk), l_vr(nk, nr), l_rr(nr, nr);
  for (int i = 0; i < nk; ++i) {
    for (int j = 0; j < nk; ++j) l_vv(i, j) = l(kept[i], kept[j]);
    for (int j = 0; j < nr; ++j) l_vr(i, j) = l(kept[i], removed[j]);
  }
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nr; ++j) l_rr(i, j) = l(removed[i], removed[j]);

  Eigen::FullPivLU<Eigen::MatrixXd> lu(l_rr);
  if (!lu.isInvertible())
    throw Error(ErrorCode::SingularInteriorBlock, "removed block of the Laplacian is singular");

  Eigen::MatrixXd reduced = l_vv - l_vr * lu.solve(l_vr.transpose());
  reduced = 0.5 * (reduced + reduced.transpose()).eval();

  if (kind == LaplacianKind::Combinatorial) return {kind, std::move(reduced)};

  // reduced degrees sit on the diagonal of the reduced combinatorial Laplacian
  const Eigen::VectorXd deg = reduced.diagonal();
  for (int i = 0; i < nk; ++i)
    if (deg(i) <= 0.0)
      throw Error(ErrorCode::ZeroDegreeVertex, "reduced graph has an isolated vertex");
  const Eigen::VectorXd dinv = deg.cwiseSqrt().cwiseInverse();
  Eigen::MatrixXd ln = dinv.asDiagonal() * reduced * dinv.asDiagonal();
  ln = 0.5 * (ln + ln.transpose()).eval();
  return {kind, std::move(ln)};
}

}  // namespace sgfb
