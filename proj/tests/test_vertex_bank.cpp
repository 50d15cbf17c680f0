#include "doctest.h"

#include "oracles.hpp"
#include "sgfb/graph.hpp"
#include "sgfb/spectral.hpp"
#include "sgfb/vertex_bank.hpp"

using namespace sgfb;

namespace {

std::vector<int> half_keep(int n) {
  std::vector<int> keep;
  for (int i = 0; i < n / 2; ++i) keep.push_back(i);
  return keep;
}

}  // namespace

TEST_CASE("single-term bank is the normalized adjacency") {
  Graph g = random_sensor_graph(20, 5);
  auto bank = vs_build(g, {1.0}, half_keep(20));
  // spectral response of (I + A_norm)/2 is (1 + (1 - lambda))/2
  auto basis = eigendecompose(laplacian(g, LaplacianKind::Normalized));
  Eigen::MatrixXd h_lp = 0.5 * (Eigen::MatrixXd::Identity(20, 20) + bank.b);
  Eigen::MatrixXd expected =
      basis.eigenvectors *
      (0.5 * (1.0 + (1.0 - basis.eigenvalues.array()))).matrix().asDiagonal() *
      basis.eigenvectors.transpose();
  CHECK((h_lp - expected).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("all-zero weights give the identity path") {
  Graph g = random_sensor_graph(16, 2);
  CHECK_THROWS_AS(static_cast<void>(vs_build(g, {}, half_keep(16))), Error);
  auto bank = vs_build(g, {0.0}, half_keep(16));
  CHECK(bank.b.cwiseAbs().maxCoeff() == 0.0);
  Eigen::VectorXd f = oracle::random_vector(16, 8);
  CHECK((vs_roundtrip(bank, f) - f).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("three-term bank reconstructs on the sensor graph") {
  Graph g = random_sensor_graph(100, 1);
  auto bank = vs_build(g, {1.5, -0.6, 0.1}, half_keep(100));
  CHECK(bank.rcond_estimate > 0.0);
  for (int trial = 0; trial < 5; ++trial) {
    Eigen::VectorXd f = oracle::random_vector(100, 40 + trial);
    Eigen::VectorXd out = vs_roundtrip(bank, f);
    CHECK((out - f).norm() <= 1e-8 * f.norm());
  }
}

TEST_CASE("horner polynomial matches direct powers") {
  Graph g = random_sensor_graph(12, 6);
  const std::vector<double> w = {0.7, -0.3, 0.05};
  auto bank = vs_build(g, w, half_keep(12));
  const Eigen::VectorXd deg = g.degrees();
  const Eigen::VectorXd dinv = deg.cwiseSqrt().cwiseInverse();
  Eigen::MatrixXd a = dinv.asDiagonal() * g.adjacency() * dinv.asDiagonal();
  Eigen::MatrixXd direct = Eigen::MatrixXd::Zero(12, 12);
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(12, 12);
  for (std::size_t l = 0; l < w.size(); ++l) {
    power = (power * a).eval();
    direct += w[l] * power;
  }
  CHECK((bank.b - direct).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("singular construction is rejected") {
  // two K2 components, both endpoints of the first edge kept: the
  // corresponding block of I + K*A_norm is [[1,1],[1,1]], rank one.
  Graph g = Graph::from_edges(4, {{0, 1, 1.0}, {2, 3, 1.0}});
  CHECK_THROWS_WITH_AS(static_cast<void>(vs_build(g, {1.0}, {0, 1})),
                       doctest::Contains("SingularVertexSynthesis"), Error);
}
