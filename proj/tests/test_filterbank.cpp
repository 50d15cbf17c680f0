#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "sgfb/filterbank.hpp"
#include "sgfb/graph.hpp"
#include "sgfb/kernels.hpp"

using namespace sgfb;

namespace {

SpectralBasis sensor_basis(int n, LaplacianKind kind, std::uint64_t seed = 1) {
  return eigendecompose(laplacian(random_sensor_graph(n, seed), kind));
}

}  // namespace

TEST_CASE("exact ideal kernel folds to the +1/-1 pattern with margin 2") {
  auto basis = sensor_basis(16, LaplacianKind::Normalized);
  auto lp = design_exact_ideal_kernel(basis);
  auto fold = fold_coefficients(lp);
  for (int k = 0; k < 8; ++k) {
    CHECK(fold.psi(k) == 1.0);
    CHECK(fold.psi(15 - k) == -1.0);
  }
  auto report = pr_check(fold);
  CHECK(report.ok);
  CHECK(report.margin == doctest::Approx(2.0));
}

TEST_CASE("ideal kernel with zero epsilon below the maximal cutoff is rejected") {
  auto basis = sensor_basis(16, LaplacianKind::Normalized);
  const double low_cut = basis.eigenvalues(3);
  CHECK_THROWS_WITH_AS(static_cast<void>(design_ideal_kernel(basis, low_cut, 0.0)),
                       doctest::Contains("PRViolation"), Error);
  // repeated eigenvalue across the half point: no ideal split exists
  Graph k4 = Graph::from_edges(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1},
                                   {2, 3, 1}});
  auto k4_basis = eigendecompose(laplacian(k4, LaplacianKind::Combinatorial));
  CHECK_THROWS_WITH_AS(static_cast<void>(design_exact_ideal_kernel(k4_basis)),
                       doctest::Contains("PRViolation"), Error);
}

TEST_CASE("ideal kernel stopband pairs have margin 1 - epsilon_psi^2") {
  auto basis = sensor_basis(16, LaplacianKind::Normalized);
  auto lp = design_ideal_kernel(basis, basis.eigenvalues(3), 0.1);
  auto report = pr_check(fold_coefficients(lp));
  CHECK(report.ok);
  // both-stopband pair: psi = -0.8 on both sides, |1 - 0.64| = 0.36
  CHECK(report.margin == doctest::Approx(0.36));
}

TEST_CASE("ideal kernel cutoff range is enforced") {
  auto basis = sensor_basis(16, LaplacianKind::Normalized);
  CHECK_THROWS_WITH_AS(
      static_cast<void>(design_ideal_kernel(basis, basis.eigenvalues(15), 0.1)),
      doctest::Contains("CutoffOutOfRange"), Error);
  // cutoff must be strictly above lambda_0
  CHECK_THROWS_AS(static_cast<void>(design_ideal_kernel(basis, basis.eigenvalues(0), 0.1)),
                  Error);
  CHECK_THROWS_AS(static_cast<void>(design_ideal_kernel(basis, -1.0, 0.1)), Error);
}

TEST_CASE("butterworth kernel values") {
  auto basis = sensor_basis(16, LaplacianKind::Normalized);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int beta : {1, 2, 5, 10, 20}) {
    // force lambda_cut onto an eigenvalue so the ratio is exactly 1
    const double cut = basis.eigenvalues(7);
    auto lp = design_butterworth_kernel(basis, cut, beta);
    CHECK(std::abs(lp.values(7) - inv_sqrt2) < 1e-14);
    CHECK(lp.values(0) == doctest::Approx(1.0));  // DC passthrough
    for (int i = 1; i < 16; ++i) CHECK(lp.values(i) < lp.values(i - 1) + 1e-15);
  }
  // beta = 20 at twice the cutoff: (1 + 2^40)^{-1/2} ~ 9.5e-7
  auto lp = design_butterworth_kernel(basis, basis.eigenvalues(7) / 2.0, 20);
  const double expected = 1.0 / std::sqrt(1.0 + std::pow(2.0, 40.0));
  CHECK(lp.values(7) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected == doctest::Approx(9.5367431640625e-7).epsilon(1e-6));
  CHECK_THROWS_AS(static_cast<void>(design_butterworth_kernel(basis, -1.0, 5)), Error);
}

TEST_CASE("highpass kernel is the complement") {
  auto basis = sensor_basis(16, LaplacianKind::Normalized);
  auto lp = design_butterworth_kernel(basis, basis.eigenvalues(7), 3);
  auto hp = highpass_kernel(lp);
  CHECK(((lp.values + hp.values).array() - 1.0).abs().maxCoeff() < 1e-15);
  CHECK(hp.values(7) == doctest::Approx(1.0 - 1.0 / std::sqrt(2.0)));
  // H = 1/2 is a fixed point
  FilterKernel half;
  half.values = Eigen::VectorXd::Constant(4, 0.5);
  CHECK((highpass_kernel(half).values.array() - 0.5).abs().maxCoeff() == 0.0);
}

TEST_CASE("pr_check flags a violating pair") {
  FoldCoefficients fold{Eigen::VectorXd::Ones(4)};
  auto report = pr_check(fold);
  CHECK(!report.ok);
  CHECK(report.margin == 0.0);
  CHECK_THROWS_WITH_AS(static_cast<void>(pr_check(FoldCoefficients{Eigen::VectorXd::Ones(3)})),
                       doctest::Contains("OddVertexCount"), Error);
}

TEST_CASE("butterworth kernels pass PR on every test graph") {
  for (auto kind : {LaplacianKind::Combinatorial, LaplacianKind::Normalized}) {
    for (int beta : {5, 10, 20}) {
      auto basis = sensor_basis(40, kind, 3);
      auto lp = design_butterworth_kernel(basis, basis.eigenvalues(19), beta);
      CHECK(pr_check(fold_coefficients(lp)).ok);
    }
  }
}

TEST_CASE("analysis matches the worked 4-point example and the dense operators") {
  // basis chosen as the identity so ubar = f = [a, b, c, d]
  SpectralBasis basis;
  basis.kind = LaplacianKind::Combinatorial;
  basis.eigenvalues = Eigen::VectorXd::LinSpaced(4, 0.0, 3.0);
  basis.eigenvectors = Eigen::MatrixXd::Identity(4, 4);

  FilterKernel lp;
  lp.values = Eigen::VectorXd(4);
  lp.values << 1.0, 1.0, 0.0, 0.0;

  Eigen::VectorXd f(4);
  f << 1.5, -2.0, 0.25, 3.0;  // [a, b, c, d]
  auto sub = analyze(basis, lp, f);
  CHECK(sub.d_lp(0) == doctest::Approx(f(0)));
  CHECK(sub.d_lp(1) == doctest::Approx(f(1)));
  CHECK(sub.d_hp(0) == doctest::Approx(-f(3)));
  CHECK(sub.d_hp(1) == doctest::Approx(-f(2)));

  // dense oracle: d = S_d * H * ubar
  Eigen::MatrixXd h_lp = lp.values.asDiagonal();
  Eigen::MatrixXd h_hp = (Eigen::VectorXd::Ones(4) - lp.values).asDiagonal();
  Eigen::VectorXd d_lp_dense = oracle::dense_s_dlp(2) * h_lp * f;
  Eigen::VectorXd d_hp_dense = oracle::dense_s_dhp(2) * h_hp * f;
  CHECK((sub.d_lp - d_lp_dense).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((sub.d_hp - d_hp_dense).cwiseAbs().maxCoeff() < 1e-15);

  // synthesis recovers the input
  auto inv = make_synthesis_inverse(lp);
  Eigen::VectorXd rec = synthesize(basis, inv, sub);
  CHECK((rec - f).cwiseAbs().maxCoeff() < 1e-12);

  // hand-computed inverse via two 2x2 solves
  Eigen::VectorXd y(4);
  y << sub.d_lp(0) + sub.d_hp(0), sub.d_lp(1) + sub.d_hp(1), sub.d_lp(1) - sub.d_hp(1),
      sub.d_lp(0) - sub.d_hp(0);
  Eigen::VectorXd psi = fold_coefficients(lp).psi;
  Eigen::VectorXd z = oracle::dense_synthesis_inverse(psi, y);
  CHECK((z - f).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("analysis of a passband eigenvector lands in the low channel only") {
  auto basis = sensor_basis(16, LaplacianKind::Normalized);
  auto lp = design_exact_ideal_kernel(basis);
  auto sub = analyze(basis, lp, basis.eigenvectors.col(0));
  CHECK(sub.d_hp.cwiseAbs().maxCoeff() < 1e-12);
  CHECK(std::abs(sub.d_lp(0) - 1.0) < 1e-12);
  // zero in, zero out; critical sampling
  auto zero = analyze(basis, lp, Eigen::VectorXd::Zero(16));
  CHECK(zero.d_lp.cwiseAbs().maxCoeff() == 0.0);
  CHECK(zero.d_hp.cwiseAbs().maxCoeff() == 0.0);
  CHECK(sub.d_lp.size() + sub.d_hp.size() == 16);
}

TEST_CASE("analysis is linear") {
  auto basis = sensor_basis(30, LaplacianKind::Combinatorial, 7);
  auto lp = design_butterworth_kernel(basis, basis.eigenvalues(14), 5);
  Eigen::VectorXd f = oracle::random_vector(30, 71);
  Eigen::VectorXd g = oracle::random_vector(30, 72);
  const double a = 1.7, b = -0.4;
  auto sub_f = analyze(basis, lp, f);
  auto sub_g = analyze(basis, lp, g);
  auto sub_mix = analyze(basis, lp, a * f + b * g);
  CHECK((sub_mix.d_lp - a * sub_f.d_lp - b * sub_g.d_lp).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((sub_mix.d_hp - a * sub_f.d_hp - b * sub_g.d_hp).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("closed-form synthesis inverse matches the dense solve") {
  for (int n : {4, 8, 100}) {
    for (int trial = 0; trial < 10; ++trial) {
      Eigen::VectorXd psi = oracle::random_valid_psi(n, 100 * n + trial);
      auto inv = make_synthesis_inverse(FoldCoefficients{psi});
      Eigen::VectorXd y = oracle::random_vector(n, 200 * n + trial);
      Eigen::VectorXd z(n);
      kernels::synthesis_inverse_apply(y.data(), inv.psi.data(), inv.psi_tilde.data(), z.data(),
                                       n);
      Eigen::VectorXd z_dense = oracle::dense_synthesis_inverse(psi, y);
      CHECK((z - z_dense).cwiseAbs().maxCoeff() < 1e-10);
      // psi_tilde symmetric under index reversal
      for (int k = 0; k < n / 2; ++k) CHECK(inv.psi_tilde(k) == inv.psi_tilde(n - 1 - k));
    }
  }
}

TEST_CASE("determinant of the combine matrix factors over pairs") {
  for (int n : {4, 8, 16}) {
    Eigen::VectorXd psi = oracle::random_valid_psi(n, 7 * n);
    const double det = oracle::dense_c_matrix(psi).determinant();
    double expected = 1.0;
    for (int k = 0; k < n / 2; ++k) expected *= 1.0 - psi(k) * psi(n - 1 - k);
    CHECK(std::abs(det) == doctest::Approx(std::abs(expected)).epsilon(1e-8));
  }
  // violating pair: psi_k = 1 / psi_{n-1-k}
  Eigen::VectorXd bad = oracle::random_valid_psi(8, 99);
  bad(0) = 2.0;
  bad(7) = 0.5;
  CHECK(std::abs(oracle::dense_c_matrix(bad).determinant()) < 1e-8);
  CHECK_THROWS_WITH_AS(static_cast<void>(make_synthesis_inverse(FoldCoefficients{bad})),
                       doctest::Contains("SingularSynthesis"), Error);
}

TEST_CASE("perfect reconstruction across graphs, laplacians, kernels") {
  Graph path8 = Graph::from_edges(
      8, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {5, 6, 1}, {6, 7, 1}});
  Graph k4 = Graph::from_edges(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1},
                                   {2, 3, 1}});
  Graph sensor = random_sensor_graph(100, 1);
  for (const Graph& g : {path8, k4, sensor}) {
    for (auto kind : {LaplacianKind::Combinatorial, LaplacianKind::Normalized}) {
      auto basis = eigendecompose(laplacian(g, kind));
      const int n = basis.size();
      std::vector<FilterKernel> kernels_to_try;
      // the exact ideal split needs a spectral gap at the half point, which
      // complete graphs lack
      if (basis.eigenvalues(n / 2 - 1) < basis.eigenvalues(n / 2))
        kernels_to_try.push_back(design_exact_ideal_kernel(basis));
      // a quarter-band cutoff is degenerate when the spectrum repeats past the
      // half point (both halves of a pair land in the passband)
      if (basis.eigenvalues(n / 4) < basis.eigenvalues(n / 2))
        kernels_to_try.push_back(design_ideal_kernel(basis, basis.eigenvalues(n / 4), 0.1));
      for (int beta : {5, 10, 20})
        kernels_to_try.push_back(
            design_butterworth_kernel(basis, basis.eigenvalues(n / 2 - 1), beta));
      for (const auto& lp : kernels_to_try) {
        auto inv = make_synthesis_inverse(lp);
        for (int trial = 0; trial < 5; ++trial) {
          Eigen::VectorXd f = oracle::random_vector(n, 31 * n + trial);
          Eigen::VectorXd rec = synthesize(basis, inv, analyze(basis, lp, f));
          CHECK((rec - f).norm() <= 1e-9 * f.norm());
        }
      }
    }
  }
}

TEST_CASE("zero subbands synthesize to zero") {
  auto basis = sensor_basis(16, LaplacianKind::Normalized);
  auto inv = make_synthesis_inverse(design_exact_ideal_kernel(basis));
  SubbandCoefficients zero{Eigen::VectorXd::Zero(8), Eigen::VectorXd::Zero(8)};
  CHECK(synthesize(basis, inv, zero).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("subband view on the reduced graph round-trips") {
  Graph g = random_sensor_graph(20, 3);
  auto basis0 = eigendecompose(laplacian(g, LaplacianKind::Combinatorial));
  auto keep = select_sampling_set(basis0);
  auto basis1 = eigendecompose(kron_reduce(g, keep, LaplacianKind::Combinatorial));
  Eigen::VectorXd d = oracle::random_vector(10, 5);
  Eigen::VectorXd vertex = subband_to_reduced_vertex(basis1, d);
  CHECK((gft(basis1, vertex) - d).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((subband_to_reduced_vertex(basis1, Eigen::VectorXd::Unit(10, 0)) -
         basis1.eigenvectors.col(0))
            .cwiseAbs()
            .maxCoeff() < 1e-14);
}
