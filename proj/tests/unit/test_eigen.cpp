#include <algorithm>
#include <complex>
#include <random>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "magnocorr/eigen.hpp"

using namespace magnocorr;
using cd = std::complex<double>;

namespace {

// Greedy matching of two spectra; returns the worst distance.
double spectrum_distance(std::vector<cd> a, std::vector<cd> b) {
  double worst = 0.0;
  for (const cd& x : a) {
    auto best = std::min_element(b.begin(), b.end(),
                                 [&](const cd& p, const cd& q) { return std::abs(p - x) < std::abs(q - x); });
    worst = std::max(worst, std::abs(*best - x));
    b.erase(best);
  }
  return worst;
}

}  // namespace

TEST(Eigenvalues, Diagonal) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 4);
  m.diagonal() << 3.0, -1.0, 0.5, 7.0;
  const auto ev = eigenvalues(m);
  EXPECT_LT(spectrum_distance(ev, {3.0, -1.0, 0.5, 7.0}), 1e-14);
}

TEST(Eigenvalues, RotationGenerator) {
  Eigen::MatrixXd m(2, 2);
  m << 0.0, 1.0, -1.0, 0.0;
  EXPECT_LT(spectrum_distance(eigenvalues(m), {cd{0, 1}, cd{0, -1}}), 1e-14);
}

TEST(Eigenvalues, EmptyAndScalar) {
  EXPECT_TRUE(eigenvalues(Eigen::MatrixXd(0, 0)).empty());
  Eigen::MatrixXd one(1, 1);
  one << -2.5;
  EXPECT_EQ(eigenvalues(one).front(), cd(-2.5));
}

TEST(Eigenvalues, RejectsBadInput) {
  EXPECT_THROW(eigenvalues(Eigen::MatrixXd::Zero(2, 3)), std::invalid_argument);
  EXPECT_THROW(eigenvalues(Eigen::MatrixXd::Zero(65, 65)), std::invalid_argument);
  Eigen::MatrixXd nan = Eigen::MatrixXd::Zero(2, 2);
  nan(0, 1) = std::nan("");
  EXPECT_THROW(eigenvalues(nan), std::invalid_argument);
}

TEST(Eigenvalues, RecoversConstructedSpectrum) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    // Real block-diagonal Lambda with two complex pairs and four real values.
    Eigen::MatrixXd lambda = Eigen::MatrixXd::Zero(8, 8);
    std::vector<cd> expected;
    for (int k = 0; k < 4; k += 2) {
      const double re = normal(rng), im = std::abs(normal(rng)) + 0.1;
      lambda(k, k) = lambda(k + 1, k + 1) = re;
      lambda(k, k + 1) = im;
      lambda(k + 1, k) = -im;
      expected.push_back({re, im});
      expected.push_back({re, -im});
    }
    for (int k = 4; k < 8; ++k) {
      lambda(k, k) = normal(rng) + 3.0 * (k - 5);
      expected.push_back(lambda(k, k));
    }
    Eigen::MatrixXd q(8, 8);
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) q(i, j) = normal(rng);
    }
    q += 4.0 * Eigen::MatrixXd::Identity(8, 8);  // keep it well conditioned
    const Eigen::MatrixXd m = q * lambda * q.inverse();
    EXPECT_LT(spectrum_distance(eigenvalues(m), expected), 1e-9) << "trial " << trial;
  }
}

TEST(Eigenvalues, AgreesWithReferenceSolver) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int n : {3, 8, 16, 64}) {
    for (int trial = 0; trial < 20; ++trial) {
      Eigen::MatrixXd m(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = normal(rng) * std::pow(10.0, (i - j) % 3);
      }
      const Eigen::VectorXcd ref = Eigen::EigenSolver<Eigen::MatrixXd>(m, false).eigenvalues();
      const std::vector<cd> expected(ref.data(), ref.data() + ref.size());
      const double scale = m.norm();
      EXPECT_LT(spectrum_distance(eigenvalues(m), expected), 1e-9 * scale) << "n=" << n;
    }
  }
}

TEST(Eigenvalues, BackwardErrorOnPhysicalScaleMatrix) {
  // Entries spanning 1e2 .. 1e8 like the drift matrices.
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(3, 3);
  m << -6e6, 5.7e7, 0.0, -5.7e7, -6e6, 2e7, 0.0, 6.28e7, -628.0;
  const auto ev = eigenvalues(m);
  for (const cd& l : ev) {
    const Eigen::MatrixXcd shifted = m.cast<cd>() - l * Eigen::MatrixXcd::Identity(3, 3);
    const double smin = Eigen::JacobiSVD<Eigen::MatrixXcd>(shifted).singularValues().minCoeff();
    EXPECT_LT(smin, 1e-12 * m.norm());
  }
}

TEST(Eigenvalues, ComplexPairsAreConjugate) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd m(8, 8);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) m(i, j) = normal(rng);
  }
  const auto ev = eigenvalues(m);
  std::vector<cd> conj;
  for (const cd& l : ev) conj.push_back(std::conj(l));
  EXPECT_LT(spectrum_distance(ev, conj), 1e-12);
}
