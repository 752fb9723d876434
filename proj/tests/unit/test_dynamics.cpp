#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "magnocorr/dynamics.hpp"
#include "magnocorr/eigen.hpp"

using namespace magnocorr;

namespace {

PhysicalParams decoupled() {
  PhysicalParams p;
  p.J = 0.0;
  p.g_ma = 0.0;
  p.G_mb = 0.0;
  return p;
}

double max_real(const Mat8& a) {
  double m = -INFINITY;
  for (const auto& ev : eigenvalues(Eigen::MatrixXd(a))) m = std::max(m, ev.real());
  return m;
}

}  // namespace

TEST(DriftMatrix, DecoupledIsBlockDiagonal) {
  const PhysicalParams p = decoupled();
  const Mat8 a = drift_matrix(p, p.Delta_m, 0.0).entries;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      if (i / 2 != j / 2) {
        EXPECT_EQ(a(i, j), 0.0) << i << "," << j;
      }
    }
  }
}

TEST(DriftMatrix, FixedEntries) {
  const PhysicalParams p;
  const Mat8 a = drift_matrix(p, p.Delta_m, p.G_mb).entries;
  EXPECT_EQ(a(6, 7), p.omega_b);
  EXPECT_EQ(a(7, 7), -p.gamma_b);
  EXPECT_EQ(a(0, 3), p.J);
  EXPECT_EQ(a(1, 2), -p.J);
  EXPECT_EQ(a(4, 6), -p.G_mb);
  EXPECT_EQ(a(7, 5), p.G_mb);
  // Net gain shows up as a positive diagonal entry on the second cavity.
  EXPECT_DOUBLE_EQ(a(2, 2), 0.5 * p.kappa_1);
  EXPECT_DOUBLE_EQ(a(3, 3), 0.5 * p.kappa_1);
}

TEST(DriftMatrix, ZeroPatternMatchesPublishedLayout) {
  // 1 where the published matrix has a (possibly sign-ambiguous) entry.
  const int pattern[8][8] = {
      {1, 1, 0, 1, 0, 1, 0, 0}, {1, 1, 1, 0, 1, 0, 0, 0}, {0, 1, 1, 1, 0, 0, 0, 0},
      {1, 0, 1, 1, 0, 0, 0, 0}, {0, 1, 0, 0, 1, 1, 1, 0}, {1, 0, 0, 0, 1, 1, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 1, 1, 1}};
  for (DriftVariant v : {DriftVariant::Derived, DriftVariant::Printed}) {
    PhysicalParams p;
    p.drift_variant = v;
    const Mat8 a = drift_matrix(p, p.Delta_m, p.G_mb).entries;
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        EXPECT_EQ(a(i, j) != 0.0, pattern[i][j] == 1) << i << "," << j;
      }
    }
  }
}

TEST(DriftMatrix, PrintedVariantDiffersOnlyWhereDocumented) {
  PhysicalParams p;
  const Mat8 derived = drift_matrix(p, p.Delta_m, p.G_mb).entries;
  p.drift_variant = DriftVariant::Printed;
  const Mat8 printed = drift_matrix(p, p.Delta_m, p.G_mb).entries;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const bool documented = (i == 5 && j == 4) || (i == 2 && j == 2) || (i == 3 && j == 3);
      if (!documented) {
        EXPECT_EQ(derived(i, j), printed(i, j));
      }
    }
  }
  EXPECT_EQ(printed(5, 4), p.Delta_m);
  EXPECT_EQ(derived(5, 4), -p.Delta_m);
  EXPECT_EQ(printed(2, 2), -p.kappa_2);
}

TEST(DriftMatrix, RejectsNegativeCoupling) {
  const PhysicalParams p;
  EXPECT_THROW(drift_matrix(p, p.Delta_m, -1.0), std::invalid_argument);
}

TEST(DiffusionMatrix, VacuumFloorAtZeroTemperature) {
  PhysicalParams p;
  p.temperature_T = 0.0;
  p.gain_g = 0.0;
  const DiffusionMatrix d = diffusion_matrix(p);
  Mat8 expected = Mat8::Zero();
  expected.diagonal() << p.kappa_1, p.kappa_1, p.kappa_2, p.kappa_2, p.kappa_m, p.kappa_m, 0.0, p.gamma_b;
  EXPECT_EQ(d.entries, expected);
  EXPECT_TRUE(d.warnings.empty());
}

TEST(DiffusionMatrix, Conventions) {
  PhysicalParams p;  // eta = -0.5, T = 15 mK
  const double n2 = thermal_occupation(p.omega_2, p.temperature_T);
  const DiffusionMatrix printed = diffusion_matrix(p);
  EXPECT_DOUBLE_EQ(printed.entries(2, 2), -0.5 * p.kappa_1 * (2 * n2 + 1));
  EXPECT_NEAR(printed.entries(3, 3), -0.5 * p.kappa_1, 1e-9 * p.kappa_1);
  EXPECT_TRUE(printed.has_negative_entry());
  ASSERT_EQ(printed.warnings.size(), 1u);
  EXPECT_NE(printed.warnings[0].find("negative diffusion"), std::string::npos);

  p.diffusion_convention = DiffusionConvention::AbsoluteValue;
  const DiffusionMatrix absval = diffusion_matrix(p);
  EXPECT_DOUBLE_EQ(absval.entries(2, 2), 0.5 * p.kappa_1 * (2 * n2 + 1));
  EXPECT_FALSE(absval.has_negative_entry());

  p.diffusion_convention = DiffusionConvention::PhysicalSum;
  const DiffusionMatrix phys = diffusion_matrix(p);
  EXPECT_DOUBLE_EQ(phys.entries(2, 2), (p.kappa_2 + p.gain_g) * (2 * n2 + 1));
  EXPECT_FALSE(phys.has_negative_entry());
  EXPECT_TRUE(phys.warnings.empty());

  const double nb = thermal_occupation(p.omega_b, p.temperature_T);
  EXPECT_DOUBLE_EQ(phys.entries(7, 7), p.gamma_b * (2 * nb + 1));
  EXPECT_EQ(phys.entries(6, 6), 0.0);
}

TEST(Stability, NegativeIdentity) {
  DriftMatrix a;
  a.entries = -Mat8::Identity();
  const StabilityReport r = stability(a, 1e-9);
  EXPECT_TRUE(r.stable);
  EXPECT_TRUE(r.determinate);
  EXPECT_NEAR(r.margin, -1.0, 1e-14);
  EXPECT_EQ(r.eigenvalues.size(), 8u);
}

TEST(Stability, IsolatedActiveCavityDiverges) {
  const PhysicalParams p = decoupled();
  const StabilityReport r = stability(drift_matrix(p, p.Delta_m, 0.0), p);
  EXPECT_FALSE(r.stable);
  EXPECT_NEAR(r.margin, -p.kappa_2t(), 1e-9 * p.kappa_1);
}

TEST(Stability, BaselineIsStable) {
  const PhysicalParams p;
  const StabilityReport r = stability(drift_matrix(p, p.Delta_m, p.G_mb), p);
  EXPECT_TRUE(r.stable);
  EXPECT_LT(r.margin, 0.0);
}

TEST(Stability, PassiveBlocksDecayAtLeastAtTheirRates) {
  PhysicalParams p = decoupled();
  p.gain_g = 0.0;
  const Mat8 a = drift_matrix(p, p.Delta_m, 0.0).entries;
  const double bound = -std::min({p.kappa_1, p.kappa_2, p.kappa_m, 0.5 * p.gamma_b});
  EXPECT_LE(max_real(a), bound + 1e-6 * p.gamma_b);
}

TEST(Stability, EigenvaluesContinuousUnderSmallPerturbation) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> jitter(-0.01, 0.01);
  const PhysicalParams base;
  const Mat8 a = drift_matrix(base, base.Delta_m, base.G_mb).entries;
  const double m0 = max_real(a);
  for (int trial = 0; trial < 50; ++trial) {
    PhysicalParams p = base;
    p.J *= 1.0 + jitter(rng);
    p.g_ma *= 1.0 + jitter(rng);
    p.G_mb *= 1.0 + jitter(rng);
    p.Delta_1 *= 1.0 + jitter(rng);
    p.Delta_m *= 1.0 + jitter(rng);
    const Mat8 b = drift_matrix(p, p.Delta_m, p.G_mb).entries;
    // A 1% perturbation of entries bounded by ~1e8 rad/s cannot move the
    // spectral abscissa by more than a few percent of the largest entry.
    EXPECT_LT(std::abs(max_real(b) - m0), 0.05 * a.cwiseAbs().maxCoeff());
  }
}

TEST(Stability, GaugeRotationIsSimilarity) {
  // Rotating the magnon quadratures by a global phase is an orthogonal similarity.
  const PhysicalParams p;
  const Mat8 a = drift_matrix(p, p.Delta_m, p.G_mb).entries;
  for (double theta : {0.3, 1.1, 2.9}) {
    Mat8 r = Mat8::Identity();
    for (int k : {0, 2, 4}) {
      r(k, k) = r(k + 1, k + 1) = std::cos(theta);
      r(k, k + 1) = -std::sin(theta);
      r(k + 1, k) = std::sin(theta);
    }
    DriftMatrix rotated;
    rotated.entries = r * a * r.transpose();
    const StabilityReport s0 = stability(DriftMatrix{a}, p);
    const StabilityReport s1 = stability(rotated, p);
    EXPECT_EQ(s0.stable, s1.stable);
    EXPECT_NEAR(s0.margin, s1.margin, 1e-9 * p.kappa_1);
  }
}

TEST(WriteMatrix, SeventeenSignificantDigits) {
  Mat8 m = Mat8::Zero();
  m(0, 0) = 0.1;
  m(7, 7) = -2.0 / 3.0;
  std::ostringstream out;
  write_matrix(out, m);
  std::istringstream in(out.str());
  Mat8 back;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) in >> back(i, j);
  }
  EXPECT_EQ(back, m);
  EXPECT_NE(out.str().find("1.0000000000000001e-01"), std::string::npos);
}
