#include <cmath>

#include <gtest/gtest.h>

#include "magnocorr/params.hpp"
#include "magnocorr/units.hpp"

using namespace magnocorr;
using constants::two_pi;

namespace {

// Bose-Einstein occupation computed independently of the library.
double bose(double omega, double t) {
  return 1.0 / (std::exp(1.0546e-34 * omega / (1.3807e-23 * t)) - 1.0);
}

}  // namespace

TEST(ThermalOccupation, ZeroTemperatureIsExactlyZero) {
  EXPECT_EQ(thermal_occupation(two_pi * 10e6, 0.0), 0.0);
  EXPECT_EQ(thermal_occupation(two_pi * 10e9, 0.0), 0.0);
}

TEST(ThermalOccupation, MechanicalModeAtFifteenMillikelvin) {
  const double n = thermal_occupation(two_pi * 10e6, 15e-3);
  EXPECT_NEAR(n, 30.7, 0.1);
  EXPECT_NEAR(n, bose(two_pi * 10e6, 15e-3), 1e-12 * n);
}

TEST(ThermalOccupation, MicrowaveModeIsNegligible) {
  const double n = thermal_occupation(two_pi * 10e9, 15e-3);
  EXPECT_GT(n, 0.0);
  EXPECT_GT(n, 1.0e-14);
  EXPECT_LT(n, 1.5e-14);
}

TEST(ThermalOccupation, RejectsNonPositiveFrequency) {
  EXPECT_THROW(thermal_occupation(0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(thermal_occupation(-1.0, 1.0), std::invalid_argument);
}

TEST(ThermalOccupation, MonotoneInTemperatureAndFrequency) {
  for (double w = two_pi * 1e6; w < two_pi * 2e10; w *= 3.7) {
    double prev = -1.0;
    for (double t = 1e-3; t < 3.0; t *= 1.9) {
      const double n = thermal_occupation(w, t);
      EXPECT_GT(n, prev);
      prev = n;
      EXPECT_LT(thermal_occupation(1.5 * w, t), n);
    }
  }
}

TEST(EtaRatio, Examples) {
  PhysicalParams p;
  p.kappa_2 = p.kappa_1;
  p.gain_g = 0.0;
  EXPECT_DOUBLE_EQ(eta_ratio(p), 1.0);
  p.gain_g = 1.5 * p.kappa_1;
  EXPECT_DOUBLE_EQ(eta_ratio(p), -0.5);
  p.kappa_2 = 2.0 * p.kappa_1;
  p.gain_g = 2.0 * p.kappa_1;
  EXPECT_DOUBLE_EQ(eta_ratio(p), 0.0);
}

TEST(EtaRatio, InvariantUnderJointRescaling) {
  PhysicalParams p;
  const double eta = eta_ratio(p);
  for (double s : {1e-3, 0.5, 7.0, 1e4}) {
    PhysicalParams q = p;
    q.kappa_1 *= s;
    q.kappa_2 *= s;
    q.gain_g *= s;
    EXPECT_NEAR(eta_ratio(q), eta, 1e-14);
  }
}

TEST(EtaRatio, SetEtaRoundTrips) {
  for (double eta : {-1.0, -0.5, 0.0, 0.3, 1.0, 2.5}) {
    PhysicalParams p;
    set_eta(p, eta);
    EXPECT_NEAR(eta_ratio(p), eta, 1e-14);
    EXPECT_GE(p.gain_g, 0.0);
    EXPECT_GE(p.kappa_2, 0.0);
  }
}

TEST(Defaults, BaselineValues) {
  const PhysicalParams p;
  EXPECT_DOUBLE_EQ(p.omega_b, two_pi * 10e6);
  EXPECT_DOUBLE_EQ(p.kappa_1, two_pi * 1e6);
  EXPECT_DOUBLE_EQ(p.kappa_m, two_pi * 0.56e6);
  EXPECT_DOUBLE_EQ(p.gamma_b, two_pi * 100.0);
  EXPECT_DOUBLE_EQ(p.g_ma, two_pi * 3.2e6);
  EXPECT_DOUBLE_EQ(p.G_mb, two_pi * 3.2e6);
  EXPECT_DOUBLE_EQ(p.J, 2.0 * p.kappa_1);
  EXPECT_DOUBLE_EQ(eta_ratio(p), -0.5);
  EXPECT_DOUBLE_EQ(p.temperature_T, 15e-3);
  EXPECT_NO_THROW(p.validate());
}

TEST(Validate, RejectsInvariantViolations) {
  auto expect_bad = [](auto mutate) {
    PhysicalParams p;
    mutate(p);
    EXPECT_THROW(p.validate(), std::invalid_argument);
  };
  expect_bad([](PhysicalParams& p) { p.kappa_1 = 0.0; });
  expect_bad([](PhysicalParams& p) { p.kappa_m = -1.0; });
  expect_bad([](PhysicalParams& p) { p.gamma_b = 0.0; });
  expect_bad([](PhysicalParams& p) { p.omega_b = -1.0; });
  expect_bad([](PhysicalParams& p) { p.temperature_T = -1e-3; });
  expect_bad([](PhysicalParams& p) { p.kappa_2 = -1.0; });
  expect_bad([](PhysicalParams& p) { p.gain_g = -1.0; });
  expect_bad([](PhysicalParams& p) { p.J = std::nan(""); });
}

TEST(RabiFrequency, NoDriveGivesZero) {
  DriveParams d;
  d.B_0 = 0.0;
  EXPECT_EQ(rabi_frequency(d), 0.0);
}

TEST(RabiFrequency, DirectFormula) {
  DriveParams d;
  d.B_0 = 3.9e-5;
  const double volume = 3.141592653589793 * std::pow(250e-6, 3) / 6.0;
  const double expected = std::sqrt(5.0) / 4.0 * two_pi * 28e9 * std::sqrt(4.22e27 * volume) * 3.9e-5;
  EXPECT_NEAR(rabi_frequency(d), expected, 1e-12 * expected);
}

TEST(RabiFrequency, LinearInFieldAndDiameterToThreeHalves) {
  DriveParams d;
  d.B_0 = 1e-4;
  const double base = rabi_frequency(d);
  DriveParams twice = d;
  twice.B_0 *= 2.0;
  EXPECT_NEAR(rabi_frequency(twice), 2.0 * base, 1e-12 * base);
  DriveParams wide = d;
  wide.sphere_diameter *= 1.7;
  EXPECT_NEAR(rabi_frequency(wide) / base, std::pow(1.7, 1.5), 1e-12);
}

TEST(Units, Conversions) {
  const PhysicalParams p;
  EXPECT_DOUBLE_EQ(to_internal(2.0, Unit::Kappa1, ParameterKind::Rate, p), 2.0 * p.kappa_1);
  EXPECT_DOUBLE_EQ(to_internal(-0.91, Unit::OmegaB, ParameterKind::Rate, p), -0.91 * p.omega_b);
  EXPECT_DOUBLE_EQ(to_internal(1e6, Unit::Hz2pi, ParameterKind::Rate, p), two_pi * 1e6);
  EXPECT_DOUBLE_EQ(to_internal(15.0, Unit::MilliKelvin, ParameterKind::Temperature, p), 15e-3);
  EXPECT_THROW(to_internal(1.0, Unit::Kelvin, ParameterKind::Rate, p), std::invalid_argument);
  EXPECT_THROW(to_internal(1.0, Unit::Kappa1, ParameterKind::Temperature, p), std::invalid_argument);
}

TEST(Units, ParameterRegistry) {
  PhysicalParams p;
  set_parameter(p, "J", 3.0);
  EXPECT_EQ(p.J, 3.0);
  set_parameter(p, "T", 0.1);
  EXPECT_EQ(p.temperature_T, 0.1);
  set_parameter(p, "eta", 0.25);
  EXPECT_NEAR(get_parameter(p, "eta"), 0.25, 1e-14);
  EXPECT_FALSE(parameter_kind("nonsense"));
  EXPECT_THROW(set_parameter(p, "nonsense", 1.0), std::invalid_argument);
}

TEST(Enums, ParseRoundTrip) {
  for (auto c : {DiffusionConvention::AsPrinted, DiffusionConvention::AbsoluteValue,
                 DiffusionConvention::PhysicalSum}) {
    EXPECT_EQ(parse_diffusion_convention(to_string(c)), c);
  }
  for (auto v : {DriftVariant::Derived, DriftVariant::Printed}) {
    EXPECT_EQ(parse_drift_variant(to_string(v)), v);
  }
  for (auto m : {CouplingMode::DirectG, CouplingMode::Microscopic}) {
    EXPECT_EQ(parse_coupling_mode(to_string(m)), m);
  }
  EXPECT_THROW(parse_diffusion_convention("bogus"), std::invalid_argument);
}
