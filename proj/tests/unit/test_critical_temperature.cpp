#include <gtest/gtest.h>

#include "magnocorr/critical_temperature.hpp"

using namespace magnocorr;

TEST(CriticalTemperature, AgreesWithFineLinearScan) {
  PhysicalParams p;
  p.diffusion_convention = DiffusionConvention::PhysicalSum;
  set_eta(p, 0.5);
  // Larger damping lowers the critical temperature; the bisection must land
  // within its tolerance of the last entangled point of a 1000-point scan.
  for (double scale : {1.0, 3.0}) {
    PhysicalParams q = p;
    q.kappa_m *= scale;
    q.gamma_b *= scale;
    if (entanglement_at_temperature(q, ModeId::A1, ModeId::B, 0.0) <= 1e-6) continue;
    const CriticalTemperature tc = find_critical_temperature(q, ModeId::A1, ModeId::B);
    ASSERT_FALSE(tc.saturated);
    double last = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double t = 2.0 * i / 999.0;
      if (entanglement_at_temperature(q, ModeId::A1, ModeId::B, t) > 1e-6) last = t;
      else if (!tc.non_monotonic) break;
    }
    EXPECT_NEAR(tc.kelvin, last, 2.0 / 999.0 + 1e-3) << "scale " << scale;
  }
}

TEST(CriticalTemperature, BaselineDistantPair) {
  const CriticalTemperature tc = find_critical_temperature(PhysicalParams{}, ModeId::A2, ModeId::M);
  EXPECT_GT(tc.kelvin, 0.05);
  EXPECT_LT(tc.kelvin, 2.0);
  EXPECT_GT(entanglement_at_temperature(PhysicalParams{}, ModeId::A2, ModeId::M, tc.kelvin - 2e-3), 0.0);
  EXPECT_EQ(entanglement_at_temperature(PhysicalParams{}, ModeId::A2, ModeId::M, tc.kelvin + 2e-3), 0.0);
}

TEST(CriticalTemperature, Errors) {
  PhysicalParams p;
  p.J = 0.0;  // unstable
  EXPECT_THROW(find_critical_temperature(p, ModeId::A2, ModeId::M), CriticalTemperatureError);
  PhysicalParams q;
  q.G_mb = 0.0;
  q.g_ma = 0.0;
  set_eta(q, 1.0);
  EXPECT_THROW(find_critical_temperature(q, ModeId::A2, ModeId::M), CriticalTemperatureError);
}
