#include "magnocorr/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

#include "magnocorr/eigen.hpp"

namespace magnocorr {

DriftMatrix drift_matrix(const PhysicalParams& params, double delta_eff, double G_mb_real) {
  if (!(G_mb_real >= 0.0)) throw std::invalid_argument("drift_matrix: G_mb must be gauge-fixed >= 0");

  const bool printed = params.drift_variant == DriftVariant::Printed;
  const double k1 = params.kappa_1;
  const double k2 = printed ? params.kappa_2 : params.kappa_2t();
  const double km = params.kappa_m;
  const double d1 = params.Delta_1;
  const double d2 = params.Delta_2;
  const double gma = params.g_ma;
  const double j = params.J;
  const double g = G_mb_real;

  DriftMatrix out;
  Mat8& a = out.entries;
  // 0-based indices; comments use the 1-based labels of the matrix display.
  a(0, 0) = -k1;  a(0, 1) = d1;   a(0, 3) = j;    a(0, 5) = gma;
  a(1, 0) = -d1;  a(1, 1) = -k1;  a(1, 2) = -j;   a(1, 4) = -gma;
  a(2, 1) = j;    a(2, 2) = -k2;  a(2, 3) = d2;
  a(3, 0) = -j;   a(3, 2) = -d2;  a(3, 3) = -k2;
  a(4, 1) = gma;  a(4, 4) = -km;  a(4, 5) = delta_eff;  a(4, 6) = -g;
  a(5, 0) = -gma; a(5, 5) = -km;
  a(5, 4) = printed ? delta_eff : -delta_eff;  // (6,5)
  a(6, 7) = params.omega_b;
  a(7, 5) = g;    a(7, 6) = -params.omega_b;  a(7, 7) = -params.gamma_b;
  return out;
}

DiffusionMatrix diffusion_matrix(const PhysicalParams& params) {
  const double t = params.temperature_T;
  const double n1 = thermal_occupation(params.omega_1, t);
  const double n2 = thermal_occupation(params.omega_2, t);
  const double nm = thermal_occupation(params.omega_m, t);
  const double nb = thermal_occupation(params.omega_b, t);

  const double k2t = params.kappa_2t();
  double d2 = 0.0;
  switch (params.diffusion_convention) {
    case DiffusionConvention::AsPrinted: d2 = k2t * (2.0 * n2 + 1.0); break;
    case DiffusionConvention::AbsoluteValue: d2 = std::abs(k2t) * (2.0 * n2 + 1.0); break;
    case DiffusionConvention::PhysicalSum:
      d2 = (params.kappa_2 + params.gain_g) * (2.0 * n2 + 1.0);
      break;
  }

  DiffusionMatrix out;
  Mat8& d = out.entries;
  d(0, 0) = d(1, 1) = params.kappa_1 * (2.0 * n1 + 1.0);
  d(2, 2) = d(3, 3) = d2;
  d(4, 4) = d(5, 5) = params.kappa_m * (2.0 * nm + 1.0);
  d(6, 6) = 0.0;
  d(7, 7) = params.gamma_b * (2.0 * nb + 1.0);
  if (d2 < 0.0) out.warnings.emplace_back("negative diffusion");
  return out;
}

StabilityReport stability(const DriftMatrix& drift, double tol_stab) {
  StabilityReport report;
  try {
    report.eigenvalues = eigenvalues(Eigen::MatrixXd(drift.entries));
  } catch (const EigenNonConvergence&) {
    report.determinate = false;
    report.stable = false;
    report.margin = std::numeric_limits<double>::quiet_NaN();
    return report;
  }
  double margin = -std::numeric_limits<double>::infinity();
  for (const auto& ev : report.eigenvalues) margin = std::max(margin, ev.real());
  report.margin = margin;
  report.stable = margin < -tol_stab;
  return report;
}

StabilityReport stability(const DriftMatrix& drift, const PhysicalParams& params) {
  return stability(drift, kRelativeStabilityTolerance * params.kappa_1);
}

void write_matrix(std::ostream& out, const Mat8& matrix) {
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      if (j) out << ' ';
      out << fmt::format("{:.16e}", matrix(i, j));
    }
    out << '\n';
  }
}

}  // namespace magnocorr
