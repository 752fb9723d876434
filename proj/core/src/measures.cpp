#include "magnocorr/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "magnocorr/eigen.hpp"

namespace magnocorr {

std::string_view mode_name(ModeId mode) {
  switch (mode) {
    case ModeId::A1: return "a1";
    case ModeId::A2: return "a2";
    case ModeId::M: return "m";
    case ModeId::B: return "b";
  }
  return "?";
}

ModeId parse_mode(std::string_view name) {
  for (ModeId mode : kAllModes) {
    if (mode_name(mode) == name) return mode;
  }
  throw std::invalid_argument("unknown mode '" + std::string(name) + "' (expected a1|a2|m|b)");
}

TwoModeCM reduce(const CovarianceMatrix& covariance, ModeId first, ModeId second) {
  if (first == second) throw std::invalid_argument("reduce: modes must be distinct");
  const std::array<int, 4> idx{quadrature_offset(first), quadrature_offset(first) + 1,
                               quadrature_offset(second), quadrature_offset(second) + 1};
  TwoModeCM cm;
  cm.source_pair = {first, second};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) cm.entries(i, j) = covariance.entries(idx[i], idx[j]);
  }
  return cm;
}

double clamp_roundoff(double value) {
  return (value < 0.0 && value > -kClampTolerance) ? 0.0 : value;
}

SymplecticSpectrum pt_symplectic_spectrum(const TwoModeCM& cm) {
  const Mat4& v = cm.entries;
  SymplecticSpectrum out;

  // Route 1: spectrum of Omega (P V P); eigenvalues come in pairs +-i nu.
  Mat4 p = Mat4::Identity();
  p(1, 1) = -1.0;
  Mat4 omega = Mat4::Zero();
  omega(0, 1) = omega(2, 3) = 1.0;
  omega(1, 0) = omega(3, 2) = -1.0;
  const Mat4 m = omega * (p * v * p);
  double nu_min = std::numeric_limits<double>::infinity();
  for (const auto& ev : eigenvalues(Eigen::MatrixXd(m))) nu_min = std::min(nu_min, std::abs(ev));
  out.nu_minus_eigen = nu_min;

  // Route 2: closed form with the *signed* det B.
  const double det_a = cm.block_a().determinant();
  const double det_b = cm.block_b().determinant();
  const double det_c = cm.block_c().determinant();
  const double det_v = v.partialPivLu().determinant();  // cofactor expansion cancels badly
  const double sigma = det_a + det_c - 2.0 * det_b;
  double disc = sigma * sigma - 4.0 * det_v;
  if (disc < 0.0) {
    if (disc < -kClampTolerance * std::max(1.0, sigma * sigma)) {
      throw PhysicalityError("log negativity: negative discriminant");
    }
    disc = 0.0;
  }
  // Smaller root of x^2 - sigma x + det V without cancellation.
  const double big = 0.5 * (sigma + std::sqrt(disc));
  double nu_sq = big > 0.0 ? det_v / big : 0.5 * (sigma - std::sqrt(disc));
  if (nu_sq < 0.0) {
    if (nu_sq < -kClampTolerance * std::max(1.0, std::abs(sigma))) {
      throw PhysicalityError("log negativity: negative symplectic eigenvalue squared");
    }
    nu_sq = 0.0;
  }
  out.nu_minus_closed = std::sqrt(nu_sq);
  return out;
}

double log_negativity(const TwoModeCM& cm) {
  const SymplecticSpectrum s = pt_symplectic_spectrum(cm);
  const double scale = std::max(1.0, s.nu_minus_closed);
  if (std::abs(s.nu_minus_eigen - s.nu_minus_closed) > kDualMethodTolerance * scale) {
    throw PhysicalityError("log negativity: eigen and closed-form routes disagree");
  }
  if (s.nu_minus_closed == 0.0) throw PhysicalityError("log negativity: nu~_- = 0");
  return std::max(0.0, clamp_roundoff(-std::log(2.0 * s.nu_minus_closed)));
}

double steering(const TwoModeCM& cm, SteeringDirection direction) {
  const Mat2 local = direction == SteeringDirection::Forward ? cm.block_a() : cm.block_c();
  const double det_local = (2.0 * local).determinant();
  const double det_total = (2.0 * cm.entries).determinant();
  if (!(det_local > 0.0) || !(det_total > 0.0)) {
    throw PhysicalityError("steering: non-positive determinant");
  }
  const double value = 0.5 * std::log(det_local) - 0.5 * std::log(det_total);
  return std::max(0.0, clamp_roundoff(value));
}

}  // namespace magnocorr
