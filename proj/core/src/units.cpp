#include "magnocorr/units.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace magnocorr {

namespace {

struct RateField {
  std::string_view name;
  double PhysicalParams::*member;
};

constexpr std::array<RateField, 16> kRateFields{{
    {"omega_b", &PhysicalParams::omega_b},
    {"omega_1", &PhysicalParams::omega_1},
    {"omega_2", &PhysicalParams::omega_2},
    {"omega_m", &PhysicalParams::omega_m},
    {"Delta_1", &PhysicalParams::Delta_1},
    {"Delta_2", &PhysicalParams::Delta_2},
    {"Delta_m", &PhysicalParams::Delta_m},
    {"kappa_1", &PhysicalParams::kappa_1},
    {"kappa_2", &PhysicalParams::kappa_2},
    {"kappa_m", &PhysicalParams::kappa_m},
    {"gain_g", &PhysicalParams::gain_g},
    {"gamma_b", &PhysicalParams::gamma_b},
    {"g_ma", &PhysicalParams::g_ma},
    {"J", &PhysicalParams::J},
    {"G_mb", &PhysicalParams::G_mb},
    {"g_mb", &PhysicalParams::g_mb},
}};

const RateField* find_rate(std::string_view name) {
  for (const auto& f : kRateFields) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

}  // namespace

std::string_view to_string(Unit unit) {
  switch (unit) {
    case Unit::RadPerSecond: return "rad_s";
    case Unit::Hz2pi: return "Hz2pi";
    case Unit::Kappa1: return "kappa1";
    case Unit::OmegaB: return "omega_b";
    case Unit::Kelvin: return "K";
    case Unit::MilliKelvin: return "mK";
    case Unit::Dimensionless: return "1";
  }
  return "?";
}

std::optional<Unit> parse_unit(std::string_view text) {
  if (text == "rad_s" || text == "rad/s") return Unit::RadPerSecond;
  if (text == "Hz2pi") return Unit::Hz2pi;
  if (text == "kappa1") return Unit::Kappa1;
  if (text == "omega_b") return Unit::OmegaB;
  if (text == "K") return Unit::Kelvin;
  if (text == "mK") return Unit::MilliKelvin;
  if (text == "1" || text == "-") return Unit::Dimensionless;
  return std::nullopt;
}

std::optional<ParameterKind> parameter_kind(std::string_view name) {
  if (find_rate(name)) return ParameterKind::Rate;
  if (name == "temperature_T" || name == "T") return ParameterKind::Temperature;
  if (name == "eta") return ParameterKind::Dimensionless;
  if (name == "B_0") return ParameterKind::Field;
  if (name == "sphere_diameter") return ParameterKind::Length;
  if (name == "spin_density_rho") return ParameterKind::Density;
  if (name == "gyro_ratio_gamma_g") return ParameterKind::GyroRatio;
  return std::nullopt;
}

double to_internal(double value, Unit unit, ParameterKind kind, const PhysicalParams& reference) {
  auto bad = [&] {
    return std::invalid_argument("unit '" + std::string(to_string(unit)) +
                                 "' does not apply to this parameter");
  };
  switch (kind) {
    case ParameterKind::Rate:
      switch (unit) {
        case Unit::RadPerSecond: return value;
        case Unit::Hz2pi: return constants::two_pi * value;
        case Unit::Kappa1: return value * reference.kappa_1;
        case Unit::OmegaB: return value * reference.omega_b;
        default: throw bad();
      }
    case ParameterKind::GyroRatio:
      // Per tesla; kappa1/omega_b make no sense here.
      if (unit == Unit::RadPerSecond) return value;
      if (unit == Unit::Hz2pi) return constants::two_pi * value;
      throw bad();
    case ParameterKind::Temperature:
      if (unit == Unit::Kelvin) return value;
      if (unit == Unit::MilliKelvin) return 1e-3 * value;
      throw bad();
    case ParameterKind::Dimensionless:
    case ParameterKind::Field:
    case ParameterKind::Length:
    case ParameterKind::Density:
      if (unit == Unit::Dimensionless) return value;
      throw bad();
  }
  throw bad();
}

void set_parameter(PhysicalParams& params, std::string_view name, double value) {
  if (const RateField* f = find_rate(name)) {
    params.*(f->member) = value;
  } else if (name == "temperature_T" || name == "T") {
    params.temperature_T = value;
  } else if (name == "eta") {
    set_eta(params, value);
  } else if (name == "B_0") {
    params.drive.B_0 = value;
  } else if (name == "sphere_diameter") {
    params.drive.sphere_diameter = value;
  } else if (name == "spin_density_rho") {
    params.drive.spin_density_rho = value;
  } else if (name == "gyro_ratio_gamma_g") {
    params.drive.gyro_ratio_gamma_g = value;
  } else {
    throw std::invalid_argument("unknown parameter '" + std::string(name) + "'");
  }
}

double get_parameter(const PhysicalParams& params, std::string_view name) {
  if (const RateField* f = find_rate(name)) return params.*(f->member);
  if (name == "temperature_T" || name == "T") return params.temperature_T;
  if (name == "eta") return eta_ratio(params);
  if (name == "B_0") return params.drive.B_0;
  if (name == "sphere_diameter") return params.drive.sphere_diameter;
  if (name == "spin_density_rho") return params.drive.spin_density_rho;
  if (name == "gyro_ratio_gamma_g") return params.drive.gyro_ratio_gamma_g;
  throw std::invalid_argument("unknown parameter '" + std::string(name) + "'");
}

}  // namespace magnocorr
