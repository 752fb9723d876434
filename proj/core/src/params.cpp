#include "magnocorr/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace magnocorr {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

bool finite(double x) { return std::isfinite(x); }

}  // namespace

void DriveParams::validate() const {
  require(finite(B_0) && B_0 >= 0.0, "drive: B_0 must be >= 0");
  require(finite(sphere_diameter) && sphere_diameter > 0.0, "drive: sphere_diameter must be > 0");
  require(finite(spin_density_rho) && spin_density_rho > 0.0, "drive: spin_density_rho must be > 0");
  require(finite(gyro_ratio_gamma_g) && gyro_ratio_gamma_g > 0.0,
          "drive: gyro_ratio_gamma_g must be > 0");
}

void PhysicalParams::validate() const {
  for (double x : {omega_b, omega_1, omega_2, omega_m, Delta_1, Delta_2, Delta_m, kappa_1, kappa_2,
                   kappa_m, gain_g, gamma_b, g_ma, J, G_mb, g_mb, temperature_T}) {
    require(finite(x), "params: all fields must be finite");
  }
  require(kappa_1 > 0.0, "params: kappa_1 must be > 0");
  require(kappa_m > 0.0, "params: kappa_m must be > 0");
  require(gamma_b > 0.0, "params: gamma_b must be > 0");
  require(omega_b > 0.0, "params: omega_b must be > 0");
  require(omega_1 > 0.0 && omega_2 > 0.0 && omega_m > 0.0,
          "params: mode frequencies must be > 0");
  require(temperature_T >= 0.0, "params: temperature_T must be >= 0");
  require(kappa_2 >= 0.0, "params: kappa_2 must be >= 0");
  require(gain_g >= 0.0, "params: gain_g must be >= 0");
  if (coupling_mode == CouplingMode::DirectG) {
    require(G_mb >= 0.0, "params: G_mb must be >= 0 in DirectG mode");
  } else {
    drive.validate();
  }
}

double thermal_occupation(double omega, double temperature) {
  if (!(omega > 0.0)) throw std::invalid_argument("thermal_occupation: omega must be > 0");
  if (!(temperature >= 0.0)) throw std::invalid_argument("thermal_occupation: T must be >= 0");
  if (temperature == 0.0) return 0.0;
  const double x = constants::hbar * omega / (constants::k_boltzmann * temperature);
  return 1.0 / std::expm1(x);
}

double eta_ratio(const PhysicalParams& params) {
  return (params.kappa_2 - params.gain_g) / params.kappa_1;
}

void set_eta(PhysicalParams& params, double eta) {
  const double target = eta * params.kappa_1;
  if (params.kappa_2 - target >= 0.0) {
    params.gain_g = params.kappa_2 - target;
  } else {
    params.kappa_2 = target;
    params.gain_g = 0.0;
  }
}

double rabi_frequency(const DriveParams& drive) {
  drive.validate();
  const double radius = 0.5 * drive.sphere_diameter;
  const double volume = 4.0 / 3.0 * std::numbers::pi * radius * radius * radius;
  const double spins = drive.spin_density_rho * volume;
  return std::sqrt(5.0) / 4.0 * drive.gyro_ratio_gamma_g * std::sqrt(spins) * drive.B_0;
}

std::string_view to_string(CouplingMode mode) {
  return mode == CouplingMode::DirectG ? "direct" : "microscopic";
}

std::string_view to_string(DiffusionConvention convention) {
  switch (convention) {
    case DiffusionConvention::AsPrinted: return "as-printed";
    case DiffusionConvention::AbsoluteValue: return "abs";
    case DiffusionConvention::PhysicalSum: return "physical";
  }
  return "?";
}

std::string_view to_string(DriftVariant variant) {
  return variant == DriftVariant::Derived ? "derived" : "printed";
}

CouplingMode parse_coupling_mode(std::string_view text) {
  if (text == "direct" || text == "DirectG") return CouplingMode::DirectG;
  if (text == "microscopic" || text == "Microscopic") return CouplingMode::Microscopic;
  throw std::invalid_argument("unknown coupling mode '" + std::string(text) + "'");
}

DiffusionConvention parse_diffusion_convention(std::string_view text) {
  if (text == "as-printed" || text == "AsPrinted") return DiffusionConvention::AsPrinted;
  if (text == "abs" || text == "AbsoluteValue") return DiffusionConvention::AbsoluteValue;
  if (text == "physical" || text == "PhysicalSum") return DiffusionConvention::PhysicalSum;
  throw std::invalid_argument("unknown diffusion convention '" + std::string(text) + "'");
}

DriftVariant parse_drift_variant(std::string_view text) {
  if (text == "derived" || text == "Derived") return DriftVariant::Derived;
  if (text == "printed" || text == "Printed") return DriftVariant::Printed;
  throw std::invalid_argument("unknown drift variant '" + std::string(text) + "'");
}

}  // namespace magnocorr
