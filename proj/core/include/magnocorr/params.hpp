#pragma once

#include <numbers>
#include <string>
#include <string_view>

namespace magnocorr {

namespace constants {
// Five significant figures; acceptance numbers are pinned against these.
inline constexpr double hbar = 1.0546e-34;       // J s
inline constexpr double k_boltzmann = 1.3807e-23; // J / K
inline constexpr double two_pi = 2.0 * std::numbers::pi;
}  // namespace constants

enum class CouplingMode { DirectG, Microscopic };

/// How the diffusion entry of the gain cavity is formed when kappa_2t < 0.
///   AsPrinted      d2 = kappa_2t (2 N2 + 1), may be negative
///   AbsoluteValue  d2 = |kappa_2t| (2 N2 + 1)
///   PhysicalSum    d2 = (kappa_2 + g)(2 N2 + 1), loss plus gain-medium noise
enum class DiffusionConvention { AsPrinted, AbsoluteValue, PhysicalSum };

/// Derived: linearization of the Langevin equations (default).
/// Printed: literal transcription of the published drift matrix, kept for audits.
enum class DriftVariant { Derived, Printed };

/// Microwave drive on the YIG sphere. Only consulted in Microscopic mode.
struct DriveParams {
  double B_0 = 0.0;                // tesla
  double sphere_diameter = 250e-6; // m
  double spin_density_rho = 4.22e27;                   // spins / m^3
  double gyro_ratio_gamma_g = constants::two_pi * 28e9; // rad / (s T)

  void validate() const;
};

/// One system instance. Every frequency and rate is angular, in rad/s.
///
/// Default member values are the published baseline: omega_b/2pi = 10 MHz,
/// cavity and magnon frequencies 10 GHz, kappa_1/2pi = 1 MHz,
/// kappa_m/2pi = 0.56 MHz, gamma_b/2pi = 100 Hz, g_ma = G_mb = 3.2 kappa_1,
/// J = 2 kappa_1, Delta_1 = Delta_2 = -0.91 omega_b, Delta_m = 0.89 omega_b,
/// eta = -0.5 (kappa_2 = kappa_1, g = 1.5 kappa_1) and T = 15 mK.
struct PhysicalParams {
  double omega_b = constants::two_pi * 10e6;
  double omega_1 = constants::two_pi * 10e9;
  double omega_2 = constants::two_pi * 10e9;
  double omega_m = constants::two_pi * 10e9;

  double Delta_1 = -0.91 * constants::two_pi * 10e6;
  double Delta_2 = -0.91 * constants::two_pi * 10e6;
  double Delta_m = 0.89 * constants::two_pi * 10e6;

  double kappa_1 = constants::two_pi * 1e6;
  double kappa_2 = constants::two_pi * 1e6;
  double kappa_m = constants::two_pi * 0.56e6;
  double gain_g = 1.5 * constants::two_pi * 1e6;
  double gamma_b = constants::two_pi * 100.0;

  double g_ma = constants::two_pi * 3.2e6;
  double J = 2.0 * constants::two_pi * 1e6;

  CouplingMode coupling_mode = CouplingMode::DirectG;
  double G_mb = constants::two_pi * 3.2e6;
  double g_mb = 0.0;

  double temperature_T = 15e-3;  // K

  DiffusionConvention diffusion_convention = DiffusionConvention::AsPrinted;
  DriftVariant drift_variant = DriftVariant::Derived;

  DriveParams drive{};

  /// Effective cavity-2 damping kappa_2 - g.
  double kappa_2t() const { return kappa_2 - gain_g; }

  /// Throws std::invalid_argument naming the first violated invariant.
  void validate() const;
};

/// Bose-Einstein occupation [exp(hbar omega / k_B T) - 1]^-1; exactly 0 at T = 0.
double thermal_occupation(double omega, double temperature);

/// eta = (kappa_2 - g) / kappa_1. Negative iff the second cavity has net gain.
double eta_ratio(const PhysicalParams& params);

/// Sets the gain so that eta_ratio(params) == eta, keeping kappa_2 fixed.
/// If that would need negative gain, kappa_2 is raised to eta * kappa_1 and g = 0.
void set_eta(PhysicalParams& params, double eta);

/// Drive Rabi frequency (sqrt5/4) gamma_g sqrt(N) B_0, N = rho * (pi d^3 / 6).
double rabi_frequency(const DriveParams& drive);

std::string_view to_string(CouplingMode mode);
std::string_view to_string(DiffusionConvention convention);
std::string_view to_string(DriftVariant variant);

/// Accepts the CLI spellings: direct|microscopic, as-printed|abs|physical,
/// derived|printed. Throws std::invalid_argument otherwise.
CouplingMode parse_coupling_mode(std::string_view text);
DiffusionConvention parse_diffusion_convention(std::string_view text);
DriftVariant parse_drift_variant(std::string_view text);

}  // namespace magnocorr
