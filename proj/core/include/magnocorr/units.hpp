#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "magnocorr/params.hpp"

namespace magnocorr {

/// Unit tags accepted in config files and sweep axes.
///   rad_s   angular rate as-is
///   Hz2pi   value f means rate 2 pi f
///   kappa1  multiples of kappa_1
///   omega_b multiples of omega_b
enum class Unit { RadPerSecond, Hz2pi, Kappa1, OmegaB, Kelvin, MilliKelvin, Dimensionless };

/// What a named parameter measures; decides which units are legal.
enum class ParameterKind { Rate, Temperature, Dimensionless, Field, Length, Density, GyroRatio };

std::string_view to_string(Unit unit);
std::optional<Unit> parse_unit(std::string_view text);

/// Kind of a settable parameter name, or nullopt if unknown. Besides the
/// PhysicalParams rate fields this knows `temperature_T` (alias `T`), the
/// pseudo-parameter `eta`, and the drive fields B_0, sphere_diameter,
/// spin_density_rho, gyro_ratio_gamma_g.
std::optional<ParameterKind> parameter_kind(std::string_view name);

/// Converts `value` in `unit` to SI/rad-s. kappa1/omega_b refer to `reference`.
/// Throws std::invalid_argument if the unit does not fit the kind.
double to_internal(double value, Unit unit, ParameterKind kind, const PhysicalParams& reference);

/// Sets a parameter from an internal (SI, rad/s) value. `eta` goes through set_eta.
void set_parameter(PhysicalParams& params, std::string_view name, double value);

/// Internal value of a parameter (eta computed from the rates).
double get_parameter(const PhysicalParams& params, std::string_view name);

}  // namespace magnocorr
