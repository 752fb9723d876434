#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>

#include "magnocorr/measures.hpp"
#include "magnocorr/sweep.hpp"

namespace magnocorr {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parsed run configuration.
///
///   units = kappa1                 ; default unit for bare rate values
///   [system]
///   kappa_1 = 1e6 Hz2pi            ; value [unit], unit in rad_s|Hz2pi|kappa1|omega_b
///   Delta_1 = -0.91 omega_b
///   eta = -0.5                     ; sets gain_g, keeps kappa_2
///   T = 15 mK                      ; K or mK
///   coupling_mode = direct         ; direct|microscopic
///   diffusion = as-printed         ; as-printed|abs|physical
///   drift = derived                ; derived|printed
///   [sweep]
///   axis1 = Delta_1 -2 0 201 omega_b
///   axis2 = eta -1 1 201
///   delta2 = equal                 ; independent|equal|opposite
///   jobs = 4
///   [output]
///   format = csv                   ; csv|jsonl
///   quantities = margin, entanglement, st_a2_to_m
///   [tc]
///   pair = a2 m
///
/// Unset parameters keep the PhysicalParams defaults. Unknown keys are errors.
struct Config {
  SweepSpec spec;
  int jobs = 1;
  std::optional<ModePair> tc_pair;
};

/// Throws ConfigError with the offending key on any problem.
Config parse_config(std::istream& in);
Config load_config(const std::filesystem::path& path);

}  // namespace magnocorr
