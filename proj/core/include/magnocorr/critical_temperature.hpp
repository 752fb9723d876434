#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "magnocorr/measures.hpp"
#include "magnocorr/params.hpp"

namespace magnocorr {

struct CriticalTemperatureOptions {
  double t_max = 2.0;         ///< K
  double tolerance = 1e-3;    ///< K, bisection stops below this bracket width
  double tol_entangled = 1e-6;
  int coarse_points = 81;
};

struct CriticalTemperature {
  double kelvin = 0.0;
  bool non_monotonic = false;   ///< coarse scan saw re-entrant entanglement
  bool saturated = false;       ///< still entangled at t_max
  std::vector<std::string> warnings;
};

/// Raised when the pair is not entangled at T = 0, or the point is unstable.
class CriticalTemperatureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest T in [0, t_max] with E_N(pair) > tol_entangled. The drift does not
/// depend on T, so A and the Lyapunov factorization are built once and only D
/// changes. A coarse scan brackets the first zero crossing, then bisection.
CriticalTemperature find_critical_temperature(const PhysicalParams& params, ModeId first,
                                              ModeId second,
                                              const CriticalTemperatureOptions& options = {});

/// E_N(pair) at temperature T with every other parameter from `params`.
/// Unphysical reduced states count as 0. Exposed for scan-based checks.
double entanglement_at_temperature(const PhysicalParams& params, ModeId first, ModeId second,
                                   double temperature);

}  // namespace magnocorr
