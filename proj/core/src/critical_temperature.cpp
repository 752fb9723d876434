#include "magnocorr/critical_temperature.hpp"

#include <cmath>
#include <optional>

#include <fmt/format.h>

#include "magnocorr/dynamics.hpp"
#include "magnocorr/lyapunov.hpp"
#include "magnocorr/sweep.hpp"

namespace magnocorr {

namespace {

class TemperatureScan {
 public:
  TemperatureScan(const PhysicalParams& params, ModeId first, ModeId second)
      : params_(params), first_(first), second_(second) {
    params_.validate();
    const Linearization lin = linearize(params_);
    const StabilityReport report = stability(lin.drift, params_);
    if (!report.determinate || !report.stable) {
      throw CriticalTemperatureError("critical temperature: system is not stable at these parameters");
    }
    solver_.emplace(Eigen::MatrixXd(lin.drift.entries));
  }

  double operator()(double temperature) {
    PhysicalParams p = params_;
    p.temperature_T = temperature;
    const DiffusionMatrix d = diffusion_matrix(p);
    const CovarianceMatrix cov(Mat8(solver_->solve(Eigen::MatrixXd(d.entries))));
    try {
      return log_negativity(reduce(cov, first_, second_));
    } catch (const PhysicalityError& e) {
      if (!unphysical_seen_) {
        warnings.push_back(fmt::format("unphysical state at T = {:.6g} K counted as E_N = 0: {}",
                                       temperature, e.what()));
        unphysical_seen_ = true;
      }
      return 0.0;
    }
  }

  std::vector<std::string> warnings;

 private:
  PhysicalParams params_;
  ModeId first_;
  ModeId second_;
  std::optional<LyapunovSolver> solver_;
  bool unphysical_seen_ = false;
};

}  // namespace

double entanglement_at_temperature(const PhysicalParams& params, ModeId first, ModeId second,
                                   double temperature) {
  TemperatureScan scan(params, first, second);
  return scan(temperature);
}

CriticalTemperature find_critical_temperature(const PhysicalParams& params, ModeId first,
                                              ModeId second,
                                              const CriticalTemperatureOptions& options) {
  if (options.coarse_points < 2 || !(options.t_max > 0.0) || !(options.tolerance > 0.0)) {
    throw std::invalid_argument("critical temperature: bad options");
  }
  TemperatureScan energy(params, first, second);
  const double tol = options.tol_entangled;
  if (!(energy(0.0) > tol)) {
    throw CriticalTemperatureError(fmt::format("critical temperature: pair {}-{} not entangled at T = 0",
                                               mode_name(first), mode_name(second)));
  }

  CriticalTemperature out;
  const int n = options.coarse_points;
  const double step = options.t_max / (n - 1);
  int crossing = -1;
  for (int i = 1; i < n; ++i) {
    const bool entangled = energy(i * step) > tol;
    if (crossing < 0 && !entangled) {
      crossing = i;
    } else if (crossing >= 0 && entangled) {
      out.non_monotonic = true;
      out.warnings.push_back(fmt::format(
          "non-monotonic: entanglement reappears at T = {:.6g} K; returning first crossing", i * step));
      break;
    }
  }
  if (crossing < 0) {
    out.saturated = true;
    out.kelvin = options.t_max;
    out.warnings.push_back(fmt::format("still entangled at T_max = {} K", options.t_max));
  } else {
    double lo = (crossing - 1) * step;
    double hi = crossing * step;
    while (hi - lo > options.tolerance) {
      const double mid = 0.5 * (lo + hi);
      (energy(mid) > tol ? lo : hi) = mid;
    }
    out.kelvin = 0.5 * (lo + hi);
  }
  for (auto& w : energy.warnings) out.warnings.push_back(std::move(w));
  return out;
}

}  // namespace magnocorr
