#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "magnocorr/dynamics.hpp"
#include "magnocorr/measures.hpp"
#include "magnocorr/params.hpp"
#include "magnocorr/steady_state.hpp"
#include "magnocorr/units.hpp"

namespace magnocorr {

/// One linear sweep axis. Values are in `unit`; conversion to rad/s uses the
/// base parameters' kappa_1 and omega_b.
struct Axis {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  int count = 2;
  Unit unit = Unit::RadPerSecond;

  double at(int index) const;
};

/// How Delta_2 follows Delta_1 at every grid point.
enum class Delta2Rule { Independent, Equal, Opposite };

enum class OutputFormat { Csv, JsonLines };

struct SweepSpec {
  std::string name;
  PhysicalParams base{};
  std::vector<Axis> axes;  ///< 0, 1 or 2 axes; 0 means a single point
  Delta2Rule delta2_rule = Delta2Rule::Independent;
  /// Output columns or groups: entanglement, steering, margin, amplitudes,
  /// diagnostics, or individual names like E_a2m / st_a2_to_m.
  std::vector<std::string> quantities{"margin", "entanglement", "steering"};
  OutputFormat format = OutputFormat::Csv;

  /// Throws std::invalid_argument on bad axes (count < 2, unknown names,
  /// unit/kind mismatch, more than two axes).
  void validate() const;
  std::size_t point_count() const;
};

enum class PointStatus {
  Ok,
  Unstable,
  Indeterminate,       ///< eigensolver did not converge
  SingularSystem,      ///< Lyapunov operator singular
  SteadyStateFailure,  ///< mean-field solve failed
  InvalidParams,
};

std::string_view to_string(PointStatus status);

/// Result of one grid point. Measures are empty (null) unless the point is
/// stable and the reduced state is physical; unstable points never carry zeros.
struct SweepRecord {
  std::vector<double> axis_values;
  PointStatus status = PointStatus::Ok;
  bool stable = false;
  double margin = 0.0;
  std::array<std::optional<double>, 6> entanglement{};  ///< kModePairs order
  /// Per pair in kModePairs order: first -> second, then second -> first.
  std::array<std::optional<double>, 12> steering{};
  std::optional<SteadyState> steady_state;  ///< gauge-fixed, Microscopic mode only
  double delta_eff = 0.0;
  double G_mb = 0.0;
  double lyapunov_residual = 0.0;
  double physicality = 0.0;  ///< min eig(V + i Omega / 2)
  bool negative_diffusion = false;
  std::vector<std::string> warnings;

  std::optional<double> log_negativity(ModeId x, ModeId y) const;
  std::optional<double> steering_value(ModeId from, ModeId to) const;
};

/// Drift matrix around the steady state of `params`. In Microscopic mode this
/// solves the mean-field equations and fixes the gauge so G_mb is real and
/// non-negative; throws std::runtime_error if the steady state fails.
struct Linearization {
  DriftMatrix drift;
  double delta_eff = 0.0;
  double G_mb = 0.0;
  std::optional<SteadyState> steady_state;
};
Linearization linearize(const PhysicalParams& params);

/// Full pipeline for one parameter set: steady state, drift/diffusion,
/// stability gate, Lyapunov covariance, all six E_N and twelve steerings.
/// Never throws for numerical failures; they land in status and warnings.
SweepRecord evaluate_point(const PhysicalParams& params);

/// Parameters of grid point (i, j) in row-major order.
PhysicalParams grid_point(const SweepSpec& spec, std::size_t flat_index,
                          std::vector<double>* axis_values = nullptr);

using RecordSink = std::function<void(const SweepRecord&)>;

/// Evaluates the grid on `jobs` worker threads and hands records to `sink`
/// in row-major order regardless of completion order.
void run_sweep(const SweepSpec& spec, int jobs, const RecordSink& sink);
std::vector<SweepRecord> run_sweep(const SweepSpec& spec, int jobs = 1);

}  // namespace magnocorr
