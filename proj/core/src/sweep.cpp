#include "magnocorr/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "magnocorr/dynamics.hpp"
#include "magnocorr/eigen.hpp"
#include "magnocorr/lyapunov.hpp"

namespace magnocorr {

double Axis::at(int index) const {
  if (count < 2) return min;
  return min + (max - min) * static_cast<double>(index) / static_cast<double>(count - 1);
}

void SweepSpec::validate() const {
  if (axes.size() > 2) throw std::invalid_argument("sweep: at most two axes");
  for (const Axis& axis : axes) {
    const auto kind = parameter_kind(axis.name);
    if (!kind) throw std::invalid_argument("sweep: unknown axis parameter '" + axis.name + "'");
    if (axis.count < 2) throw std::invalid_argument("sweep: axis '" + axis.name + "' needs >= 2 points");
    if (!std::isfinite(axis.min) || !std::isfinite(axis.max)) {
      throw std::invalid_argument("sweep: axis '" + axis.name + "' has non-finite bounds");
    }
    if (axis.name == "kappa_1" && axis.unit == Unit::Kappa1) {
      throw std::invalid_argument("sweep: kappa_1 cannot be swept in units of kappa1");
    }
    if (axis.name == "omega_b" && axis.unit == Unit::OmegaB) {
      throw std::invalid_argument("sweep: omega_b cannot be swept in units of omega_b");
    }
    (void)to_internal(axis.min, axis.unit, *kind, base);
  }
  if (axes.size() == 2 && axes[0].name == axes[1].name) {
    throw std::invalid_argument("sweep: duplicate axis '" + axes[0].name + "'");
  }
}

std::size_t SweepSpec::point_count() const {
  std::size_t n = 1;
  for (const Axis& axis : axes) n *= static_cast<std::size_t>(axis.count);
  return n;
}

std::string_view to_string(PointStatus status) {
  switch (status) {
    case PointStatus::Ok: return "ok";
    case PointStatus::Unstable: return "unstable";
    case PointStatus::Indeterminate: return "indeterminate";
    case PointStatus::SingularSystem: return "singular";
    case PointStatus::SteadyStateFailure: return "steady-state-failure";
    case PointStatus::InvalidParams: return "invalid-params";
  }
  return "?";
}

namespace {

constexpr double kPhysicalityTolerance = 1e-9;

std::size_t pair_index(ModeId x, ModeId y) {
  for (std::size_t k = 0; k < kModePairs.size(); ++k) {
    if (kModePairs[k] == ModePair{x, y} || kModePairs[k] == ModePair{y, x}) return k;
  }
  throw std::invalid_argument("mode pair must have distinct modes");
}

}  // namespace

std::optional<double> SweepRecord::log_negativity(ModeId x, ModeId y) const {
  return entanglement[pair_index(x, y)];
}

std::optional<double> SweepRecord::steering_value(ModeId from, ModeId to) const {
  const std::size_t k = pair_index(from, to);
  const bool forward = kModePairs[k].first == from;
  return steering[2 * k + (forward ? 0 : 1)];
}

Linearization linearize(const PhysicalParams& params) {
  Linearization lin;
  lin.delta_eff = params.Delta_m;
  lin.G_mb = params.G_mb;
  if (params.coupling_mode == CouplingMode::Microscopic) {
    SteadyState ss = solve_steady_state(params, rabi_frequency(params.drive));
    if (!ss.ok()) {
      throw std::runtime_error("steady state: " +
                               (ss.diagnostic.empty() ? std::string("no convergence") : ss.diagnostic));
    }
    const auto g = effective_coupling(params.g_mb, ss.m_avg);
    ss = rotate_phase(ss, gauge_phase(g));
    lin.G_mb = std::abs(g);
    lin.delta_eff = ss.delta_eff;
    lin.steady_state = std::move(ss);
  }
  lin.drift = drift_matrix(params, lin.delta_eff, lin.G_mb);
  return lin;
}

SweepRecord evaluate_point(const PhysicalParams& params) {
  SweepRecord rec;
  try {
    params.validate();
  } catch (const std::invalid_argument& e) {
    rec.status = PointStatus::InvalidParams;
    rec.warnings.emplace_back(e.what());
    return rec;
  }

  Linearization lin;
  try {
    lin = linearize(params);
  } catch (const std::exception& e) {
    rec.status = PointStatus::SteadyStateFailure;
    rec.warnings.emplace_back(e.what());
    return rec;
  }
  rec.delta_eff = lin.delta_eff;
  rec.G_mb = lin.G_mb;
  if (lin.steady_state) {
    if (!lin.steady_state->diagnostic.empty()) rec.warnings.push_back(lin.steady_state->diagnostic);
    rec.steady_state = std::move(lin.steady_state);
  }

  const DriftMatrix& drift = lin.drift;
  const StabilityReport report = stability(drift, params);
  rec.margin = report.margin;
  if (!report.determinate) {
    rec.status = PointStatus::Indeterminate;
    rec.warnings.emplace_back("eigensolver did not converge");
    return rec;
  }
  if (!report.stable) {
    rec.status = PointStatus::Unstable;
    return rec;
  }
  rec.stable = true;

  DiffusionMatrix diffusion = diffusion_matrix(params);
  rec.negative_diffusion = diffusion.has_negative_entry();
  for (auto& w : diffusion.warnings) rec.warnings.push_back(std::move(w));

  CovarianceMatrix cov;
  try {
    cov = solve_lyapunov(drift, diffusion);
  } catch (const SingularSystemError& e) {
    rec.status = PointStatus::SingularSystem;
    rec.warnings.emplace_back(e.what());
    return rec;
  }
  rec.lyapunov_residual = lyapunov_residual(drift.entries, cov.entries, diffusion.entries);
  rec.physicality = physicality_margin(cov.entries);

  for (std::size_t k = 0; k < kModePairs.size(); ++k) {
    const auto [x, y] = kModePairs[k];
    const TwoModeCM cm = reduce(cov, x, y);
    const std::string label = std::string(mode_name(x)) + "-" + std::string(mode_name(y));
    // The measures assume a physical state; negative diffusion can break that pairwise.
    if (rec.negative_diffusion) {
      const double pair_margin = physicality_margin(Eigen::MatrixXd(cm.entries));
      if (pair_margin < -kPhysicalityTolerance) {
        rec.warnings.push_back("pair " + label + " unphysical (min eig " + std::to_string(pair_margin) + ")");
        continue;
      }
    }
    try {
      rec.entanglement[k] = log_negativity(cm);
    } catch (const std::exception& e) {
      rec.warnings.push_back("E " + label + ": " + e.what());
    }
    try {
      rec.steering[2 * k] = steering(cm, SteeringDirection::Forward);
      rec.steering[2 * k + 1] = steering(cm, SteeringDirection::Backward);
    } catch (const std::exception& e) {
      rec.steering[2 * k].reset();
      rec.steering[2 * k + 1].reset();
      rec.warnings.push_back("steering " + label + ": " + e.what());
    }
  }
  return rec;
}

PhysicalParams grid_point(const SweepSpec& spec, std::size_t flat_index,
                          std::vector<double>* axis_values) {
  PhysicalParams p = spec.base;
  std::vector<std::size_t> idx(spec.axes.size(), 0);
  std::size_t rest = flat_index;
  for (std::size_t a = spec.axes.size(); a-- > 0;) {
    const auto count = static_cast<std::size_t>(spec.axes[a].count);
    idx[a] = rest % count;
    rest /= count;
  }
  if (axis_values) axis_values->clear();
  for (std::size_t a = 0; a < spec.axes.size(); ++a) {
    const Axis& axis = spec.axes[a];
    const double value = axis.at(static_cast<int>(idx[a]));
    if (axis_values) axis_values->push_back(value);
    const double internal = to_internal(value, axis.unit, *parameter_kind(axis.name), spec.base);
    set_parameter(p, axis.name, internal);
  }
  switch (spec.delta2_rule) {
    case Delta2Rule::Independent: break;
    case Delta2Rule::Equal: p.Delta_2 = p.Delta_1; break;
    case Delta2Rule::Opposite: p.Delta_2 = -p.Delta_1; break;
  }
  return p;
}

void run_sweep(const SweepSpec& spec, int jobs, const RecordSink& sink) {
  spec.validate();
  const std::size_t total = spec.point_count();
  const std::size_t workers =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1, std::max<std::size_t>(total, 1));

  auto compute = [&spec](std::size_t i) {
    std::vector<double> values;
    const PhysicalParams p = grid_point(spec, i, &values);
    SweepRecord rec = evaluate_point(p);
    rec.axis_values = std::move(values);
    return rec;
  };

  if (workers == 1) {
    for (std::size_t i = 0; i < total; ++i) sink(compute(i));
    return;
  }

  std::vector<std::optional<SweepRecord>> slots(total);
  std::atomic<std::size_t> next{0};
  std::mutex mutex;
  std::condition_variable ready;

  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
        SweepRecord rec = compute(i);
        {
          std::lock_guard lock(mutex);
          slots[i] = std::move(rec);
        }
        ready.notify_one();
      }
    });
  }

  // Emit in order on the calling thread as soon as the prefix is complete.
  for (std::size_t emitted = 0; emitted < total; ++emitted) {
    std::optional<SweepRecord> rec;
    {
      std::unique_lock lock(mutex);
      ready.wait(lock, [&] { return slots[emitted].has_value(); });
      rec = std::move(slots[emitted]);
      slots[emitted].reset();
    }
    sink(*rec);
  }
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec, int jobs) {
  std::vector<SweepRecord> out;
  out.reserve(spec.point_count());
  run_sweep(spec, jobs, [&out](const SweepRecord& r) { out.push_back(r); });
  return out;
}

}  // namespace magnocorr
