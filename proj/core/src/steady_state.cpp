#include "magnocorr/steady_state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace magnocorr {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

double mechanical_g(const PhysicalParams& params) {
  return params.coupling_mode == CouplingMode::Microscopic ? params.g_mb : 0.0;
}

double magnon_intensity(const PhysicalParams& params, double epsilon_d, double delta_eff) {
  return std::norm(amplitudes_at(params, epsilon_d, delta_eff).m_avg);
}

double bisect_root(const PhysicalParams& params, double eps, double lo, double hi, double tol) {
  auto h = [&](double d) { return d - detuning_map(params, eps, d); };
  double flo = h(lo);
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = h(mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// All roots of delta - map(delta) on [Delta_m - shift_max, Delta_m]. The map
// never exceeds Delta_m (g_mb^2 |m|^2 >= 0), so every root lies in that window.
std::vector<double> scan_roots(const PhysicalParams& params, double eps,
                               const SteadyStateOptions& options) {
  const double c = params.g_mb * params.g_mb / params.omega_b;
  const double width = 10.0 * (std::abs(params.Delta_1) + std::abs(params.Delta_2) +
                               std::abs(params.Delta_m) + params.kappa_1 +
                               std::abs(params.kappa_2t()) + params.kappa_m + params.g_ma +
                               params.J + params.omega_b);
  double peak = 0.0;
  const int samples = std::max(options.scan_points, 101);
  for (int i = 0; i < samples; ++i) {
    const double d = params.Delta_m - width + 2.0 * width * i / (samples - 1);
    peak = std::max(peak, magnon_intensity(params, eps, d));
  }
  const double lo = params.Delta_m - 1.5 * c * peak - params.kappa_m;
  const double hi = params.Delta_m + params.kappa_m;
  const double tol = options.tol_rel * params.omega_b;

  std::vector<double> roots;
  auto h = [&](double d) { return d - detuning_map(params, eps, d); };
  double prev_d = lo;
  double prev_h = h(lo);
  for (int i = 1; i < samples; ++i) {
    const double d = lo + (hi - lo) * i / (samples - 1);
    const double hd = h(d);
    if (hd == 0.0) {
      roots.push_back(d);
    } else if ((hd < 0.0) != (prev_h < 0.0) && prev_h != 0.0) {
      roots.push_back(bisect_root(params, eps, prev_d, d, tol));
    }
    prev_d = d;
    prev_h = hd;
  }
  return roots;
}

struct PicardResult {
  double delta;
  int iterations;
  bool converged;
  std::vector<double> trace;
};

PicardResult picard(const PhysicalParams& params, double eps, double start,
                    const SteadyStateOptions& options) {
  PicardResult r{start, 0, false, {}};
  const double tol = options.tol_rel * params.omega_b;
  if (options.record_trace) r.trace.push_back(start);
  double best_step = std::numeric_limits<double>::infinity();
  double best = start;
  for (int k = 0; k < options.max_iter; ++k) {
    const double next = r.delta + options.damping * (detuning_map(params, eps, r.delta) - r.delta);
    const double step = std::abs(next - r.delta);
    r.delta = next;
    r.iterations = k + 1;
    if (options.record_trace) r.trace.push_back(next);
    if (step < best_step) {
      best_step = step;
      best = next;
    }
    if (step < tol) {
      r.converged = true;
      return r;
    }
  }
  r.delta = best;
  return r;
}

double nearest(const std::vector<double>& values, double target) {
  return *std::min_element(values.begin(), values.end(), [target](double a, double b) {
    return std::abs(a - target) < std::abs(b - target);
  });
}

}  // namespace

SteadyState amplitudes_at(const PhysicalParams& params, double epsilon_d, double delta_eff) {
  const cd f1{params.kappa_1, params.Delta_1};
  const cd f2{params.kappa_2t(), params.Delta_2};
  const cd fm{params.kappa_m, delta_eff};
  const double j2 = params.J * params.J;
  const cd cavities = j2 + f1 * f2;
  const cd denominator = fm * cavities + params.g_ma * params.g_ma * f2;

  SteadyState s;
  s.delta_eff = delta_eff;
  if (epsilon_d == 0.0) return s;
  if (denominator == cd{0.0, 0.0} || cavities == cd{0.0, 0.0}) {
    throw std::domain_error("steady state: singular mean-field equations");
  }
  s.m_avg = epsilon_d * cavities / denominator;
  s.a1_avg = -kI * params.g_ma * f2 * s.m_avg / cavities;
  // Same as -i J <a1> / f2 without dividing by f2.
  s.a2_avg = -params.J * params.g_ma * s.m_avg / cavities;
  const double gm = mechanical_g(params);
  s.q_avg = -gm / params.omega_b * std::norm(s.m_avg);
  s.p_avg = 0.0;
  return s;
}

double detuning_map(const PhysicalParams& params, double epsilon_d, double delta_eff) {
  const double gm = mechanical_g(params);
  return params.Delta_m - gm * gm / params.omega_b * magnon_intensity(params, epsilon_d, delta_eff);
}

SteadyState solve_steady_state(const PhysicalParams& params, double epsilon_d,
                               const SteadyStateOptions& options) {
  params.validate();
  if (!(epsilon_d >= 0.0)) throw std::invalid_argument("steady state: epsilon_d must be >= 0");

  const bool self_consistent = params.coupling_mode == CouplingMode::Microscopic &&
                               params.g_mb != 0.0 && epsilon_d > 0.0;
  if (!self_consistent) {
    SteadyState s = amplitudes_at(params, epsilon_d, params.Delta_m);
    s.roots = {params.Delta_m};
    s.residual = steady_state_residual(params, epsilon_d, s);
    if (options.record_trace) s.trace = {params.Delta_m};
    return s;
  }

  const PicardResult direct = picard(params, epsilon_d, params.Delta_m, options);
  const std::vector<double> roots = scan_roots(params, epsilon_d, options);

  double chosen = direct.delta;
  SteadyStateStatus status = SteadyStateStatus::Converged;
  std::string diagnostic;

  if (roots.size() > 1) {
    // Follow the branch from the undriven solution by ramping the drive.
    SteadyStateOptions step_options = options;
    step_options.record_trace = false;
    double branch = params.Delta_m;
    for (int k = 1; k <= options.continuation_steps; ++k) {
      const double eps_k = epsilon_d * k / options.continuation_steps;
      const std::vector<double> local = scan_roots(params, eps_k, step_options);
      if (!local.empty()) branch = nearest(local, branch);
    }
    chosen = nearest(roots, branch);
    status = SteadyStateStatus::Multistable;
    diagnostic = "multistable: " + std::to_string(roots.size()) + " self-consistent roots";
  } else if (!direct.converged) {
    if (roots.size() == 1) {
      chosen = roots.front();
      diagnostic = "picard iteration did not converge; bracketed root used";
    } else {
      status = SteadyStateStatus::NonConvergence;
      diagnostic = "no convergence after " + std::to_string(options.max_iter) +
                   " iterations (possible bistability); best iterate returned";
    }
  }

  SteadyState s = amplitudes_at(params, epsilon_d, chosen);
  s.iterations_used = direct.iterations;
  s.status = status;
  s.roots = roots;
  s.trace = direct.trace;
  s.diagnostic = std::move(diagnostic);
  s.residual = steady_state_residual(params, epsilon_d, s);
  return s;
}

std::complex<double> effective_coupling(double g_mb, std::complex<double> m_avg) {
  return kI * std::numbers::sqrt2 * g_mb * m_avg;
}

double gauge_phase(std::complex<double> coupling) {
  if (coupling == cd{0.0, 0.0}) return 0.0;
  return -std::arg(coupling);
}

SteadyState rotate_phase(const SteadyState& state, double theta) {
  SteadyState out = state;
  const cd phase = std::polar(1.0, theta);
  out.m_avg *= phase;
  out.a1_avg *= phase;
  out.a2_avg *= phase;
  return out;
}

double steady_state_residual(const PhysicalParams& params, double epsilon_d,
                             const SteadyState& s) {
  const double gm = mechanical_g(params);
  const cd r_a1 = -cd{params.kappa_1, params.Delta_1} * s.a1_avg - kI * params.g_ma * s.m_avg -
                  kI * params.J * s.a2_avg;
  const cd r_a2 = -cd{params.kappa_2t(), params.Delta_2} * s.a2_avg - kI * params.J * s.a1_avg;
  const cd r_m = -cd{params.kappa_m, params.Delta_m} * s.m_avg - kI * params.g_ma * s.a1_avg -
                 kI * gm * s.m_avg * s.q_avg + epsilon_d;
  const double r_q = params.omega_b * s.p_avg;
  const double r_p =
      -params.omega_b * s.q_avg - params.gamma_b * s.p_avg - gm * std::norm(s.m_avg);
  const double worst = std::max({std::abs(r_a1), std::abs(r_a2), std::abs(r_m), std::abs(r_q),
                                 std::abs(r_p)});
  return worst / std::max(epsilon_d, 1e-300);
}

}  // namespace magnocorr
