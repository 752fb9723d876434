#pragma once

#include <complex>
#include <string>
#include <vector>

#include "magnocorr/params.hpp"

namespace magnocorr {

enum class SteadyStateStatus {
  Converged,
  /// Several self-consistent detunings; the branch connected to epsilon_d -> 0 was kept.
  Multistable,
  /// Picard iteration exhausted max_iter and no bracketed root was found.
  NonConvergence,
};

/// Mean-field amplitudes in the frame rotating at the drive frequency.
struct SteadyState {
  std::complex<double> m_avg{};
  std::complex<double> a1_avg{};
  std::complex<double> a2_avg{};
  double q_avg = 0.0;
  double p_avg = 0.0;
  double delta_eff = 0.0;  ///< Delta_m + g_mb <q>, rad/s
  int iterations_used = 0;
  double residual = 0.0;   ///< max |zero-derivative Langevin RHS| / epsilon_d
  SteadyStateStatus status = SteadyStateStatus::Converged;
  std::vector<double> roots;  ///< every self-consistent delta_eff found by the scan
  std::vector<double> trace;  ///< Picard iterates, only with record_trace
  std::string diagnostic;

  bool ok() const { return status != SteadyStateStatus::NonConvergence; }
};

struct SteadyStateOptions {
  double tol_rel = 1e-12;  ///< stop when |delta_eff step| < tol_rel * omega_b
  int max_iter = 1000;
  double damping = 0.5;
  int scan_points = 2001;
  int continuation_steps = 64;
  bool record_trace = false;
};

/// Solves the zero-derivative mean-field equations.
///
/// For a fixed effective detuning the linear part closes to
///   <m>  = eps (J^2 + f1 f2) / (fm (J^2 + f1 f2) + g_ma^2 f2)
///   <a1> = -i g_ma f2 <m> / (J^2 + f1 f2)
///   <a2> = -i J <a1> / f2
/// with f1 = i D1 + k1, f2 = i D2 + (k2 - g), fm = i D_eff + km. The
/// self-consistency D_eff = D_m - (g_mb^2 / omega_b) |<m>|^2 is iterated in
/// Microscopic mode. In DirectG mode D_eff == D_m and <q> = 0.
SteadyState solve_steady_state(const PhysicalParams& params, double epsilon_d,
                               const SteadyStateOptions& options = {});

/// Amplitudes for a prescribed effective detuning (no self-consistency).
SteadyState amplitudes_at(const PhysicalParams& params, double epsilon_d, double delta_eff);

/// delta -> Delta_m - (g_mb^2/omega_b) |<m>(delta)|^2, the self-consistency map.
double detuning_map(const PhysicalParams& params, double epsilon_d, double delta_eff);

/// G_mb = i sqrt2 g_mb <m>.
std::complex<double> effective_coupling(double g_mb, std::complex<double> m_avg);

/// Angle theta such that exp(i theta) * coupling is real and >= 0.
double gauge_phase(std::complex<double> coupling);

/// Multiplies every complex amplitude by exp(i theta); the global drive phase is free.
SteadyState rotate_phase(const SteadyState& state, double theta);

/// Max-norm of the noise-free Langevin right-hand sides at `state`, over epsilon_d.
double steady_state_residual(const PhysicalParams& params, double epsilon_d,
                             const SteadyState& state);

}  // namespace magnocorr
