#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "magnocorr/params.hpp"
#include "magnocorr/types.hpp"

namespace magnocorr {

/// Linearized quadrature drift, ordering (dI1, dphi1, dI2, dphi2, dx, dy, dq, dp).
struct DriftMatrix {
  Mat8 entries = Mat8::Zero();
};

/// Diagonal noise matrix D. `warnings` carries e.g. the negative-diffusion flag.
struct DiffusionMatrix {
  Mat8 entries = Mat8::Zero();
  std::vector<std::string> warnings;

  bool has_negative_entry() const { return entries.diagonal().minCoeff() < 0.0; }
};

struct StabilityReport {
  std::vector<std::complex<double>> eigenvalues;
  bool stable = false;
  double margin = 0.0;  ///< max real part, rad/s
  /// False when the eigensolver failed; such a report is never "unstable".
  bool determinate = true;
};

/// Builds A around the steady state. `delta_eff` is the effective magnon
/// detuning and `G_mb_real` the gauge-fixed (real, >= 0) magnomechanical coupling.
///
/// Derived variant (default), from linearizing the Langevin equations with
/// <m> rotated so that G_mb = i sqrt2 g_mb <m> is real-positive:
///
///   [ -k1   D1    0    J    0    gma   0    0  ]
///   [ -D1  -k1   -J    0  -gma   0     0    0  ]
///   [  0    J   -k2t   D2   0    0     0    0  ]
///   [ -J    0   -D2  -k2t   0    0     0    0  ]
///   [  0   gma   0    0   -km   De   -G    0  ]
///   [ -gma  0    0    0   -De  -km    0    0  ]
///   [  0    0    0    0    0    0     0    wb ]
///   [  0    0    0    0    0    G   -wb  -gb ]
///
/// Printed variant: same pattern but +De at (6,5) and -k2 (no gain) on the
/// cavity-2 diagonal, transcribed literally from the published matrix.
DriftMatrix drift_matrix(const PhysicalParams& params, double delta_eff, double G_mb_real);

/// diag[k1(2N1+1), k1(2N1+1), d2, d2, km(2Nm+1), km(2Nm+1), 0, gb(2Nb+1)],
/// d2 per params.diffusion_convention.
DiffusionMatrix diffusion_matrix(const PhysicalParams& params);

/// Stable iff every eigenvalue has real part < -tol_stab.
StabilityReport stability(const DriftMatrix& drift, double tol_stab);

/// Same, with tol_stab = 1e-9 kappa_1.
StabilityReport stability(const DriftMatrix& drift, const PhysicalParams& params);

inline constexpr double kRelativeStabilityTolerance = 1e-9;

/// Row-major plain-text dump, scientific notation, 17 significant digits.
void write_matrix(std::ostream& out, const Mat8& matrix);

}  // namespace magnocorr
