#pragma once

#include <stdexcept>

#include <Eigen/Core>
#include <Eigen/LU>

#include "magnocorr/types.hpp"

namespace magnocorr {

struct DriftMatrix;
struct DiffusionMatrix;

/// Raised when the vectorized Lyapunov operator is numerically singular,
/// which happens exactly on the stability boundary (lambda_i + lambda_j = 0).
class SingularSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Stationary covariance V_ij = <v_i v_j + v_j v_i>/2; symmetrized on construction.
struct CovarianceMatrix {
  Mat8 entries = Mat8::Zero();

  CovarianceMatrix() = default;
  explicit CovarianceMatrix(const Mat8& raw) : entries(0.5 * (raw + raw.transpose())) {}
};

/// Factorizes (I kron A + A kron I) once so several diffusion matrices can be
/// solved against the same drift (e.g. temperature scans).
class LyapunovSolver {
 public:
  /// Throws SingularSystemError if the factorization is rank deficient.
  explicit LyapunovSolver(const Eigen::MatrixXd& drift);

  /// Unique X with A X + X A^T = -D, symmetrized when D is symmetric.
  Eigen::MatrixXd solve(const Eigen::MatrixXd& diffusion) const;

  Eigen::Index dimension() const { return n_; }
  double reciprocal_condition() const { return rcond_; }

 private:
  Eigen::Index n_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
  double rcond_;
};

/// Solves A V + V A^T = -D by dense factorization of the n^2 x n^2 system.
/// Callers gate on stability first.
Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& drift, const Eigen::MatrixXd& diffusion);
CovarianceMatrix solve_lyapunov(const DriftMatrix& drift, const DiffusionMatrix& diffusion);

inline constexpr double kResidualFloor = 1e-300;

/// ||A V + V A^T + D||_max / max(||D||_max, 1e-300).
double lyapunov_residual(const Eigen::MatrixXd& drift, const Eigen::MatrixXd& covariance,
                         const Eigen::MatrixXd& diffusion);

/// Block-diagonal symplectic form, one [[0,1],[-1,0]] block per mode.
Eigen::MatrixXd symplectic_form(Eigen::Index modes);

/// Smallest eigenvalue of the Hermitian matrix V + (i/2) Omega. A physical
/// Gaussian state has this >= 0 (vacuum variance 1/2).
double physicality_margin(const Eigen::MatrixXd& covariance);

}  // namespace magnocorr
