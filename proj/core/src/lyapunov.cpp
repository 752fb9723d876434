#include "magnocorr/lyapunov.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "magnocorr/dynamics.hpp"

namespace magnocorr {

namespace {

// Column-major vec(): vec(A X + X A^T) = (I kron A + A kron I) vec(X).
Eigen::MatrixXd kronecker_sum(const Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  Eigen::MatrixXd op = Eigen::MatrixXd::Zero(n * n, n * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    // I kron A: block (j, j) is A.
    op.block(j * n, j * n, n, n) += a;
    // A kron I: block (j, l) is a(j, l) * I.
    for (Eigen::Index l = 0; l < n; ++l) {
      const double s = a(j, l);
      if (s == 0.0) continue;
      for (Eigen::Index i = 0; i < n; ++i) op(j * n + i, l * n + i) += s;
    }
  }
  return op;
}

}  // namespace

LyapunovSolver::LyapunovSolver(const Eigen::MatrixXd& drift) : n_(drift.rows()) {
  if (drift.rows() != drift.cols()) throw std::invalid_argument("lyapunov: drift not square");
  if (!drift.allFinite()) throw std::invalid_argument("lyapunov: non-finite drift");
  lu_.compute(kronecker_sum(drift));
  rcond_ = lu_.rcond();
  const double threshold = static_cast<double>(n_ * n_) * std::numeric_limits<double>::epsilon();
  if (!(rcond_ > threshold)) {
    throw SingularSystemError("lyapunov: singular system (drift on the stability boundary)");
  }
}

Eigen::MatrixXd LyapunovSolver::solve(const Eigen::MatrixXd& diffusion) const {
  if (diffusion.rows() != n_ || diffusion.cols() != n_) {
    throw std::invalid_argument("lyapunov: diffusion shape mismatch");
  }
  const Eigen::VectorXd rhs = -Eigen::Map<const Eigen::VectorXd>(diffusion.data(), n_ * n_);
  const Eigen::VectorXd x = lu_.solve(rhs);
  Eigen::MatrixXd v = Eigen::Map<const Eigen::MatrixXd>(x.data(), n_, n_);
  if (diffusion.isApprox(diffusion.transpose(), 0.0)) v = 0.5 * (v + v.transpose()).eval();
  return v;
}

Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& drift, const Eigen::MatrixXd& diffusion) {
  return LyapunovSolver(drift).solve(diffusion);
}

CovarianceMatrix solve_lyapunov(const DriftMatrix& drift, const DiffusionMatrix& diffusion) {
  const Eigen::MatrixXd v = solve_lyapunov(Eigen::MatrixXd(drift.entries),
                                           Eigen::MatrixXd(diffusion.entries));
  return CovarianceMatrix(Mat8(v));
}

double lyapunov_residual(const Eigen::MatrixXd& drift, const Eigen::MatrixXd& covariance,
                         const Eigen::MatrixXd& diffusion) {
  const Eigen::MatrixXd r = drift * covariance + covariance * drift.transpose() + diffusion;
  const double scale = diffusion.size() == 0 ? 0.0 : diffusion.cwiseAbs().maxCoeff();
  const double num = r.size() == 0 ? 0.0 : r.cwiseAbs().maxCoeff();
  return num / std::max(scale, kResidualFloor);
}

Eigen::MatrixXd symplectic_form(Eigen::Index modes) {
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * modes, 2 * modes);
  for (Eigen::Index k = 0; k < modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

double physicality_margin(const Eigen::MatrixXd& covariance) {
  const Eigen::Index n = covariance.rows();
  if (n != covariance.cols() || n % 2 != 0) {
    throw std::invalid_argument("physicality_margin: need an even square matrix");
  }
  const Eigen::MatrixXd sym = 0.5 * (covariance + covariance.transpose());
  Eigen::MatrixXcd h = sym.cast<std::complex<double>>();
  h += std::complex<double>(0.0, 0.5) * symplectic_form(n / 2).cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace magnocorr
