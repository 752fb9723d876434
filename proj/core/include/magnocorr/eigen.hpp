#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

namespace magnocorr {

class EigenNonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All eigenvalues of a real square matrix (n <= 64).
///
/// Balances the matrix, reduces it to upper Hessenberg form with Householder
/// reflections, then runs Francis double-shift QR in real arithmetic. Complex
/// pairs are extracted from the converged 2x2 blocks. Order is the deflation
/// order of the QR sweep, not sorted.
///
/// Throws std::invalid_argument on non-square/non-finite input and
/// EigenNonConvergence if a block fails to deflate within the iteration budget.
std::vector<std::complex<double>> eigenvalues(const Eigen::MatrixXd& matrix);

}  // namespace magnocorr
