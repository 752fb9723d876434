#pragma once

#include <Eigen/Core>

namespace magnocorr {

using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;
using Mat8 = Eigen::Matrix<double, 8, 8>;

/// Quadrature ordering shared by every 8x8 matrix in the library:
/// (dI1, dphi1, dI2, dphi2, dx, dy, dq, dp).
inline constexpr int kQuadratures = 8;

}  // namespace magnocorr
