#pragma once

#include <array>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "magnocorr/lyapunov.hpp"
#include "magnocorr/types.hpp"

namespace magnocorr {

/// Modes in quadrature-vector order: a1 -> (0,1), a2 -> (2,3), m -> (4,5), b -> (6,7).
enum class ModeId { A1 = 0, A2 = 1, M = 2, B = 3 };

inline constexpr std::array<ModeId, 4> kAllModes{ModeId::A1, ModeId::A2, ModeId::M, ModeId::B};

using ModePair = std::pair<ModeId, ModeId>;

/// The six unordered pairs in output-column order: a1a2, a1m, a2m, a1b, a2b, mb.
inline constexpr std::array<ModePair, 6> kModePairs{{
    {ModeId::A1, ModeId::A2},
    {ModeId::A1, ModeId::M},
    {ModeId::A2, ModeId::M},
    {ModeId::A1, ModeId::B},
    {ModeId::A2, ModeId::B},
    {ModeId::M, ModeId::B},
}};

std::string_view mode_name(ModeId mode);  // "a1", "a2", "m", "b"
ModeId parse_mode(std::string_view name);
constexpr int quadrature_offset(ModeId mode) { return 2 * static_cast<int>(mode); }

/// Raised for reduced states violating the uncertainty principle beyond roundoff.
class PhysicalityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 4x4 two-mode covariance [[A, B], [B^T, C]] with A the first-listed mode.
struct TwoModeCM {
  Mat4 entries = Mat4::Identity() * 0.5;
  ModePair source_pair{ModeId::A1, ModeId::A2};

  Mat2 block_a() const { return entries.topLeftCorner<2, 2>(); }
  Mat2 block_b() const { return entries.topRightCorner<2, 2>(); }
  Mat2 block_c() const { return entries.bottomRightCorner<2, 2>(); }
};

/// Rows/columns of the two modes, first-listed mode first. Throws on equal modes.
TwoModeCM reduce(const CovarianceMatrix& covariance, ModeId first, ModeId second);

/// Both routes to the smallest partially-transposed symplectic eigenvalue.
struct SymplecticSpectrum {
  double nu_minus_eigen = 0.0;   ///< min |eig(i Omega P V P)|
  double nu_minus_closed = 0.0;  ///< sqrt((S - sqrt(S^2 - 4 det V)) / 2)
};

/// Computes nu~_- by both routes. Throws PhysicalityError on a negative
/// discriminant or negative nu^2 beyond roundoff.
SymplecticSpectrum pt_symplectic_spectrum(const TwoModeCM& cm);

inline constexpr double kDualMethodTolerance = 1e-10;
inline constexpr double kClampTolerance = 1e-12;

/// max(0, -ln(2 nu~_-)). Vacuum variance is 1/2, so E_N > 0 iff nu~_- < 1/2.
/// Throws PhysicalityError if the two routes disagree by more than 1e-10.
double log_negativity(const TwoModeCM& cm);

enum class SteeringDirection { Forward, Backward };

/// Forward: max{0, S(2A) - S(2V4)}, i.e. first mode steers second.
/// Backward: same with S(2C). S(X) = (1/2) ln det X.
double steering(const TwoModeCM& cm, SteeringDirection direction);

/// Clamps values in (-1e-12, 0) to exactly 0.
double clamp_roundoff(double value);

}  // namespace magnocorr
