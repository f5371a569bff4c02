#pragma once

#include <cstdint>

#include "bohr/enclosure.hpp"
#include "bohr/zeta_kernels.hpp"

namespace bohr {

inline constexpr double kDefaultSolverTol = 1e-8;
inline constexpr double kDefaultRadiusTol = 1e-14;

/// Fixed search interval for sigma. F(1) ~ 1.445 and F(3) ~ 0.149.
inline constexpr double kBracketLo = 1.0;
inline constexpr double kBracketHi = 3.0;

/// Right-hand sides of the two abscissa equations.
inline constexpr double kBohrTarget = 0.5;
inline constexpr double kMixedTarget = 1.0;

/// Published upper bounds for the two roots, rounded to four decimals.
inline constexpr double kPublishedBohrRoot = 1.7267;
inline constexpr double kPublishedMixedRoot = 1.2061;

/// Constants quoted from earlier literature; reported for comparison only
/// and never recomputed here.
namespace cited {
inline constexpr double kBohrAbscissaUpper = 1.8154;
inline constexpr double kBohrAbscissaRefined = 1.7287;
}  // namespace cited

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  double width() const noexcept { return hi - lo; }
};

/// Root sigma_0 of F(sigma) = target together with its certificate.
struct AbscissaResult {
  double root = 0.0;
  Bracket bracket;
  /// Hull of F - target over the final bracket. Contains zero: the lower
  /// endpoint is certified positive and the upper one certified negative.
  Enclosure residual;
  Enclosure residual_at_lo;
  Enclosure residual_at_hi;
  std::uint32_t iterations = 0;
  /// Policy tightenings spent (at most three per solve).
  std::uint32_t tightenings = 0;
  /// Policy in force at the end of the search (tightened if retries occurred).
  TruncationPolicy policy;
};

/// Bisects the strictly decreasing F on [1, 3] until the bracket is no wider
/// than tol. Each sign decision is certified by its enclosure. An uncertified
/// midpoint tightens the policy, at most three times per solve; if it still straddles the
/// target, points a quarter-width either side are tried, and PrecisionError
/// is raised only if neither certifies.
/// Throws BracketError when F(1) > target > F(3) cannot be certified.
AbscissaResult solve_abscissa(double target, const TruncationPolicy& policy = {},
                              double tol = kDefaultSolverTol);

/// |a1| + (1 - |a1|^2) F(sigma).
Enclosure bohr_bound_modulus(double a1_abs, double sigma, const TruncationPolicy& policy = {});
Enclosure bohr_bound_modulus(double a1_abs, const Enclosure& bohr_sum_value);

/// |a1|^2 + (1 - |a1|^2) F(sigma).
Enclosure bohr_bound_squared(double a1_abs, double sigma, const TruncationPolicy& policy = {});
Enclosure bohr_bound_squared(double a1_abs, const Enclosure& bohr_sum_value);

/// Abscissa sigma with 2^-sigma = r, i.e. log(1/r) / log 2.
double radius_to_abscissa(double r);

/// Which closed form to use for r_2.
enum class R2Reading {
  /// sqrt(3) / 8, the constant as published.
  Published,
  /// sqrt(3 / 8), which continues the monotone pattern of the other radii.
  SquareRootOfRatio,
};

/// Rogosinski radius r_l: 1/2 for l = 1, a closed form for l = 2, and the
/// unique positive root of 1 - r - 2 r^(l+1) for l >= 3.
double rogosinski_radius(std::uint32_t l, double tol = kDefaultRadiusTol,
                         R2Reading r2 = R2Reading::Published);

}  // namespace bohr
