#pragma once

#include <algorithm>
#include <cmath>
#include <iosfwd>
#include <limits>

#include "bohr/errors.hpp"

namespace bohr {

/// Rounding slack charged per floating-point operation, relative to the
/// magnitude of the result. Hardware rounding is not directed, so every
/// combinator widens its radius by this much.
inline constexpr double kRoundingSlack = 8.0 * std::numeric_limits<double>::epsilon();

/// A real value with a certified absolute error radius: the true quantity
/// lies in [value - error, value + error].
struct Enclosure {
  double value = 0.0;
  double error = 0.0;

  static constexpr Enclosure exact(double v) noexcept { return {v, 0.0}; }

  double lower() const noexcept { return value - error; }
  double upper() const noexcept { return value + error; }
  bool contains(double x) const noexcept { return lower() <= x && x <= upper(); }
  bool overlaps(const Enclosure& other) const noexcept {
    return lower() <= other.upper() && other.lower() <= upper();
  }
  /// +1 or -1 when the whole enclosure lies strictly on one side of zero, 0 otherwise.
  int certified_sign() const noexcept {
    if (lower() > 0.0) return 1;
    if (upper() < 0.0) return -1;
    return 0;
  }

  /// Smallest enclosure containing both arguments.
  static Enclosure hull(const Enclosure& a, const Enclosure& b) noexcept {
    const double lo = std::min(a.lower(), b.lower());
    const double hi = std::max(a.upper(), b.upper());
    return {0.5 * (lo + hi), 0.5 * (hi - lo)};
  }
};

namespace detail {
inline double slack(double v) noexcept { return kRoundingSlack * std::abs(v); }
}  // namespace detail

inline Enclosure operator+(const Enclosure& a, const Enclosure& b) noexcept {
  const double v = a.value + b.value;
  return {v, a.error + b.error + detail::slack(v)};
}

inline Enclosure operator-(const Enclosure& a, const Enclosure& b) noexcept {
  const double v = a.value - b.value;
  return {v, a.error + b.error + detail::slack(v) + detail::slack(a.value)};
}

inline Enclosure operator*(const Enclosure& a, const Enclosure& b) noexcept {
  const double v = a.value * b.value;
  return {v, std::abs(a.value) * b.error + std::abs(b.value) * a.error + a.error * b.error +
                 detail::slack(v)};
}

inline Enclosure operator*(double c, const Enclosure& a) noexcept {
  const double v = c * a.value;
  return {v, std::abs(c) * a.error + detail::slack(v)};
}

inline Enclosure& operator+=(Enclosure& a, const Enclosure& b) noexcept { return a = a + b; }

/// Square root. A negative lower edge is clamped at zero; the radius grows
/// to cover the clamped interval.
inline Enclosure sqrt(const Enclosure& a) {
  if (a.value < 0.0) throw DomainError("sqrt of an enclosure with negative centre");
  const double v = std::sqrt(a.value);
  const double lo = std::sqrt(std::max(a.lower(), 0.0));
  const double hi = std::sqrt(a.upper());
  return {v, std::max(v - lo, hi - v) + detail::slack(v)};
}

/// log(1 + a) for an enclosure whose lower edge exceeds -1.
inline Enclosure log1p(const Enclosure& a) {
  if (a.lower() <= -1.0) throw DomainError("log1p of an enclosure reaching -1");
  const double v = std::log1p(a.value);
  return {v, a.error / (1.0 + a.lower()) + detail::slack(v)};
}

std::ostream& operator<<(std::ostream& os, const Enclosure& e);

}  // namespace bohr
