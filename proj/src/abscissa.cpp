#include "bohr/abscissa.hpp"

#include <cmath>
#include <sstream>

#include "bohr/errors.hpp"

namespace bohr {
namespace {

constexpr std::uint32_t kMaxTightenings = 3;

// F(sigma) - target, tightening the policy until its sign is certified.
// At most kMaxTightenings tightenings are spent over a whole solve; returns
// an uncertified enclosure once they run out.
Enclosure tightened_residual(double sigma, double target, TruncationPolicy& policy, std::uint32_t& used) {
  Enclosure r = bohr_sum(sigma, policy) - Enclosure::exact(target);
  while (r.certified_sign() == 0 && used < kMaxTightenings) {
    ++used;
    policy = policy.tightened();
    r = bohr_sum(sigma, policy) - Enclosure::exact(target);
  }
  return r;
}

[[noreturn]] void throw_uncertified(double sigma, double target, const Enclosure& r) {
  std::ostringstream msg;
  msg.precision(17);
  msg << "cannot certify the sign of F(" << sigma << ") - " << target << " = " << r.value << " +/- " << r.error
      << " after " << kMaxTightenings
      << " policy tightenings; use a tighter truncation policy or a larger tolerance";
  throw PrecisionError(msg.str());
}

void check_unit_interval(double a1_abs) {
  if (!(a1_abs >= 0.0 && a1_abs <= 1.0)) {
    std::ostringstream msg;
    msg << "|a1| must lie in [0, 1], got " << a1_abs;
    throw InvalidArgument(msg.str());
  }
}

}  // namespace

AbscissaResult solve_abscissa(double target, const TruncationPolicy& policy, double tol) {
  if (!(target > 0.0)) throw InvalidArgument("abscissa target must be positive");
  if (!(tol > 0.0)) throw InvalidArgument("solver tolerance must be positive");
  policy.validate();

  AbscissaResult out;
  out.policy = policy;
  double lo = kBracketLo;
  double hi = kBracketHi;

  const Enclosure r_lo = bohr_sum(lo, out.policy) - Enclosure::exact(target);
  const Enclosure r_hi = bohr_sum(hi, out.policy) - Enclosure::exact(target);
  if (r_lo.certified_sign() != 1 || r_hi.certified_sign() != -1) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "no certified sign change on [" << lo << ", " << hi << "] for target " << target << ": F(" << lo
        << ") = " << r_lo.value + target << ", F(" << hi << ") = " << r_hi.value + target;
    throw BracketError(msg.str());
  }
  out.residual_at_lo = r_lo;
  out.residual_at_hi = r_hi;

  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const Enclosure r = tightened_residual(mid, target, out.policy, out.tightenings);
    if (r.certified_sign() > 0) {
      lo = mid;
      out.residual_at_lo = r;
    } else if (r.certified_sign() < 0) {
      hi = mid;
      out.residual_at_hi = r;
    } else {
      // The midpoint sits on the root to within the enclosure width. Probe
      // a quarter-width window around it and keep whichever signs certify.
      const double offset = 0.125 * (hi - lo);
      const double left = mid - offset;
      const double right = mid + offset;
      const Enclosure r_left = bohr_sum(left, out.policy) - Enclosure::exact(target);
      const Enclosure r_right = bohr_sum(right, out.policy) - Enclosure::exact(target);
      bool moved = false;
      if (r_left.certified_sign() > 0) {
        lo = left;
        out.residual_at_lo = r_left;
        moved = true;
      } else if (r_left.certified_sign() < 0) {
        hi = left;
        out.residual_at_hi = r_left;
        moved = true;
      }
      if (r_right.certified_sign() < 0 && right < hi) {
        hi = right;
        out.residual_at_hi = r_right;
        moved = true;
      } else if (r_right.certified_sign() > 0 && right > lo) {
        lo = right;
        out.residual_at_lo = r_right;
        moved = true;
      }
      if (!moved) throw_uncertified(mid, target, r);
    }
    ++out.iterations;
  }

  out.bracket = {lo, hi};
  out.root = 0.5 * (lo + hi);
  out.residual = Enclosure::hull(out.residual_at_lo, out.residual_at_hi);
  return out;
}

Enclosure bohr_bound_modulus(double a1_abs, const Enclosure& f) {
  check_unit_interval(a1_abs);
  return Enclosure::exact(a1_abs) + (1.0 - a1_abs * a1_abs) * f;
}

Enclosure bohr_bound_modulus(double a1_abs, double sigma, const TruncationPolicy& policy) {
  check_unit_interval(a1_abs);
  return bohr_bound_modulus(a1_abs, bohr_sum(sigma, policy));
}

Enclosure bohr_bound_squared(double a1_abs, const Enclosure& f) {
  check_unit_interval(a1_abs);
  return Enclosure::exact(a1_abs * a1_abs) + (1.0 - a1_abs * a1_abs) * f;
}

Enclosure bohr_bound_squared(double a1_abs, double sigma, const TruncationPolicy& policy) {
  check_unit_interval(a1_abs);
  return bohr_bound_squared(a1_abs, bohr_sum(sigma, policy));
}

double radius_to_abscissa(double r) {
  if (!(r > 0.0 && r <= 1.0)) {
    std::ostringstream msg;
    msg << "radius must lie in (0, 1], got " << r;
    throw InvalidArgument(msg.str());
  }
  return -std::log2(r);
}

double rogosinski_radius(std::uint32_t l, double tol, R2Reading r2) {
  if (l == 0) throw InvalidArgument("Rogosinski radius index l must be >= 1");
  if (!(tol > 0.0)) throw InvalidArgument("radius tolerance must be positive");
  if (l == 1) return 0.5;
  if (l == 2) return r2 == R2Reading::Published ? std::sqrt(3.0) / 8.0 : std::sqrt(3.0 / 8.0);

  const double power = static_cast<double>(l) + 1.0;
  const auto f = [power](double r) { return 1.0 - r - 2.0 * std::pow(r, power); };

  // f(0) = 1 > 0 > f(1) = -2 and f is strictly decreasing on [0, 1].
  double lo = 0.0;
  double hi = 1.0;
  double best = 0.5;
  for (;;) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    best = mid;
    if (std::abs(fm) <= tol) break;
    (fm > 0.0 ? lo : hi) = mid;
  }
  if (std::abs(f(best)) > tol) {
    // Bracket collapsed to adjacent doubles; keep whichever edge is closer.
    best = std::abs(f(lo)) < std::abs(f(hi)) ? lo : hi;
    if (std::abs(f(best)) > tol) {
      std::ostringstream msg;
      msg << "Rogosinski radius r_" << l << " residual " << std::abs(f(best)) << " exceeds tolerance " << tol;
      throw PrecisionError(msg.str());
    }
  }
  return best;
}

}  // namespace bohr
