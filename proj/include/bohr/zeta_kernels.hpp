#pragma once

#include <cstdint>
#include <vector>

#include "bohr/enclosure.hpp"

namespace bohr {

/// Truncation parameters shared by every series kernel.
struct TruncationPolicy {
  /// Direct terms of the zeta sum before the Euler-Maclaurin correction.
  std::uint32_t zeta_terms = 64;
  /// Number M of terms kept in the Moebius series for the prime zeta function.
  std::uint32_t moebius_terms = 64;
  /// Outer-sum cutoff for the Bohr sum: stop once the geometric tail bound
  /// falls below this.
  double k_tail_tolerance = 1e-14;

  /// Throws InvalidArgument unless all fields are positive and the tolerance is < 1.
  void validate() const;
  /// Doubles both term counts and halves the tail tolerance.
  TruncationPolicy tightened() const;

  friend bool operator==(const TruncationPolicy&, const TruncationPolicy&) = default;
};

/// zeta(s) for real s > 1.
Enclosure riemann_zeta(double s, const TruncationPolicy& policy = {});

/// zeta(s) - 1, evaluated without forming 1 + small so that large s keeps
/// full relative accuracy.
Enclosure riemann_zeta_minus_one(double s, const TruncationPolicy& policy = {});

/// Prime zeta function P(s) = sum over primes p^-s, from
/// P(s) = sum_{m>=1} mu(m)/m log zeta(ms).
Enclosure prime_zeta(double s, const TruncationPolicy& policy = {});

/// S_k(s) = sum over n with Omega(n) = k of n^-s. S_0 = 1.
Enclosure almost_prime_zeta(std::uint32_t k, double s, const TruncationPolicy& policy = {});

/// S_0(s) .. S_kmax(s) in one pass of the power-sum recurrence.
std::vector<Enclosure> almost_prime_zeta_table(std::uint32_t kmax, double s,
                                               const TruncationPolicy& policy = {});

/// Diagnostics for one Bohr-sum evaluation.
struct BohrSumDetail {
  Enclosure value;
  /// Number K of almost-prime levels summed explicitly.
  std::uint32_t levels = 0;
  /// Geometric bound on the omitted levels, already included in value.error.
  double tail_bound = 0.0;
  /// Upper edge of sqrt(P(2 sigma)), the ratio used for the tail bound.
  double ratio = 0.0;
};

/// F(sigma) = sum_{k>=1} sqrt(S_k(2 sigma)).
///
/// The outer sum stops at the first K whose tail bound
/// sqrt(S_K) * q / (1 - q), q = sqrt(P(2 sigma)), is below the policy
/// tolerance. The bound uses S_{k+1}(s) <= P(s) S_k(s). Requires the upper
/// edge of P(2 sigma) to be < 1 and throws DomainError otherwise.
Enclosure bohr_sum(double sigma, const TruncationPolicy& policy = {});
BohrSumDetail bohr_sum_detail(double sigma, const TruncationPolicy& policy = {});

}  // namespace bohr
