#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace bohr {

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorisation n = prod p_i^a_i with strictly increasing primes and
/// every exponent >= 1. The empty vector is n = 1.
struct ExponentVector {
  std::vector<PrimePower> entries;

  /// Reconstructs n. Throws OutOfRange if the product overflows 64 bits.
  std::uint64_t value() const;
  /// Sum of the exponents, i.e. Omega(n).
  std::uint32_t total_exponent() const noexcept;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
};

/// Smallest-prime-factor sieve up to a fixed limit. Immutable once built;
/// all queries are const and safe to call concurrently.
class PrimeTable {
 public:
  /// Largest supported limit; the factor table stores 32-bit entries.
  static constexpr std::uint64_t kMaxLimit = 0xFFFFFFFFull;

  /// Throws InvalidArgument for limit < 2 and ResourceError when the table
  /// cannot be allocated.
  explicit PrimeTable(std::uint64_t limit);

  std::uint64_t limit() const noexcept { return limit_; }
  std::span<const std::uint32_t> primes() const noexcept { return primes_; }
  /// Primes p <= bound, as a prefix of primes().
  std::span<const std::uint32_t> primes_up_to(std::uint64_t bound) const noexcept;

  std::uint32_t smallest_prime_factor(std::uint64_t n) const;
  bool is_prime(std::uint64_t n) const;

  ExponentVector factorize(std::uint64_t n) const;
  std::uint32_t omega(std::uint64_t n) const;

 private:
  void check_query(std::uint64_t n) const;

  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

inline PrimeTable build_prime_table(std::uint64_t limit) { return PrimeTable(limit); }
inline ExponentVector factorize(std::uint64_t n, const PrimeTable& table) { return table.factorize(n); }
inline std::uint32_t omega(std::uint64_t n, const PrimeTable& table) { return table.omega(n); }

}  // namespace bohr
