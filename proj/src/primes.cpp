#include "bohr/primes.hpp"

#include <algorithm>
#include <limits>
#include <new>
#include <string>

#include "bohr/errors.hpp"

namespace bohr {

std::uint64_t ExponentVector::value() const {
  std::uint64_t n = 1;
  for (const auto& [p, a] : entries) {
    for (std::uint32_t i = 0; i < a; ++i) {
      if (n > std::numeric_limits<std::uint64_t>::max() / p)
        throw OutOfRange("exponent vector product overflows 64 bits");
      n *= p;
    }
  }
  return n;
}

std::uint32_t ExponentVector::total_exponent() const noexcept {
  std::uint32_t total = 0;
  for (const auto& e : entries) total += e.exponent;
  return total;
}

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit) {
  if (limit < 2) throw InvalidArgument("prime table limit must be >= 2, got " + std::to_string(limit));
  if (limit > kMaxLimit)
    throw ResourceError("prime table limit " + std::to_string(limit) + " exceeds the supported maximum " +
                        std::to_string(kMaxLimit));
  try {
    spf_.assign(limit + 1, 0);
  } catch (const std::bad_alloc&) {
    throw ResourceError("cannot allocate a prime table of " + std::to_string(limit + 1) + " entries (" +
                        std::to_string((limit + 1) * sizeof(std::uint32_t)) + " bytes)");
  }

  // Linear sieve: every composite is struck exactly once by its smallest prime.
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes_.push_back(static_cast<std::uint32_t>(i));
    }
    for (const std::uint32_t p : primes_) {
      const std::uint64_t composite = static_cast<std::uint64_t>(p) * i;
      if (p > spf_[i] || composite > limit) break;
      spf_[composite] = p;
    }
  }
}

std::span<const std::uint32_t> PrimeTable::primes_up_to(std::uint64_t bound) const noexcept {
  const auto end = std::upper_bound(primes_.begin(), primes_.end(), bound);
  return {primes_.data(), static_cast<std::size_t>(end - primes_.begin())};
}

void PrimeTable::check_query(std::uint64_t n) const {
  if (n == 0) throw InvalidArgument("factorisation of 0 is undefined");
  if (n > limit_)
    throw OutOfRange(std::to_string(n) + " exceeds the prime table limit " + std::to_string(limit_));
}

std::uint32_t PrimeTable::smallest_prime_factor(std::uint64_t n) const {
  check_query(n);
  if (n == 1) throw InvalidArgument("1 has no prime factor");
  return spf_[n];
}

bool PrimeTable::is_prime(std::uint64_t n) const {
  if (n < 2) return false;
  check_query(n);
  return spf_[n] == n;
}

ExponentVector PrimeTable::factorize(std::uint64_t n) const {
  check_query(n);
  ExponentVector out;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    std::uint32_t a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    out.entries.push_back({p, a});
  }
  return out;
}

std::uint32_t PrimeTable::omega(std::uint64_t n) const {
  check_query(n);
  std::uint32_t count = 0;
  for (; n > 1; n /= spf_[n]) ++count;
  return count;
}

}  // namespace bohr
