#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "bohr/errors.hpp"
#include "bohr/primes.hpp"

using namespace bohr;

namespace {

bool is_prime_by_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t omega_by_trial(std::uint64_t n) {
  std::uint32_t count = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      n /= d;
      ++count;
    }
  return count + (n > 1 ? 1 : 0);
}

}  // namespace

TEST_CASE("small tables list exactly the primes") {
  const PrimeTable ten(10);
  CHECK(std::vector<std::uint32_t>(ten.primes().begin(), ten.primes().end()) ==
        std::vector<std::uint32_t>{2, 3, 5, 7});
  const PrimeTable two(2);
  CHECK(two.primes().size() == 1);
  CHECK(two.primes()[0] == 2);
  CHECK(ten.primes_up_to(6).size() == 3);
}

TEST_CASE("prime count up to one million") {
  const PrimeTable table(1'000'000);
  CHECK(table.primes().size() == 78498);
  // Spot-check the sieve against trial division.
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> pick(2, 1'000'000);
  for (int i = 0; i < 2000; ++i) {
    const auto n = pick(rng);
    REQUIRE(table.is_prime(n) == is_prime_by_trial(n));
  }
}

TEST_CASE("smallest prime factor is a prime divisor") {
  const PrimeTable table(20000);
  for (std::uint64_t n = 2; n <= 20000; ++n) {
    const auto p = table.smallest_prime_factor(n);
    REQUIRE(n % p == 0);
    REQUIRE(is_prime_by_trial(p));
  }
  for (std::size_t i = 1; i < table.primes().size(); ++i) REQUIRE(table.primes()[i - 1] < table.primes()[i]);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(PrimeTable(1), InvalidArgument);
  CHECK_THROWS_AS(PrimeTable(0), InvalidArgument);
  CHECK_THROWS_AS(PrimeTable(PrimeTable::kMaxLimit + 1), ResourceError);
}

TEST_CASE("factorize examples") {
  const PrimeTable table(100);
  CHECK(factorize(12, table).entries == std::vector<PrimePower>{{2, 2}, {3, 1}});
  CHECK(factorize(1, table).entries.empty());
  CHECK(factorize(97, table).entries == std::vector<PrimePower>{{97, 1}});
  CHECK_THROWS_AS(factorize(101, table), OutOfRange);
  CHECK_THROWS_AS(factorize(0, table), InvalidArgument);
}

TEST_CASE("omega examples") {
  const PrimeTable table(2000);
  CHECK(omega(12, table) == 3);
  CHECK(omega(1024, table) == 10);
  CHECK(omega(1, table) == 0);
  CHECK_THROWS_AS(omega(0, table), InvalidArgument);
  CHECK_THROWS_AS(omega(2001, table), OutOfRange);
}

TEST_CASE("factorisation reconstructs and agrees with trial division") {
  const PrimeTable table(50000);
  for (std::uint64_t n = 1; n <= 50000; ++n) {
    const auto fv = table.factorize(n);
    REQUIRE(fv.value() == n);
    for (std::size_t i = 0; i < fv.entries.size(); ++i) {
      REQUIRE(fv.entries[i].exponent >= 1);
      if (i > 0) REQUIRE(fv.entries[i - 1].prime < fv.entries[i].prime);
    }
    REQUIRE(table.omega(n) == fv.total_exponent());
    REQUIRE(table.omega(n) == omega_by_trial(n));
  }
}

TEST_CASE("omega is completely additive") {
  const PrimeTable table(1'000'000);
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::uint64_t> pick(1, 1000);
  for (int i = 0; i < 5000; ++i) {
    const auto m = pick(rng);
    const auto n = pick(rng);
    REQUIRE(table.omega(m * n) == table.omega(m) + table.omega(n));
  }
}
