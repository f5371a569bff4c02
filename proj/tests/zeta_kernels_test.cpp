#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bohr/enclosure.hpp"
#include "bohr/errors.hpp"
#include "bohr/primes.hpp"
#include "bohr/zeta_kernels.hpp"

using namespace bohr;

namespace {

// Independent bracket for zeta(s): partial sum to N plus the integral bounds
// 1/((s-1)(N+1)^(s-1)) <= tail <= 1/((s-1) N^(s-1)).
Enclosure zeta_by_partial_sum(double s, std::uint64_t big_n) {
  double sum = 0.0;
  for (std::uint64_t n = big_n; n >= 1; --n) sum += std::pow(static_cast<double>(n), -s);
  const double lo = sum + std::pow(big_n + 1.0, 1.0 - s) / (s - 1.0);
  const double hi = sum + std::pow(static_cast<double>(big_n), 1.0 - s) / (s - 1.0);
  return {0.5 * (lo + hi), 0.5 * (hi - lo) + 1e-15};
}

// Sum of n^-s over n <= N with Omega(n) == k, with the tail N^(1-s)/(s-1).
Enclosure almost_prime_by_direct_sum(std::uint32_t k, double s, const PrimeTable& table) {
  double sum = 0.0;
  for (std::uint64_t n = table.limit(); n >= 2; --n)
    if (table.omega(n) == k) sum += std::pow(static_cast<double>(n), -s);
  const double tail = std::pow(static_cast<double>(table.limit()), 1.0 - s) / (s - 1.0);
  return {sum + 0.5 * tail, 0.5 * tail + 1e-15};
}

// Reference values from a 30-digit evaluation of the same power-sum
// recurrence on top of an independent prime zeta implementation.
struct Reference {
  double s;
  double values[5];  // S_1 .. S_5
};
constexpr Reference kReference[] = {
    {3.0, {0.17476263929944354, 0.023806033472771960, 0.0030493620823343129, 0.00038390453461572691,
           4.8089401108325680e-05}},
    {4.0, {0.076993139764246845, 0.0049946744686373396, 0.00031442749683294174, 1.9679633628181915e-05,
           1.2303217477284954e-06}},
    {6.0, {0.017070086850636513, 0.00026870716756140963, 4.2012755339606712e-06, 6.5648669662723646e-08,
           1.0257655930349305e-09}},
    {8.0, {0.0040614053665178306, 1.5888519885259589e-05, 6.2068136241614699e-08, 2.4245420671981297e-10,
           9.4708682875570995e-13}},
};

}  // namespace

TEST_CASE("enclosure combinators contain sampled results") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> centre(-4.0, 4.0);
  std::uniform_real_distribution<double> radius(0.0, 0.5);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const Enclosure a{centre(rng), radius(rng)};
    const Enclosure b{centre(rng), radius(rng)};
    const double x = a.value + unit(rng) * a.error;
    const double y = b.value + unit(rng) * b.error;
    REQUIRE((a + b).contains(x + y));
    REQUIRE((a - b).contains(x - y));
    REQUIRE((a * b).contains(x * y));
    REQUIRE((2.5 * a).contains(2.5 * x));
    if (a.lower() > 0.0) REQUIRE(sqrt(a).contains(std::sqrt(x)));
    if (a.lower() > -0.9) REQUIRE(log1p(a).contains(std::log1p(x)));
  }
}

TEST_CASE("sqrt clamps a negative lower edge") {
  const Enclosure e{0.01, 0.02};
  const Enclosure r = sqrt(e);
  CHECK(r.value == doctest::Approx(0.1));
  CHECK(r.lower() <= 0.0);
  CHECK(r.upper() >= std::sqrt(0.03));
  CHECK_THROWS_AS(sqrt(Enclosure{-0.01, 0.02}), DomainError);
}

TEST_CASE("truncation policy validation") {
  CHECK_NOTHROW(TruncationPolicy{}.validate());
  CHECK_THROWS_AS((TruncationPolicy{1, 64, 1e-14}).validate(), InvalidArgument);
  CHECK_THROWS_AS((TruncationPolicy{64, 0, 1e-14}).validate(), InvalidArgument);
  CHECK_THROWS_AS((TruncationPolicy{64, 64, 1.0}).validate(), InvalidArgument);
  CHECK_THROWS_AS((TruncationPolicy{64, 64, 0.0}).validate(), InvalidArgument);
  const auto t = TruncationPolicy{}.tightened();
  CHECK(t.zeta_terms == 128);
  CHECK(t.moebius_terms == 128);
  CHECK(t.k_tail_tolerance == 5e-15);
}

TEST_CASE("riemann zeta against partial sums") {
  for (const double s : {2.0, 4.0}) {
    const Enclosure z = riemann_zeta(s);
    const Enclosure oracle = zeta_by_partial_sum(s, 1'000'000);
    CHECK(z.overlaps(oracle));
    CHECK(z.error < 1e-12);
  }
  CHECK(riemann_zeta(2.0).contains(std::numbers::pi * std::numbers::pi / 6.0));
  CHECK(riemann_zeta(4.0).contains(std::pow(std::numbers::pi, 4) / 90.0));
  CHECK(riemann_zeta(2.0).value == doctest::Approx(1.6449340668482264).epsilon(1e-14));
  CHECK(riemann_zeta(4.0).value == doctest::Approx(1.0823232337111382).epsilon(1e-14));
}

TEST_CASE("riemann zeta at large s is dominated by 2^-s") {
  const Enclosure z = riemann_zeta(60.0);
  CHECK(std::abs(z.value - 1.0) < std::ldexp(1.0, -59));
  const Enclosure zm1 = riemann_zeta_minus_one(60.0);
  CHECK(zm1.value == doctest::Approx(std::ldexp(1.0, -60)).epsilon(1e-12));
}

TEST_CASE("riemann zeta domain") {
  CHECK_THROWS_AS(riemann_zeta(1.0), DomainError);
  CHECK_THROWS_AS(riemann_zeta(0.5), DomainError);
  CHECK_THROWS_AS(riemann_zeta(std::nan("")), DomainError);
}

TEST_CASE("prime zeta against sums over primes") {
  const PrimeTable table(1'000'000);
  for (const double s : {2.0, 4.0}) {
    double sum = 0.0;
    for (auto it = table.primes().rbegin(); it != table.primes().rend(); ++it)
      sum += std::pow(static_cast<double>(*it), -s);
    // Primes beyond the table contribute at most sum_{n > 10^6} n^-s.
    const double tail = std::pow(1e6, 1.0 - s) / (s - 1.0);
    const Enclosure oracle{sum + 0.5 * tail, 0.5 * tail + 1e-15};
    CHECK(prime_zeta(s).overlaps(oracle));
  }
  CHECK(prime_zeta(2.0).contains(0.45224742004106549851));
  CHECK(prime_zeta(4.0).contains(0.076993139764246844943));
  CHECK(prime_zeta(2.0).error < 1e-13);
}

TEST_CASE("prime zeta at large s is dominated by 2^-s") {
  const Enclosure p = prime_zeta(40.0);
  const double excess = p.value - std::ldexp(1.0, -40);
  CHECK(excess >= 0.0);
  CHECK(excess <= 2.0 * std::pow(3.0, -40.0));
  CHECK_THROWS_AS(prime_zeta(1.0), DomainError);
}

TEST_CASE("almost prime zeta identities") {
  const Enclosure s0 = almost_prime_zeta(0, 2.5);
  CHECK(s0.value == 1.0);
  CHECK(s0.error == 0.0);

  const Enclosure s1 = almost_prime_zeta(1, 4.0);
  const Enclosure p4 = prime_zeta(4.0);
  CHECK(std::abs(s1.value - p4.value) <= s1.error + p4.error);

  const Enclosure s2 = almost_prime_zeta(2, 4.0);
  CHECK(s2.value == doctest::Approx(0.0049946744686373396).epsilon(1e-12));
  const Enclosure via_squares = 0.5 * (p4 * p4 + prime_zeta(8.0));
  CHECK(s2.overlaps(via_squares));
  CHECK_THROWS_AS(almost_prime_zeta(2, 1.0), DomainError);
}

TEST_CASE("almost prime zeta matches frozen reference values") {
  for (const auto& ref : kReference) {
    const auto table = almost_prime_zeta_table(5, ref.s);
    for (int k = 1; k <= 5; ++k) {
      INFO("s = " << ref.s << ", k = " << k);
      CHECK(table[k].value == doctest::Approx(ref.values[k - 1]).epsilon(1e-12));
      CHECK(table[k].error <= 1e-12 * table[k].value);
    }
  }
}

TEST_CASE("almost prime zeta against direct summation") {
  const PrimeTable table(200000);
  for (const double s : {3.0, 4.0, 6.0}) {
    const auto kernel = almost_prime_zeta_table(5, s);
    for (std::uint32_t k = 1; k <= 5; ++k) {
      INFO("s = " << s << ", k = " << k);
      CHECK(kernel[k].overlaps(almost_prime_by_direct_sum(k, s, table)));
    }
  }
}

TEST_CASE("tail lemma S_{k+1} <= P S_k") {
  for (const double s : {3.0, 4.0}) {
    const auto table = almost_prime_zeta_table(6, s);
    const Enclosure p = prime_zeta(s);
    for (std::uint32_t k = 1; k <= 5; ++k) CHECK(table[k + 1].upper() <= (p * table[k]).lower());
  }
}

TEST_CASE("almost prime zeta decreases in s") {
  for (std::uint32_t k = 1; k <= 6; ++k) {
    double previous = INFINITY;
    for (double s = 1.5; s <= 8.0; s += 0.25) {
      const Enclosure v = almost_prime_zeta(k, s);
      REQUIRE(v.upper() < previous);
      previous = v.lower();
    }
  }
}

TEST_CASE("bohr sum near the published roots") {
  CHECK(std::abs(bohr_sum(1.7267).value - 0.5) < 1e-4);
  CHECK(std::abs(bohr_sum(1.2061).value - 1.0) < 1e-3);
  // 30-digit reference: F(4) = 0.067980940736665178, F(2) = 0.37179660707028866.
  CHECK(bohr_sum(4.0).contains(0.067980940736665178));
  CHECK(bohr_sum(2.0).contains(0.37179660707028866));
}

TEST_CASE("bohr sum at sigma = 4 against two brute-force levels") {
  const PrimeTable table(100000);
  const Enclosure s1 = almost_prime_by_direct_sum(1, 8.0, table);
  const Enclosure s2 = almost_prime_by_direct_sum(2, 8.0, table);
  const double head = std::sqrt(s1.value) + std::sqrt(s2.value);
  // Levels k >= 3 sum to at most sqrt(S_2) q / (1 - q) with q = sqrt(P(8)).
  const double q = std::sqrt(prime_zeta(8.0).upper());
  const double rest = std::sqrt(s2.upper()) * q / (1.0 - q);
  const double sqrt_slack = s1.error / std::sqrt(s1.lower()) + s2.error / std::sqrt(s2.lower());
  const BohrSumDetail f = bohr_sum_detail(4.0);
  CHECK(f.value.value >= head - f.value.error - sqrt_slack);
  CHECK(f.value.value <= head + rest + f.value.error + sqrt_slack);
  CHECK(f.levels >= 3);
  CHECK(f.tail_bound < 1e-14);
}

TEST_CASE("bohr sum precondition") {
  CHECK_THROWS_AS(bohr_sum(0.5), DomainError);
  CHECK_THROWS_AS(bohr_sum(0.6), DomainError);
  CHECK_NOTHROW(bohr_sum(1.0));
}

TEST_CASE("bohr sum is strictly decreasing on [1, 3]") {
  double previous_lower = INFINITY;
  for (double sigma = 1.0; sigma <= 3.0 + 1e-12; sigma += 0.05) {
    const Enclosure f = bohr_sum(sigma);
    REQUIRE(f.upper() < previous_lower);
    previous_lower = f.lower();
  }
}

TEST_CASE("tighter policies stay inside the looser enclosures") {
  const TruncationPolicy loose{16, 16, 1e-8};
  const TruncationPolicy tight = loose.tightened().tightened();
  for (const double s : {1.5, 2.4, 3.5}) {
    CHECK(prime_zeta(s, tight).overlaps(prime_zeta(s, loose)));
    CHECK(prime_zeta(s, tight).error <= prime_zeta(s, loose).error);
    CHECK(almost_prime_zeta(3, s, tight).overlaps(almost_prime_zeta(3, s, loose)));
  }
  for (const double sigma : {1.0, 1.2, 1.7, 2.5}) {
    const Enclosure a = bohr_sum(sigma, loose);
    const Enclosure b = bohr_sum(sigma, tight);
    CHECK(b.overlaps(a));
    CHECK(b.error <= a.error);
  }
}
