#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bohr/bohr_lift.hpp"
#include "bohr/primes.hpp"

namespace bohr {

/// Result of a brute-force evaluation.
struct OracleReport {
  double value = 0.0;
  /// Bound on everything the finite sum leaves out, plus summation rounding.
  double tail_bound = 0.0;
  std::uint64_t terms_used = 0;
  std::uint32_t k = 0;
  double s = 0.0;
  std::uint64_t cutoff = 0;
};

/// sum_{n <= N, Omega(n) = k} n^-s by direct summation. The tail bound
/// N^(1-s)/(s-1) ignores the Omega constraint, so it over-covers.
/// Summation uses fixed blocks combined pairwise, so the result does not
/// depend on how the work is split.
OracleReport direct_sum_oracle(std::uint32_t k, double s, std::uint64_t cutoff, const PrimeTable& table);

/// Re-derives the product-form point set from the lattice's basis and degree
/// and checks that integer-form membership agrees with it on all of N_0^m:
/// every product point satisfies the integer inequality, and an exhaustive
/// walk of the integer inequality (pruned on its weights) meets no point
/// with product > degree. Zero weights make the integer form infinite and fail.
bool lattice_enumeration_check(const LatticeSpec& spec);

/// One line of the regression fixture file.
struct FixtureRecord {
  std::string operation;
  std::uint32_t k = 0;
  double s = 0.0;
  std::uint64_t cutoff = 0;
  double value = 0.0;
  double tail_bound = 0.0;

  static FixtureRecord from(const OracleReport& report);
  bool same_parameters(const FixtureRecord& other) const noexcept;
};

/// Versioned text file of oracle records:
///
///     bohr-oracle-fixtures 1
///     direct_sum_oracle k=2 s=4 N=1000000 value=0.0049946744686373... tail_bound=...
///
/// Numbers are written with 17 significant digits so they round-trip.
class FixtureFile {
 public:
  static constexpr int kVersion = 1;
  static constexpr const char* kFileName = "oracle_fixtures.txt";

  static FixtureFile parse(std::istream& in);
  static FixtureFile load(const std::filesystem::path& path);
  void write(std::ostream& out) const;
  void save(const std::filesystem::path& path) const;

  std::optional<FixtureRecord> find(const FixtureRecord& key) const;
  /// Replaces a record with the same parameters or appends a new one.
  void upsert(const FixtureRecord& record);

  const std::vector<FixtureRecord>& records() const noexcept { return records_; }

 private:
  std::vector<FixtureRecord> records_;
};

}  // namespace bohr
