#include "bohr/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "bohr/bohr_lift.hpp"
#include "bohr/oracles.hpp"
#include "bohr/output.hpp"
#include "bohr/primes.hpp"

namespace bohr {
namespace {

using Clock = std::chrono::steady_clock;

constexpr double kRootWindow = 2e-3;
constexpr double kBohrRuntimeLimit = 10.0;
constexpr double kOracleRuntimeLimit = 60.0;
constexpr std::uint64_t kOracleCutoff = 1'000'000;
constexpr double kBoundSlack = 1e-6;
constexpr double kRadiusResidual = 1e-12;
constexpr double kLiftRelTol = 1e-12;
constexpr int kLiftTrials = 100;
constexpr std::uint64_t kLiftMaxDegree = 200;
constexpr std::uint64_t kLatticeMaxK = 100;
constexpr std::uint64_t kHalfplaneMaxK = 50;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

class Detail {
 public:
  explicit Detail(int digits) : digits_(digits) {}
  Detail& operator()(const std::string& key, double v) {
    sep();
    os_ << key << '=' << format_number(v, digits_);
    return *this;
  }
  Detail& operator()(const std::string& text) {
    sep();
    os_ << text;
    return *this;
  }
  std::string str() const { return os_.str(); }

 private:
  void sep() {
    if (!first_) os_ << ", ";
    first_ = false;
  }
  std::ostringstream os_;
  int digits_;
  bool first_ = true;
};

}  // namespace

bool AcceptanceReport::all_passed() const noexcept {
  return std::all_of(criteria.begin(), criteria.end(), [](const auto& c) { return c.passed; });
}

AcceptanceReport run_acceptance(const TruncationPolicy& policy, double tol, int digits) {
  AcceptanceReport report;
  const PrimeTable table(kOracleCutoff);

  // 1. Root of F = 1/2.
  const auto t_bohr = Clock::now();
  const AbscissaResult bohr = solve_abscissa(kBohrTarget, policy, tol);
  const double bohr_seconds = seconds_since(t_bohr);
  {
    const bool near = std::abs(bohr.root - kPublishedBohrRoot) <= kRootWindow;
    const bool certified = bohr.residual.contains(0.0);
    const bool fast = bohr_seconds < kBohrRuntimeLimit;
    report.criteria.push_back({1, "Bohr equation root F(sigma) = 1/2 near 1.7267", near && certified && fast,
                               Detail(digits)("root", bohr.root)("|root - 1.7267|",
                                                                 std::abs(bohr.root - kPublishedBohrRoot))(
                                   certified ? "residual contains 0" : "residual excludes 0")(
                                   fast ? "runtime < 10 s" : "runtime >= 10 s")
                                   .str()});
  }

  // 2. Root of F = 1.
  const AbscissaResult mixed = solve_abscissa(kMixedTarget, policy, tol);
  {
    const bool near = std::abs(mixed.root - kPublishedMixedRoot) <= kRootWindow;
    const bool certified = mixed.residual.contains(0.0);
    report.criteria.push_back({2, "Mixed equation root F(sigma) = 1 near 1.2061", near && certified,
                               Detail(digits)("root", mixed.root)("|root - 1.2061|",
                                                                  std::abs(mixed.root - kPublishedMixedRoot))(
                                   certified ? "residual contains 0" : "residual excludes 0")
                                   .str()});
  }

  // 3. Lower-bound constants and the window for the Bohr root.
  {
    const double half = radius_to_abscissa(0.5);
    const double third = radius_to_abscissa(1.0 / 3.0);
    const double log_ratio = std::log(3.0) / std::log(2.0);
    const bool ok = std::abs(half - 1.0) <= 1e-12 && std::abs(third - 1.5849625007) <= 1e-9 &&
                    bohr.root >= log_ratio && bohr.root < cited::kBohrAbscissaUpper;
    report.criteria.push_back({3, "Lower-bound abscissas and window [log3/log2, 1.8154)", ok,
                               Detail(digits)("sigma(1/2)", half)("sigma(1/3)", third)("root", bohr.root).str()});
  }

  // 4. Kernels against direct summation.
  {
    const auto start = Clock::now();
    bool ok = true;
    double worst_ratio = 0.0;
    std::string failures;
    for (const double s : {3.0, 4.0, 6.0}) {
      const auto kernel = almost_prime_zeta_table(5, s, policy);
      for (std::uint32_t k = 1; k <= 5; ++k) {
        const OracleReport oracle = direct_sum_oracle(k, s, kOracleCutoff, table);
        const double diff = std::abs(kernel[k].value - oracle.value);
        const double allowed = kernel[k].error + oracle.tail_bound;
        worst_ratio = std::max(worst_ratio, diff / allowed);
        if (diff > allowed) {
          ok = false;
          failures += " (k=" + std::to_string(k) + ", s=" + format_number(s, 3) + ")";
        }
      }
    }
    const bool fast = seconds_since(start) < kOracleRuntimeLimit;
    Detail d(digits);
    d("max |kernel - oracle| / bound", worst_ratio)(fast ? "runtime < 60 s" : "runtime >= 60 s");
    if (!failures.empty()) d("failed:" + failures);
    report.criteria.push_back({4, "Almost-prime zeta kernels agree with direct sums", ok && fast, d.str()});
  }

  // 5. Bound functionals on a grid.
  {
    double worst_modulus = 0.0;
    double worst_squared = 0.0;
    const Enclosure f_bohr = bohr_sum(bohr.root, policy);
    const Enclosure f_mixed = bohr_sum(mixed.root, policy);
    for (int i = 0; i <= 1000; ++i) {
      const double a = i / 1000.0;
      worst_modulus = std::max(worst_modulus, bohr_bound_modulus(a, f_bohr).upper());
      worst_squared = std::max(worst_squared, bohr_bound_squared(a, f_mixed).upper());
    }
    const bool ok = worst_modulus <= 1.0 + kBoundSlack && worst_squared <= 1.0 + kBoundSlack;
    report.criteria.push_back({5, "Bound functionals stay <= 1 at the roots", ok,
                               Detail(digits)("max modulus bound", worst_modulus)("max squared bound", worst_squared)
                                   .str()});
  }

  // 6. Rogosinski radii.
  {
    bool ok = rogosinski_radius(1) == 0.5 && rogosinski_radius(2) == std::sqrt(3.0) / 8.0;
    double worst_residual = 0.0;
    double previous = 0.0;
    for (std::uint32_t l = 3; l <= 20; ++l) {
      const double r = rogosinski_radius(l);
      const double residual = std::abs(1.0 - r - 2.0 * std::pow(r, l + 1.0));
      worst_residual = std::max(worst_residual, residual);
      if (residual >= kRadiusResidual || r <= previous) ok = false;
      previous = r;
    }
    report.criteria.push_back({6, "Rogosinski radii: closed forms, residuals, monotonicity", ok,
                               Detail(digits)("r_1", rogosinski_radius(1))("r_2", rogosinski_radius(2))(
                                   "r_3", rogosinski_radius(3))("r_20", rogosinski_radius(20))(
                                   "max residual l=3..20", worst_residual)
                                   .str()});
  }

  // 7. Lattice exactness.
  {
    bool ok = true;
    std::string failures;
    for (std::uint64_t k = 2; k <= kLatticeMaxK; ++k) {
      const LatticeSpec spec = lattice_for_degree(k, table);
      std::vector<std::uint32_t> equality(spec.prime_basis.size(), 0);
      for (const auto& [p, a] : table.factorize(k).entries) {
        const auto it = std::find(spec.prime_basis.begin(), spec.prime_basis.end(), p);
        equality[static_cast<std::size_t>(it - spec.prime_basis.begin())] = a;
      }
      if (!lattice_enumeration_check(spec) || !spec.in_product_form(equality) || !spec.in_integer_form(equality)) {
        ok = false;
        failures += " " + std::to_string(k);
      }
    }
    const LatticeSpec four = lattice_for_degree(4, table);
    const std::vector<std::vector<std::uint32_t>> expected{{0, 0}, {1, 0}, {0, 1}, {2, 0}};
    const bool four_ok = four.points == expected;
    Detail d(digits);
    d("k = 2..100 checked")(four_ok ? "k=4 points {(0,0),(1,0),(0,1),(2,0)}" : "k=4 points differ");
    if (!failures.empty()) d("failed k:" + failures);
    report.criteria.push_back({7, "Lattice integer form matches product form", ok && four_ok, d.str()});
  }

  // 8. Lift round trip.
  {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<std::uint64_t> degree_dist(1, kLiftMaxDegree);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> re_s(0.5, 3.0);
    std::uniform_real_distribution<double> im_s(-50.0, 50.0);
    double worst = 0.0;
    for (int trial = 0; trial < kLiftTrials; ++trial) {
      DirichletPolynomial poly;
      poly.coefficients.resize(degree_dist(rng));
      for (auto& c : poly.coefficients) c = std::polar(unit(rng), 2.0 * M_PI * unit(rng));
      const Complex s{re_s(rng), im_s(rng)};
      const Complex direct = evaluate_dirichlet(poly, s);
      const Complex lifted = evaluate_monomials(lift(poly, table), s);
      worst = std::max(worst, std::abs(direct - lifted) / std::abs(direct));
    }
    report.criteria.push_back({8, "Bohr lift round trip on 100 random polynomials", worst < kLiftRelTol,
                               Detail(digits)("max relative deviation", worst).str()});
  }

  // 9. Ordering of the certificates.
  {
    double smallest = INFINITY;
    std::string below;
    for (std::uint64_t k = 2; k <= kHalfplaneMaxK; ++k) {
      const double sigma = rogosinski_halfplane_bound(k, table, kDefaultRadiusTol);
      smallest = std::min(smallest, sigma);
      if (!(sigma >= 1.0) || !std::isfinite(sigma)) below += " " + std::to_string(k);
    }
    const bool ok = below.empty() && bohr.root > 1.0;
    Detail d(digits);
    d("min half-plane bound k=2..50", smallest)("Bohr root", bohr.root);
    if (!below.empty()) d("bound < 1 at k:" + below);
    report.criteria.push_back({9, "Half-plane bounds >= 1 and Bohr root > 1", ok, d.str()});
  }

  return report;
}

}  // namespace bohr
