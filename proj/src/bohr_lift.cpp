#include "bohr/bohr_lift.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "bohr/abscissa.hpp"
#include "bohr/errors.hpp"

namespace bohr {
namespace {

void require_right_half_plane(Complex s) {
  if (!(s.real() > 0.0)) {
    std::ostringstream msg;
    msg << "evaluation requires Re s > 0, got Re s = " << s.real();
    throw DomainError(msg.str());
  }
}

Complex check_finite(Complex v) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw DomainError("Dirichlet polynomial evaluation overflowed");
  return v;
}

std::vector<std::uint64_t> basis_for_degree(std::uint64_t k, const PrimeTable& table) {
  if (k > table.limit())
    throw OutOfRange("degree " + std::to_string(k) + " exceeds the prime table limit " +
                     std::to_string(table.limit()));
  const auto primes = table.primes_up_to(k);
  return {primes.begin(), primes.end()};
}

// Product of p_i^alpha_i, or max() once it exceeds `cap`.
std::uint64_t capped_product(const std::vector<std::uint64_t>& basis, const std::vector<std::uint32_t>& alpha,
                             std::uint64_t cap) {
  constexpr auto kOver = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (std::uint32_t e = 0; e < alpha[i]; ++e) {
      if (n > cap / basis[i]) return kOver;
      n *= basis[i];
    }
  }
  return n;
}

// Walks every alpha with sum alpha_i w_i <= bound, stopping as soon as one
// falls outside the product form or more than `expected` points are seen.
// Returns the number of points visited, or expected + 1 on failure.
struct IntegerFormWalker {
  const std::vector<std::uint64_t>& basis;
  const std::vector<std::uint64_t>& weights;
  std::uint64_t bound;
  std::uint64_t degree;
  std::size_t expected;
  std::vector<std::uint32_t> alpha;
  std::size_t visited = 0;
  bool failed = false;

  void walk(std::size_t i, std::uint64_t weight_sum, std::uint64_t product) {
    if (failed) return;
    if (i == basis.size()) {
      if (product > degree || ++visited > expected) failed = true;
      return;
    }
    std::uint64_t p = product;
    for (std::uint32_t e = 0;; ++e) {
      const std::uint64_t w = weight_sum + e * weights[i];
      if (w > bound) break;
      alpha[i] = e;
      // Products beyond the degree are carried as degree + 1 so they still fail.
      walk(i + 1, w, p);
      if (failed) return;
      p = (p > degree / basis[i]) ? degree + 1 : p * basis[i];
    }
    alpha[i] = 0;
  }
};

bool integer_form_matches(const LatticeSpec& spec) {
  if (std::any_of(spec.integer_weights.begin(), spec.integer_weights.end(),
                  [](std::uint64_t w) { return w == 0; }))
    return false;
  for (const auto& alpha : spec.points)
    if (!spec.in_integer_form(alpha)) return false;
  IntegerFormWalker walker{spec.prime_basis, spec.integer_weights, spec.integer_bound, spec.degree,
                           spec.points.size(), std::vector<std::uint32_t>(spec.prime_basis.size(), 0)};
  walker.walk(0, 0, 1);
  return !walker.failed && walker.visited == spec.points.size();
}

}  // namespace

DirichletPolynomial DirichletPolynomial::parse(std::istream& in) {
  std::vector<std::pair<std::uint64_t, Complex>> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;

    const auto fail = [&](const std::string& why) {
      throw InvalidArgument("Dirichlet polynomial line " + std::to_string(line_no) + ": " + why);
    };
    std::uint64_t n = 0;
    double re = 0.0;
    double im = 0.0;
    try {
      std::size_t used = 0;
      if (first.front() == '-') fail("index must be a positive integer");
      n = std::stoull(first, &used);
      if (used != first.size()) fail("index must be a positive integer");
    } catch (const std::logic_error&) {
      fail("index must be a positive integer");
    }
    if (n == 0) fail("index must be >= 1");
    if (!(fields >> re >> im)) fail("expected `n re im`");
    std::string extra;
    if (fields >> extra) fail("unexpected trailing field '" + extra + "'");
    entries.emplace_back(n, Complex{re, im});
  }
  if (entries.empty()) throw InvalidArgument("Dirichlet polynomial has no terms");

  std::uint64_t degree = 0;
  for (const auto& [n, c] : entries) degree = std::max(degree, n);
  DirichletPolynomial poly;
  poly.coefficients.assign(degree, Complex{});
  std::vector<bool> seen(degree, false);
  for (const auto& [n, c] : entries) {
    if (seen[n - 1]) throw InvalidArgument("Dirichlet polynomial repeats index " + std::to_string(n));
    seen[n - 1] = true;
    poly.coefficients[n - 1] = c;
  }
  return poly;
}

void DirichletPolynomial::write(std::ostream& out) const {
  const auto old = out.precision(17);
  for (std::uint64_t n = 1; n <= degree(); ++n) {
    const Complex c = coefficients[n - 1];
    if (c != Complex{}) out << n << ' ' << c.real() << ' ' << c.imag() << '\n';
  }
  out.precision(old);
}

MonomialExpansion lift(const DirichletPolynomial& poly, const PrimeTable& table) {
  MonomialExpansion out;
  out.prime_basis = basis_for_degree(poly.degree(), table);
  for (std::uint64_t n = 1; n <= poly.degree(); ++n) {
    const Complex c = poly.coefficients[n - 1];
    if (c == Complex{}) continue;
    MonomialTerm term{c, std::vector<std::uint32_t>(out.prime_basis.size(), 0), n};
    for (const auto& [p, a] : table.factorize(n).entries) {
      const auto it = std::lower_bound(out.prime_basis.begin(), out.prime_basis.end(), p);
      term.exponents[static_cast<std::size_t>(it - out.prime_basis.begin())] = a;
    }
    out.terms.push_back(std::move(term));
  }
  return out;
}

Complex evaluate_dirichlet(const DirichletPolynomial& poly, Complex s) {
  require_right_half_plane(s);
  Complex sum{};
  for (std::uint64_t n = 1; n <= poly.degree(); ++n) {
    const Complex c = poly.coefficients[n - 1];
    if (c != Complex{}) sum += c * std::exp(-s * std::log(static_cast<double>(n)));
  }
  return check_finite(sum);
}

Complex evaluate_monomials(const MonomialExpansion& expansion, Complex s) {
  require_right_half_plane(s);
  const std::size_t m = expansion.prime_basis.size();

  std::vector<std::uint32_t> max_exponent(m, 0);
  for (const auto& term : expansion.terms)
    for (std::size_t i = 0; i < m; ++i) max_exponent[i] = std::max(max_exponent[i], term.exponents[i]);

  // powers[i][e] = z_i^e with z_i = p_i^-s.
  std::vector<std::vector<Complex>> powers(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Complex z = std::exp(-s * std::log(static_cast<double>(expansion.prime_basis[i])));
    powers[i].resize(max_exponent[i] + 1);
    powers[i][0] = 1.0;
    for (std::uint32_t e = 1; e <= max_exponent[i]; ++e) powers[i][e] = powers[i][e - 1] * z;
  }

  Complex sum{};
  for (const auto& term : expansion.terms) {
    Complex monomial = term.coefficient;
    for (std::size_t i = 0; i < m; ++i)
      if (term.exponents[i] != 0) monomial *= powers[i][term.exponents[i]];
    sum += monomial;
  }
  return check_finite(sum);
}

bool LatticeSpec::in_product_form(const std::vector<std::uint32_t>& alpha) const {
  return alpha.size() == prime_basis.size() && capped_product(prime_basis, alpha, degree) <= degree;
}

bool LatticeSpec::in_integer_form(const std::vector<std::uint32_t>& alpha) const {
  if (alpha.size() != integer_weights.size()) return false;
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    sum += alpha[i] * integer_weights[i];
    if (sum > integer_bound) return false;
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> product_lattice_points(std::uint64_t k,
                                                               const std::vector<std::uint64_t>& basis) {
  std::vector<std::pair<std::uint64_t, std::vector<std::uint32_t>>> found;
  std::vector<std::uint32_t> alpha(basis.size(), 0);
  const auto walk = [&](auto&& self, std::size_t i, std::uint64_t product) -> void {
    if (i == basis.size()) {
      found.emplace_back(product, alpha);
      return;
    }
    std::uint64_t p = product;
    for (std::uint32_t e = 0;; ++e) {
      alpha[i] = e;
      self(self, i + 1, p);
      if (p > k / basis[i]) break;
      p *= basis[i];
    }
    alpha[i] = 0;
  };
  walk(walk, 0, 1);
  std::sort(found.begin(), found.end());
  std::vector<std::vector<std::uint32_t>> points;
  points.reserve(found.size());
  for (auto& [n, a] : found) points.push_back(std::move(a));
  return points;
}

LatticeSpec lattice_for_degree(std::uint64_t k, const PrimeTable& table) {
  if (k < 2) throw InvalidArgument("lattice degree must be >= 2, got " + std::to_string(k));
  LatticeSpec spec;
  spec.degree = k;
  spec.prime_basis = basis_for_degree(k, table);
  spec.points = product_lattice_points(k, spec.prime_basis);

  const double log_k = std::log(static_cast<double>(k));
  for (std::uint64_t scale = 1;; ++scale) {
    const double d = static_cast<double>(scale);
    std::vector<std::uint64_t> weights;
    weights.reserve(spec.prime_basis.size());
    std::uint64_t g = std::llround(d * log_k);
    for (const auto p : spec.prime_basis) {
      weights.push_back(static_cast<std::uint64_t>(std::llround(d * std::log(static_cast<double>(p)))));
      g = std::gcd(g, weights.back());
    }
    if (g == 0) continue;
    for (auto& w : weights) w /= g;
    spec.integer_weights = std::move(weights);
    spec.integer_bound = static_cast<std::uint64_t>(std::llround(d * log_k)) / g;
    spec.scale = scale;
    if (integer_form_matches(spec)) return spec;
  }
}

double rogosinski_halfplane_bound(const LatticeSpec& lattice, double tol) {
  if (lattice.integer_weights.size() != lattice.prime_basis.size() || lattice.integer_bound == 0)
    throw InvalidArgument("lattice has no valid integer form");
  if (lattice.integer_bound > std::numeric_limits<std::uint32_t>::max())
    throw OutOfRange("lattice bound too large for a Rogosinski radius index");
  const double r = rogosinski_radius(static_cast<std::uint32_t>(lattice.integer_bound), tol);
  const double log_inv_r = std::log(1.0 / r);
  double sigma = 0.0;
  for (std::size_t i = 0; i < lattice.prime_basis.size(); ++i) {
    const double candidate = static_cast<double>(lattice.integer_weights[i]) * log_inv_r /
                             std::log(static_cast<double>(lattice.prime_basis[i]));
    sigma = std::max(sigma, candidate);
  }
  return sigma;
}

double rogosinski_halfplane_bound(std::uint64_t k, const PrimeTable& table, double tol) {
  return rogosinski_halfplane_bound(lattice_for_degree(k, table), tol);
}

}  // namespace bohr
