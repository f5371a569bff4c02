#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "bohr/primes.hpp"

namespace bohr {

using Complex = std::complex<double>;

/// Dirichlet polynomial sum_{n=1}^k a_n n^-s. coefficients[n - 1] holds a_n;
/// the declared degree k is the vector length even if a_k is zero.
struct DirichletPolynomial {
  std::vector<Complex> coefficients;

  std::uint64_t degree() const noexcept { return coefficients.size(); }
  Complex coefficient(std::uint64_t n) const { return coefficients.at(n - 1); }

  /// Text format: one `n re im` line per nonzero term, `#` starts a comment,
  /// blank lines ignored. Degree is the largest n present. Throws
  /// InvalidArgument with the offending line number on malformed input.
  static DirichletPolynomial parse(std::istream& in);
  void write(std::ostream& out) const;
};

struct MonomialTerm {
  Complex coefficient;
  /// Dense exponents over MonomialExpansion::prime_basis.
  std::vector<std::uint32_t> exponents;
  /// The integer n = prod p_i^exponents[i] this term came from.
  std::uint64_t index = 0;
};

/// Polynomial in the prime coordinates z_i = p_i^-s.
struct MonomialExpansion {
  /// All primes <= degree, ascending.
  std::vector<std::uint64_t> prime_basis;
  std::vector<MonomialTerm> terms;
};

/// One term per nonzero a_n with exponents from the factorisation of n.
/// Throws OutOfRange if the degree exceeds the table limit.
MonomialExpansion lift(const DirichletPolynomial& poly, const PrimeTable& table);

/// Direct evaluation sum a_n exp(-s log n). Requires Re s > 0.
Complex evaluate_dirichlet(const DirichletPolynomial& poly, Complex s);

/// Substitutes z_i = p_i^-s into the monomials. Requires Re s > 0.
Complex evaluate_monomials(const MonomialExpansion& expansion, Complex s);

/// Finite exponent lattice of degree k in two equivalent descriptions:
/// the multiplicative one prod p_i^a_i <= k and the integer one
/// sum a_i w_i <= bound.
struct LatticeSpec {
  std::vector<std::uint64_t> prime_basis;
  std::uint64_t degree = 0;
  std::vector<std::uint64_t> integer_weights;
  std::uint64_t integer_bound = 0;
  /// Scale D at which the integer form was found (0 if supplied externally).
  std::uint64_t scale = 0;
  /// Every exponent vector with prod p_i^a_i <= k, ordered by that product.
  std::vector<std::vector<std::uint32_t>> points;

  bool in_product_form(const std::vector<std::uint32_t>& alpha) const;
  bool in_integer_form(const std::vector<std::uint32_t>& alpha) const;
};

/// Builds the point set by exact integer products, then searches D = 1, 2, ...
/// for w_i = round(D log p_i), bound = round(D log k) (divided by their gcd)
/// until the integer form describes exactly the same points.
LatticeSpec lattice_for_degree(std::uint64_t k, const PrimeTable& table);

/// All exponent vectors over primes <= k whose product is <= k, ordered by
/// that product. Uses integer arithmetic only.
std::vector<std::vector<std::uint32_t>> product_lattice_points(std::uint64_t k,
                                                               const std::vector<std::uint64_t>& basis);

/// Half-plane abscissa sigma' = max_i w_i log(1/r_m) / log p_i with m the
/// integer bound and r_m the Rogosinski radius: at sigma' each coordinate
/// p_i^-sigma' lies within r_m^(w_i).
double rogosinski_halfplane_bound(const LatticeSpec& lattice, double tol);
double rogosinski_halfplane_bound(std::uint64_t k, const PrimeTable& table, double tol);

}  // namespace bohr
