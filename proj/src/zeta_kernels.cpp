#include "bohr/zeta_kernels.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "bohr/errors.hpp"

namespace bohr {
namespace {

constexpr std::uint32_t kMaxBohrLevels = 100000;

void require_convergent(double s, const char* what) {
  if (!(s > 1.0)) {
    std::ostringstream msg;
    msg << what << " requires s > 1, got s = " << s;
    throw DomainError(msg.str());
  }
}

int moebius(std::uint32_t m) {
  int sign = 1;
  for (std::uint32_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return 0;
    sign = -sign;
  }
  return m > 1 ? -sign : sign;
}

}  // namespace

void TruncationPolicy::validate() const {
  if (zeta_terms < 2) throw InvalidArgument("zeta_terms must be >= 2");
  if (moebius_terms < 1) throw InvalidArgument("moebius_terms must be >= 1");
  if (!(k_tail_tolerance > 0.0 && k_tail_tolerance < 1.0))
    throw InvalidArgument("k_tail_tolerance must lie in (0, 1)");
}

TruncationPolicy TruncationPolicy::tightened() const {
  return {zeta_terms * 2, moebius_terms * 2, k_tail_tolerance * 0.5};
}

Enclosure riemann_zeta_minus_one(double s, const TruncationPolicy& policy) {
  require_convergent(s, "riemann_zeta");
  policy.validate();
  const auto n_terms = policy.zeta_terms;
  const double big_n = n_terms;

  // sum_{n=2}^{N-1} n^-s, smallest terms first.
  double direct = 0.0;
  for (std::uint32_t n = n_terms - 1; n >= 2; --n) direct += std::pow(static_cast<double>(n), -s);

  // Euler-Maclaurin at N: N^{1-s}/(s-1) + N^{-s}/2 + B2/2! s N^{-s-1}
  // + B4/4! s(s+1)(s+2) N^{-s-3}. For real s the remainder is bounded by
  // the first omitted (B6) term.
  const double n_pow = std::pow(big_n, -s);
  const double tail = big_n * n_pow / (s - 1.0) + 0.5 * n_pow + (1.0 / 12.0) * s * n_pow / big_n -
                      (1.0 / 720.0) * s * (s + 1.0) * (s + 2.0) * n_pow / (big_n * big_n * big_n);
  const double remainder = (1.0 / 30240.0) * s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * n_pow /
                           std::pow(big_n, 5.0);

  const double value = direct + tail;
  const double rounding = kRoundingSlack * (static_cast<double>(n_terms) + 8.0) * std::abs(value);
  return {value, remainder + rounding};
}

Enclosure riemann_zeta(double s, const TruncationPolicy& policy) {
  return Enclosure::exact(1.0) + riemann_zeta_minus_one(s, policy);
}

Enclosure prime_zeta(double s, const TruncationPolicy& policy) {
  require_convergent(s, "prime_zeta");
  policy.validate();
  const auto big_m = policy.moebius_terms;

  // Largest terms come first; accumulate from the far end for accuracy.
  Enclosure sum;
  for (std::uint32_t m = big_m; m >= 1; --m) {
    const int mu = moebius(m);
    if (mu == 0) continue;
    const Enclosure log_zeta = log1p(riemann_zeta_minus_one(m * s, policy));
    sum += (static_cast<double>(mu) / m) * log_zeta;
  }

  // |sum_{m>M} mu(m)/m log zeta(ms)| <= sum_{m>M} (zeta(ms) - 1)/m and
  // zeta(t) - 1 <= 2^-t (1 + 2/(t-1)) <= 3 * 2^-t for t >= 2.
  const double first_omitted = std::pow(2.0, -static_cast<double>(big_m + 1) * s);
  const double truncation = 3.0 * first_omitted / ((big_m + 1.0) * (1.0 - std::pow(2.0, -s)));
  sum.error += truncation;
  return sum;
}

std::vector<Enclosure> almost_prime_zeta_table(std::uint32_t kmax, double s, const TruncationPolicy& policy) {
  require_convergent(s, "almost_prime_zeta");
  std::vector<Enclosure> power_sums(kmax + 1);
  for (std::uint32_t j = 1; j <= kmax; ++j) power_sums[j] = prime_zeta(j * s, policy);

  // Newton's identity for complete homogeneous symmetric functions in the
  // variables p^-s: k S_k = sum_{j=1}^k P(js) S_{k-j}.
  std::vector<Enclosure> table(kmax + 1);
  table[0] = Enclosure::exact(1.0);
  for (std::uint32_t k = 1; k <= kmax; ++k) {
    Enclosure acc;
    for (std::uint32_t j = k; j >= 1; --j) acc += power_sums[j] * table[k - j];
    table[k] = (1.0 / k) * acc;
  }
  return table;
}

Enclosure almost_prime_zeta(std::uint32_t k, double s, const TruncationPolicy& policy) {
  return almost_prime_zeta_table(k, s, policy)[k];
}

BohrSumDetail bohr_sum_detail(double sigma, const TruncationPolicy& policy) {
  const double s = 2.0 * sigma;
  if (!(s > 1.0)) {
    std::ostringstream msg;
    msg << "bohr_sum requires 2*sigma > 1, got sigma = " << sigma;
    throw DomainError(msg.str());
  }
  const Enclosure p1 = prime_zeta(s, policy);
  if (!(p1.upper() < 1.0)) {
    std::ostringstream msg;
    msg << "bohr_sum requires P(2*sigma) < 1 for its tail bound; upper edge of P(" << s
        << ") is " << p1.upper();
    throw DomainError(msg.str());
  }
  const double q = std::sqrt(p1.upper());

  std::vector<Enclosure> power_sums{Enclosure{}, p1};
  std::vector<Enclosure> levels{Enclosure::exact(1.0)};
  BohrSumDetail out;
  out.ratio = q;

  for (std::uint32_t k = 1; k <= kMaxBohrLevels; ++k) {
    if (power_sums.size() <= k) power_sums.push_back(prime_zeta(k * s, policy));
    Enclosure acc;
    for (std::uint32_t j = k; j >= 1; --j) acc += power_sums[j] * levels[k - j];
    levels.push_back((1.0 / k) * acc);

    const Enclosure root = sqrt(levels[k]);
    out.value += root;
    const double tail = root.upper() * q / (1.0 - q);
    if (tail < policy.k_tail_tolerance) {
      out.levels = k;
      out.tail_bound = tail;
      out.value.error += tail;
      return out;
    }
  }
  throw PrecisionError("bohr_sum did not reach the tail tolerance within " + std::to_string(kMaxBohrLevels) +
                       " levels; loosen k_tail_tolerance");
}

Enclosure bohr_sum(double sigma, const TruncationPolicy& policy) { return bohr_sum_detail(sigma, policy).value; }

}  // namespace bohr
