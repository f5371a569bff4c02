#include "bohr/oracles.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "bohr/enclosure.hpp"
#include "bohr/errors.hpp"

namespace bohr {
namespace {

constexpr std::size_t kBlock = 4096;

double pairwise_sum(std::vector<double> values) {
  if (values.empty()) return 0.0;
  while (values.size() > 1) {
    std::vector<double> next((values.size() + 1) / 2);
    for (std::size_t i = 0; i < values.size() / 2; ++i) next[i] = values[2 * i] + values[2 * i + 1];
    if (values.size() % 2 == 1) next.back() = values.back();
    values = std::move(next);
  }
  return values.front();
}

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

OracleReport direct_sum_oracle(std::uint32_t k, double s, std::uint64_t cutoff, const PrimeTable& table) {
  if (k == 0) throw InvalidArgument("direct_sum_oracle requires k >= 1");
  if (!(s > 1.0)) throw DomainError("direct_sum_oracle requires s > 1");
  if (cutoff == 0) throw InvalidArgument("direct_sum_oracle requires N >= 1");
  if (cutoff > table.limit())
    throw OutOfRange("oracle cutoff N = " + std::to_string(cutoff) + " exceeds the prime table limit " +
                     std::to_string(table.limit()));

  OracleReport out;
  out.k = k;
  out.s = s;
  out.cutoff = cutoff;

  std::vector<double> blocks;
  double block = 0.0;
  for (std::uint64_t n = 2; n <= cutoff; ++n) {
    if (table.omega(n) == k) {
      block += std::pow(static_cast<double>(n), -s);
      ++out.terms_used;
    }
    if (n % kBlock == 0) {
      blocks.push_back(block);
      block = 0.0;
    }
  }
  blocks.push_back(block);
  out.value = pairwise_sum(std::move(blocks));

  const double big_n = static_cast<double>(cutoff);
  const double integral_tail = std::pow(big_n, 1.0 - s) / (s - 1.0);
  const double rounding = kRoundingSlack * (static_cast<double>(kBlock) + 64.0) * out.value;
  out.tail_bound = integral_tail + rounding;
  return out;
}

bool lattice_enumeration_check(const LatticeSpec& spec) {
  const std::size_t m = spec.prime_basis.size();
  if (spec.integer_weights.size() != m) return false;
  for (const auto w : spec.integer_weights)
    if (w == 0) return false;

  const auto product_points = product_lattice_points(spec.degree, spec.prime_basis);
  if (!spec.points.empty() && spec.points != product_points) return false;
  for (const auto& alpha : product_points)
    if (!spec.in_integer_form(alpha)) return false;

  // Every alpha admitted by the integer inequality must have product <= degree.
  std::vector<std::uint32_t> alpha(m, 0);
  bool ok = true;
  const auto walk = [&](auto&& self, std::size_t i, std::uint64_t weight_sum) -> void {
    if (!ok) return;
    if (i == m) {
      ok = spec.in_product_form(alpha);
      return;
    }
    for (std::uint32_t e = 0; weight_sum + e * spec.integer_weights[i] <= spec.integer_bound && ok; ++e) {
      alpha[i] = e;
      self(self, i + 1, weight_sum + e * spec.integer_weights[i]);
    }
    alpha[i] = 0;
  };
  walk(walk, 0, 0);
  return ok;
}

FixtureRecord FixtureRecord::from(const OracleReport& report) {
  return {"direct_sum_oracle", report.k, report.s, report.cutoff, report.value, report.tail_bound};
}

bool FixtureRecord::same_parameters(const FixtureRecord& other) const noexcept {
  return operation == other.operation && k == other.k && s == other.s && cutoff == other.cutoff;
}

FixtureFile FixtureFile::parse(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  FixtureFile file;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    const auto fail = [&](const std::string& why) {
      throw InvalidArgument("fixture line " + std::to_string(line_no) + ": " + why);
    };
    if (!header_seen) {
      std::string magic;
      int version = 0;
      if (!(fields >> magic >> version) || magic != "bohr-oracle-fixtures") fail("missing fixture header");
      if (version != kVersion) fail("unsupported fixture version " + std::to_string(version));
      header_seen = true;
      continue;
    }
    FixtureRecord record;
    if (!(fields >> record.operation)) continue;
    if (record.operation != "direct_sum_oracle") fail("unknown operation '" + record.operation + "'");
    int seen = 0;
    std::string token;
    while (fields >> token) {
      const auto eq = token.find('=');
      if (eq == std::string::npos) fail("expected key=value, got '" + token + "'");
      const std::string key = token.substr(0, eq);
      const std::string value = token.substr(eq + 1);
      try {
        if (key == "k") record.k = static_cast<std::uint32_t>(std::stoul(value));
        else if (key == "s") record.s = std::stod(value);
        else if (key == "N") record.cutoff = std::stoull(value);
        else if (key == "value") record.value = std::stod(value);
        else if (key == "tail_bound") record.tail_bound = std::stod(value);
        else fail("unknown key '" + key + "'");
      } catch (const std::logic_error&) {
        fail("malformed value for '" + key + "'");
      }
      ++seen;
    }
    if (seen != 5) fail("expected k, s, N, value and tail_bound");
    file.records_.push_back(record);
  }
  if (!header_seen) throw InvalidArgument("fixture file is empty");
  return file;
}

FixtureFile FixtureFile::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open fixture file " + path.string());
  return parse(in);
}

void FixtureFile::write(std::ostream& out) const {
  out << "bohr-oracle-fixtures " << kVersion << '\n';
  for (const auto& r : records_) {
    out << r.operation << " k=" << r.k << " s=" << format_number(r.s) << " N=" << r.cutoff
        << " value=" << format_number(r.value) << " tail_bound=" << format_number(r.tail_bound) << '\n';
  }
}

void FixtureFile::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write fixture file " + path.string());
  write(out);
}

std::optional<FixtureRecord> FixtureFile::find(const FixtureRecord& key) const {
  for (const auto& r : records_)
    if (r.same_parameters(key)) return r;
  return std::nullopt;
}

void FixtureFile::upsert(const FixtureRecord& record) {
  for (auto& r : records_) {
    if (r.same_parameters(record)) {
      r = record;
      return;
    }
  }
  records_.push_back(record);
}

}  // namespace bohr
