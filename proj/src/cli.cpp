#include "bohr/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bohr/abscissa.hpp"
#include "bohr/acceptance.hpp"
#include "bohr/bohr_lift.hpp"
#include "bohr/errors.hpp"
#include "bohr/oracles.hpp"
#include "bohr/output.hpp"
#include "bohr/primes.hpp"
#include "bohr/zeta_kernels.hpp"

namespace bohr::cli {
namespace {

constexpr const char* kCiteBohr = "isometric Bohr abscissa upper bound: root of F(sigma) = 1/2";
constexpr const char* kCiteMixed = "mixed |a1|^2 inequality: root of F(sigma) = 1";
constexpr const char* kCiteRogosinski = "Rogosinski radii r_l of lattice partial sums";
constexpr const char* kCiteLattice = "exponent lattice rationalisation of a Dirichlet polynomial";
constexpr const char* kCiteLift = "Bohr lift z_i = p_i^-s";
constexpr const char* kCitePrior = "earlier literature (quoted, not recomputed)";

struct Globals {
  std::string format = "text";
  int precision = 10;
  std::uint64_t prime_limit = 1'000'000;
  double tol = 0.0;
  CLI::Option* tol_option = nullptr;
  bool quiet = false;
  TruncationPolicy policy;

  double tol_or(double fallback) const { return (tol_option && *tol_option) ? tol : fallback; }
  Json policy_json() const {
    return {{"zeta_terms", policy.zeta_terms},
            {"moebius_terms", policy.moebius_terms},
            {"k_tail_tolerance", policy.k_tail_tolerance}};
  }
};

Json enclosure_json(const Enclosure& e) { return {{"value", e.value}, {"error", e.error}}; }

Json merge(Json a, const Json& b) {
  for (const auto& [k, v] : b.items()) a[k] = v;
  return a;
}

struct Sweep {
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.0;
};

Sweep parse_sweep(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw CLI::ValidationError("--sweep", "expected lo:hi:step, got '" + text + "'");
    }
  }
  if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0])
    throw CLI::ValidationError("--sweep", "expected lo:hi:step with lo <= hi and step > 0, got '" + text + "'");
  return {parts[0], parts[1], parts[2]};
}

std::vector<OutputRecord> cmd_abscissa(const Globals& g, double target, const std::string& paper) {
  std::vector<std::string> citations;
  std::optional<double> published;
  if (paper == "bohr") {
    target = kBohrTarget;
    citations.push_back(kCiteBohr);
    published = kPublishedBohrRoot;
  } else if (paper == "mixed") {
    target = kMixedTarget;
    citations.push_back(kCiteMixed);
    published = kPublishedMixedRoot;
  }
  const double tol = g.tol_or(kDefaultSolverTol);
  const AbscissaResult r = solve_abscissa(target, g.policy, tol);

  OutputRecord rec;
  rec.command = "abscissa";
  rec.parameters = merge({{"target", target}, {"tol", tol}}, g.policy_json());
  if (!paper.empty()) rec.parameters["paper"] = paper;
  rec.value = {{"root", r.root},
               {"bracket", {r.bracket.lo, r.bracket.hi}},
               {"residual", enclosure_json(r.residual)},
               {"residual_at_lo", enclosure_json(r.residual_at_lo)},
               {"residual_at_hi", enclosure_json(r.residual_at_hi)},
               {"iterations", r.iterations}};
  if (published) rec.value["published_bound"] = *published;
  rec.error_bound = 0.5 * r.bracket.width();
  rec.citations = citations;

  std::vector<OutputRecord> out{rec};
  if (paper == "bohr") {
    const auto cited = [&](const std::string& name, double v) {
      OutputRecord c;
      c.command = "abscissa";
      c.parameters = {{"constant", name}};
      c.value = v;
      c.citations = {kCitePrior};
      c.provenance = Provenance::Cited;
      out.push_back(c);
    };
    cited("lower bound log3/log2", std::log(3.0) / std::log(2.0));
    cited("upper bound", cited::kBohrAbscissaUpper);
    cited("refined upper bound", cited::kBohrAbscissaRefined);
  }
  return out;
}

OutputRecord scalar_record(const std::string& command, Json params, const Enclosure& e, const char* citation) {
  OutputRecord rec;
  rec.command = command;
  rec.parameters = std::move(params);
  rec.value = e.value;
  rec.error_bound = e.error;
  if (citation) rec.citations = {citation};
  return rec;
}

Json lattice_json(const LatticeSpec& spec, bool verified) {
  return {{"degree", spec.degree},
          {"prime_basis", spec.prime_basis},
          {"points", spec.points},
          {"integer_weights", spec.integer_weights},
          {"integer_bound", spec.integer_bound},
          {"scale", spec.scale},
          {"verified", verified}};
}

int write_sweep(const Globals& g, const Sweep& sweep, std::ostream& out) {
  const auto count = static_cast<std::uint64_t>(std::floor((sweep.hi - sweep.lo) / sweep.step + 1e-9)) + 1;
  std::vector<std::pair<double, Enclosure>> rows;
  for (std::uint64_t i = 0; i < count; ++i) {
    const double sigma = sweep.lo + static_cast<double>(i) * sweep.step;
    rows.emplace_back(sigma, bohr_sum(sigma, g.policy));
  }
  if (parse_output_format(g.format) == OutputFormat::Json) {
    std::vector<OutputRecord> records;
    for (const auto& [sigma, e] : rows)
      records.push_back(scalar_record("bohr-sum", merge({{"sigma", sigma}}, g.policy_json()), e, nullptr));
    write_records(out, records, OutputFormat::Json, g.precision);
  } else {
    out << "sigma,value,error\n";
    for (const auto& [sigma, e] : rows)
      out << format_number(sigma, g.precision) << ',' << format_number(e.value, g.precision) << ','
          << format_number(e.error, g.precision) << '\n';
  }
  return kSuccess;
}

OutputRecord cmd_oracle(const Globals& g, std::uint32_t k, double s, std::uint64_t cutoff, std::ostream& err) {
  std::optional<std::filesystem::path> fixture_path;
  if (const char* dir = std::getenv(kFixtureDirEnv); dir && *dir)
    fixture_path = std::filesystem::path(dir) / FixtureFile::kFileName;

  const FixtureRecord key{"direct_sum_oracle", k, s, cutoff, 0.0, 0.0};
  FixtureFile fixtures;
  bool have_file = false;
  if (fixture_path && std::filesystem::exists(*fixture_path)) {
    fixtures = FixtureFile::load(*fixture_path);
    have_file = true;
  }

  OutputRecord rec;
  rec.command = "oracle direct-sum";
  rec.parameters = {{"k", k}, {"s", s}, {"N", cutoff}, {"prime_limit", g.prime_limit}};
  rec.citations = {"brute-force sum over n with Omega(n) = k"};

  if (const auto hit = have_file ? fixtures.find(key) : std::nullopt) {
    if (!g.quiet) err << "using cached oracle value from " << fixture_path->string() << '\n';
    rec.value = {{"value", hit->value}, {"tail_bound", hit->tail_bound}, {"source", "fixture"}};
    rec.error_bound = hit->tail_bound;
    return rec;
  }

  const PrimeTable table(g.prime_limit);
  const OracleReport report = direct_sum_oracle(k, s, cutoff, table);
  rec.value = {{"value", report.value},
               {"tail_bound", report.tail_bound},
               {"terms_used", report.terms_used},
               {"source", "computed"}};
  rec.error_bound = report.tail_bound;
  if (fixture_path) {
    fixtures.upsert(FixtureRecord::from(report));
    fixtures.save(*fixture_path);
    if (!g.quiet) err << "stored oracle value in " << fixture_path->string() << '\n';
  }
  return rec;
}

std::vector<OutputRecord> cmd_verify(const Globals& g, bool& passed) {
  const AcceptanceReport report = run_acceptance(g.policy, g.tol_or(kDefaultSolverTol), g.precision);
  passed = report.all_passed();
  std::vector<OutputRecord> records;
  for (const auto& c : report.criteria) {
    OutputRecord rec;
    rec.command = "verify";
    rec.parameters = {{"criterion", c.id}, {"title", c.title}};
    rec.value = {{"passed", c.passed}, {"detail", c.detail}};
    records.push_back(rec);
  }
  return records;
}

void write_verify_table(const std::vector<OutputRecord>& records, std::ostream& out) {
  out << "criterion  result  title\n";
  for (const auto& r : records) {
    const bool ok = r.value["passed"].get<bool>();
    out << "  " << r.parameters["criterion"].get<int>() << "        " << (ok ? "PASS  " : "FAIL  ") << "  "
        << r.parameters["title"].get<std::string>() << "\n           " << r.value["detail"].get<std::string>()
        << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bohr and Rogosinski abscissas of ordinary Dirichlet series", "bohr-abscissa"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--precision", g.precision, "Printed significant digits")->check(CLI::Range(1, 17));
  app.add_option("--prime-limit", g.prime_limit, "Sieve limit for the oracle")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{PrimeTable::kMaxLimit}));
  g.tol_option = app.add_option("--tol", g.tol, "Solver tolerance (bracket width or radius residual)")
                     ->check(CLI::PositiveNumber);
  app.add_flag("--quiet", g.quiet, "Suppress informational diagnostics");
  app.add_option("--zeta-terms", g.policy.zeta_terms, "Direct terms before Euler-Maclaurin")->check(CLI::Range(2u, 1u << 24));
  app.add_option("--moebius-terms", g.policy.moebius_terms, "Terms of the Moebius series")->check(CLI::Range(1u, 1u << 16));
  app.add_option("--k-tail-tol", g.policy.k_tail_tolerance, "Outer-sum tail tolerance")->check(CLI::Range(1e-300, 0.999));

  double target = 0.0;
  std::string paper;
  auto* abscissa = app.add_subcommand("abscissa", "Solve F(sigma) = target on [1, 3]");
  auto* target_opt = abscissa->add_option("--target", target, "Right-hand side")->check(CLI::PositiveNumber);
  auto* paper_opt =
      abscissa->add_option("--paper", paper, "Use a published equation")->check(CLI::IsMember({"bohr", "mixed"}));
  target_opt->excludes(paper_opt);

  std::uint32_t l = 1;
  bool r2_alternate = false;
  auto* radius = app.add_subcommand("rogosinski-radius", "Rogosinski radius r_l");
  radius->add_option("--l", l, "Index l >= 1")->required()->check(CLI::PositiveNumber);
  radius->add_flag("--r2-alternate", r2_alternate, "Use sqrt(3/8) for r_2 instead of sqrt(3)/8");

  double s = 0.0;
  auto* pz = app.add_subcommand("prime-zeta", "Prime zeta function P(s)");
  pz->add_option("--s", s, "Argument s > 1")->required();

  std::uint32_t k_level = 1;
  auto* apz = app.add_subcommand("almost-prime-zeta", "Sum of n^-s over Omega(n) = k");
  apz->add_option("--k", k_level, "Level k >= 0")->required();
  apz->add_option("--s", s, "Argument s > 1")->required();

  double sigma = 0.0;
  std::string sweep_text;
  auto* bs = app.add_subcommand("bohr-sum", "F(sigma) = sum_k sqrt(S_k(2 sigma))");
  auto* sigma_opt = bs->add_option("--sigma", sigma, "Abscissa");
  auto* sweep_opt = bs->add_option("--sweep", sweep_text, "CSV sweep lo:hi:step");
  sigma_opt->excludes(sweep_opt);

  std::string input;
  auto* lift_cmd = app.add_subcommand("lift", "Bohr lift of a Dirichlet polynomial file");
  lift_cmd->add_option("--input", input, "File of `n re im` lines")->required();

  std::uint64_t degree = 2;
  auto* lattice_cmd = app.add_subcommand("lattice", "Exponent lattice of degree k");
  lattice_cmd->add_option("--k", degree, "Degree k >= 2")->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 32));

  auto* bound_cmd = app.add_subcommand("rogosinski-bound", "Half-plane bound for degree-k partial sums");
  bound_cmd->add_option("--k", degree, "Degree k >= 2")->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 32));

  std::uint32_t oracle_k = 1;
  std::uint64_t cutoff = 0;
  auto* oracle = app.add_subcommand("oracle", "Brute-force validators");
  oracle->require_subcommand(1);
  auto* direct = oracle->add_subcommand("direct-sum", "Direct sum over n <= N with Omega(n) = k");
  direct->add_option("--k", oracle_k, "Level k >= 1")->required();
  direct->add_option("--s", s, "Argument s > 1")->required();
  direct->add_option("--N", cutoff, "Cutoff N")->required();

  auto* verify = app.add_subcommand("verify", "Run the acceptance checks");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    const OutputFormat format = parse_output_format(g.format);
    std::vector<OutputRecord> records;

    if (*abscissa) {
      if (!*target_opt && !*paper_opt) {
        err << "abscissa: one of --target or --paper is required\n";
        return kUsageError;
      }
      records = cmd_abscissa(g, target, paper);
    } else if (*radius) {
      const double tol = g.tol_or(kDefaultRadiusTol);
      const auto reading = r2_alternate ? R2Reading::SquareRootOfRatio : R2Reading::Published;
      OutputRecord rec;
      rec.command = "rogosinski-radius";
      rec.parameters = {{"l", l}, {"tol", tol}, {"r2_reading", r2_alternate ? "sqrt(3/8)" : "sqrt(3)/8"}};
      rec.value = rogosinski_radius(l, tol, reading);
      rec.citations = {kCiteRogosinski};
      records.push_back(rec);
    } else if (*pz) {
      records.push_back(scalar_record("prime-zeta", merge({{"s", s}}, g.policy_json()), prime_zeta(s, g.policy),
                                      "prime zeta function via Moebius inversion of log zeta"));
    } else if (*apz) {
      records.push_back(scalar_record("almost-prime-zeta", merge({{"k", k_level}, {"s", s}}, g.policy_json()),
                                      almost_prime_zeta(k_level, s, g.policy),
                                      "sum over n with Omega(n) = k"));
    } else if (*bs) {
      if (*sweep_opt) return write_sweep(g, parse_sweep(sweep_text), out);
      if (!*sigma_opt) {
        err << "bohr-sum: one of --sigma or --sweep is required\n";
        return kUsageError;
      }
      const BohrSumDetail d = bohr_sum_detail(sigma, g.policy);
      OutputRecord rec = scalar_record("bohr-sum", merge({{"sigma", sigma}}, g.policy_json()), d.value,
                                       "left-hand side of the abscissa equations");
      if (format != OutputFormat::Csv)
        rec.value = {{"value", d.value.value}, {"levels", d.levels}, {"tail_bound", d.tail_bound}, {"ratio", d.ratio}};
      records.push_back(rec);
    } else if (*lift_cmd) {
      std::ifstream in(input);
      if (!in) throw InvalidArgument("cannot open Dirichlet polynomial file " + input);
      const DirichletPolynomial poly = DirichletPolynomial::parse(in);
      const PrimeTable table(std::max<std::uint64_t>(poly.degree(), 2));
      const MonomialExpansion exp = lift(poly, table);
      Json terms = Json::array();
      for (const auto& t : exp.terms)
        terms.push_back({{"n", t.index}, {"coefficient", {t.coefficient.real(), t.coefficient.imag()}},
                         {"exponents", t.exponents}});
      OutputRecord rec;
      rec.command = "lift";
      rec.parameters = {{"input", input}, {"degree", poly.degree()}};
      rec.value = {{"prime_basis", exp.prime_basis}, {"terms", terms}};
      rec.citations = {kCiteLift};
      records.push_back(rec);
    } else if (*lattice_cmd) {
      const PrimeTable table(degree);
      const LatticeSpec spec = lattice_for_degree(degree, table);
      OutputRecord rec;
      rec.command = "lattice";
      rec.parameters = {{"k", degree}};
      rec.value = lattice_json(spec, lattice_enumeration_check(spec));
      rec.citations = {kCiteLattice};
      records.push_back(rec);
    } else if (*bound_cmd) {
      const double tol = g.tol_or(kDefaultRadiusTol);
      const PrimeTable table(degree);
      const LatticeSpec spec = lattice_for_degree(degree, table);
      const auto m = static_cast<std::uint32_t>(spec.integer_bound);
      OutputRecord rec;
      rec.command = "rogosinski-bound";
      rec.parameters = {{"k", degree}, {"tol", tol}};
      rec.value = {{"sigma", rogosinski_halfplane_bound(spec, tol)},
                   {"integer_weights", spec.integer_weights},
                   {"integer_bound", spec.integer_bound},
                   {"radius", rogosinski_radius(m, tol)}};
      rec.citations = {kCiteLattice, kCiteRogosinski};
      records.push_back(rec);
    } else if (*direct) {
      records.push_back(cmd_oracle(g, oracle_k, s, cutoff, err));
    } else if (*verify) {
      bool passed = false;
      records = cmd_verify(g, passed);
      if (format == OutputFormat::Text)
        write_verify_table(records, out);
      else
        write_records(out, records, format, g.precision);
      if (!passed && !g.quiet) err << "verification failed\n";
      return passed ? kSuccess : kVerificationFailed;
    }

    write_records(out, records, format, g.precision);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kLibraryError;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace bohr::cli
