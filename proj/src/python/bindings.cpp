#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bohr/abscissa.hpp"
#include "bohr/bohr_lift.hpp"
#include "bohr/cli.hpp"
#include "bohr/errors.hpp"
#include "bohr/oracles.hpp"
#include "bohr/primes.hpp"
#include "bohr/zeta_kernels.hpp"

namespace py = pybind11;
using namespace bohr;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bohr and Rogosinski abscissas of ordinary Dirichlet series";

  py::register_exception<BracketError>(m, "BracketError", PyExc_RuntimeError);
  py::register_exception<PrecisionError>(m, "PrecisionError", PyExc_RuntimeError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);

  py::class_<Enclosure>(m, "Enclosure")
      .def(py::init<double, double>(), py::arg("value"), py::arg("error") = 0.0)
      .def_readonly("value", &Enclosure::value)
      .def_readonly("error", &Enclosure::error)
      .def_property_readonly("lower", &Enclosure::lower)
      .def_property_readonly("upper", &Enclosure::upper)
      .def("contains", &Enclosure::contains)
      .def("__repr__", [](const Enclosure& e) {
        std::ostringstream os;
        os.precision(17);
        os << "Enclosure(" << e.value << ", " << e.error << ")";
        return os.str();
      });

  py::class_<TruncationPolicy>(m, "TruncationPolicy")
      .def(py::init([](std::uint32_t zeta_terms, std::uint32_t moebius_terms, double k_tail_tolerance) {
             TruncationPolicy p{zeta_terms, moebius_terms, k_tail_tolerance};
             p.validate();
             return p;
           }),
           py::arg("zeta_terms") = 64, py::arg("moebius_terms") = 64, py::arg("k_tail_tolerance") = 1e-14)
      .def_readonly("zeta_terms", &TruncationPolicy::zeta_terms)
      .def_readonly("moebius_terms", &TruncationPolicy::moebius_terms)
      .def_readonly("k_tail_tolerance", &TruncationPolicy::k_tail_tolerance)
      .def("tightened", &TruncationPolicy::tightened);

  py::class_<PrimeTable>(m, "PrimeTable")
      .def(py::init<std::uint64_t>(), py::arg("limit"))
      .def_property_readonly("limit", &PrimeTable::limit)
      .def_property_readonly("primes",
                             [](const PrimeTable& t) { return std::vector<std::uint32_t>(t.primes().begin(), t.primes().end()); })
      .def("factorize",
           [](const PrimeTable& t, std::uint64_t n) {
             std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
             for (const auto& e : t.factorize(n).entries) out.emplace_back(e.prime, e.exponent);
             return out;
           })
      .def("omega", &PrimeTable::omega);

  const TruncationPolicy defaults{};
  m.def("riemann_zeta", &riemann_zeta, py::arg("s"), py::arg("policy") = defaults);
  m.def("prime_zeta", &prime_zeta, py::arg("s"), py::arg("policy") = defaults);
  m.def("almost_prime_zeta", &almost_prime_zeta, py::arg("k"), py::arg("s"), py::arg("policy") = defaults);
  m.def("bohr_sum", &bohr_sum, py::arg("sigma"), py::arg("policy") = defaults);

  py::class_<AbscissaResult>(m, "AbscissaResult")
      .def_readonly("root", &AbscissaResult::root)
      .def_property_readonly("bracket", [](const AbscissaResult& r) { return std::pair{r.bracket.lo, r.bracket.hi}; })
      .def_readonly("residual", &AbscissaResult::residual)
      .def_readonly("iterations", &AbscissaResult::iterations)
      .def_readonly("policy", &AbscissaResult::policy);

  m.def("solve_abscissa", &solve_abscissa, py::arg("target"), py::arg("policy") = defaults,
        py::arg("tol") = kDefaultSolverTol);
  m.def("bohr_bound_modulus", py::overload_cast<double, double, const TruncationPolicy&>(&bohr_bound_modulus),
        py::arg("a1_abs"), py::arg("sigma"), py::arg("policy") = defaults);
  m.def("bohr_bound_squared", py::overload_cast<double, double, const TruncationPolicy&>(&bohr_bound_squared),
        py::arg("a1_abs"), py::arg("sigma"), py::arg("policy") = defaults);
  m.def("radius_to_abscissa", &radius_to_abscissa, py::arg("r"));
  m.def(
      "rogosinski_radius",
      [](std::uint32_t l, double tol, bool r2_alternate) {
        return rogosinski_radius(l, tol, r2_alternate ? R2Reading::SquareRootOfRatio : R2Reading::Published);
      },
      py::arg("l"), py::arg("tol") = kDefaultRadiusTol, py::arg("r2_alternate") = false);

  m.def(
      "lift",
      [](const std::vector<Complex>& coefficients, const PrimeTable& table) {
        const MonomialExpansion e = lift(DirichletPolynomial{coefficients}, table);
        std::vector<std::tuple<std::uint64_t, Complex, std::vector<std::uint32_t>>> terms;
        for (const auto& t : e.terms) terms.emplace_back(t.index, t.coefficient, t.exponents);
        return py::make_tuple(e.prime_basis, terms);
      },
      py::arg("coefficients"), py::arg("table"),
      "Returns (prime_basis, [(n, coefficient, exponents), ...]).");
  m.def(
      "evaluate_dirichlet",
      [](const std::vector<Complex>& coefficients, Complex s) {
        return evaluate_dirichlet(DirichletPolynomial{coefficients}, s);
      },
      py::arg("coefficients"), py::arg("s"));
  m.def(
      "evaluate_lifted",
      [](const std::vector<Complex>& coefficients, Complex s, const PrimeTable& table) {
        return evaluate_monomials(lift(DirichletPolynomial{coefficients}, table), s);
      },
      py::arg("coefficients"), py::arg("s"), py::arg("table"));

  py::class_<LatticeSpec>(m, "LatticeSpec")
      .def_readonly("prime_basis", &LatticeSpec::prime_basis)
      .def_readonly("degree", &LatticeSpec::degree)
      .def_readwrite("integer_weights", &LatticeSpec::integer_weights)
      .def_readwrite("integer_bound", &LatticeSpec::integer_bound)
      .def_readonly("scale", &LatticeSpec::scale)
      .def_readonly("points", &LatticeSpec::points);
  m.def("lattice_for_degree", &lattice_for_degree, py::arg("k"), py::arg("table"));
  m.def("lattice_enumeration_check", &lattice_enumeration_check, py::arg("spec"));
  m.def("rogosinski_halfplane_bound",
        py::overload_cast<std::uint64_t, const PrimeTable&, double>(&rogosinski_halfplane_bound), py::arg("k"),
        py::arg("table"), py::arg("tol") = kDefaultRadiusTol);

  py::class_<OracleReport>(m, "OracleReport")
      .def_readonly("value", &OracleReport::value)
      .def_readonly("tail_bound", &OracleReport::tail_bound)
      .def_readonly("terms_used", &OracleReport::terms_used);
  m.def("direct_sum_oracle", &direct_sum_oracle, py::arg("k"), py::arg("s"), py::arg("N"), py::arg("table"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
