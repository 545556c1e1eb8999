#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lacunary/cli.hpp"
#include "lacunary/errors.hpp"
#include "lacunary/identities.hpp"
#include "lacunary/polynomials.hpp"
#include "lacunary/quadrature.hpp"
#include "lacunary/special_functions.hpp"
#include "lacunary/umbral.hpp"

namespace py = pybind11;
using namespace lacunary;

namespace {

CheckMode parse_mode(const std::string& m) {
  if (m == "EXACT_COEFF" || m == "exact") return CheckMode::ExactCoeff;
  if (m == "NUMERIC_POINTWISE" || m == "numeric") return CheckMode::NumericPointwise;
  if (m == "QUADRATURE" || m == "quadrature") return CheckMode::Quadrature;
  throw ConfigError("unknown mode '" + m + "'");
}

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["id"] = r.id;
  d["paper_ref"] = r.paper_ref;
  d["mode"] = std::string(mode_name(r.mode));
  d["grid_size"] = r.grid_size;
  d["truncation"] = r.truncation;
  d["max_abs_err"] = r.max_abs_err;
  d["max_rel_err"] = r.max_rel_err;
  d["pass"] = r.pass;
  d["notes"] = r.notes;
  return d;
}

std::vector<std::string> mode_names(const IdentityCase& c) {
  std::vector<std::string> out;
  for (CheckMode m : c.modes) out.emplace_back(mode_name(m));
  return out;
}

Rational to_rational(const std::string& s) { return Rational::parse(s); }

}  // namespace

PYBIND11_MODULE(_lacunary, m) {
  m.doc() = "Umbral verification of Laguerre lacunary generating functions";

  py::register_exception<Error>(m, "LacunaryError", PyExc_RuntimeError);
  py::register_exception<NotFound>(m, "NotFound", PyExc_KeyError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("registry_ids", &registry_ids);
  m.def("list_cases", [] {
    py::list out;
    for (const auto& c : registry()) out.append(py::make_tuple(c.id, c.paper_ref, mode_names(c)));
    return out;
  });
  m.def(
      "verify",
      [](const std::string& id, const std::string& mode, std::optional<int> nmax, std::optional<double> tol,
         std::uint64_t seed, std::optional<int> max_points, bool flip) {
        CheckOptions opts;
        opts.nmax = nmax;
        opts.tolerance = tol;
        opts.seed = seed;
        opts.max_points = max_points;
        opts.flip_rhs_sign = flip;
        VerificationReport r;
        {
          py::gil_scoped_release release;
          r = verify(lookup(id), parse_mode(mode), opts);
        }
        return report_dict(r);
      },
      py::arg("id"), py::arg("mode"), py::arg("nmax") = py::none(), py::arg("tol") = py::none(), py::arg("seed") = 7,
      py::arg("max_points") = py::none(), py::arg("flip_rhs_sign") = false);
  m.def("check_coefficients", [](const std::string& id, int nmax) { return report_dict(check_coefficients(id, nmax)); });
  m.def("laguerre_derivative_suite", [] { return report_dict(laguerre_derivative_suite()); });
  m.def("pseudo_gaussian_suite", [] { return report_dict(pseudo_gaussian_suite()); });

  m.def("derive_aux_polynomial", [](const std::string& family, int mm) {
    if (family != "p" && family != "q") throw ConfigError("family must be p or q");
    const DerivedAuxPolynomial d = derive_aux_polynomial(family == "p" ? AuxFamily::P : AuxFamily::Q, mm);
    const AuxComparison c = compare_with_printed(d);
    const std::vector<std::string> names{"t", "x", "y"};
    std::vector<std::string> coeffs;
    for (const auto& p : d.coefficients) coeffs.push_back(p.str(names));
    py::dict out;
    out["polynomial"] = d.str();
    out["coefficients"] = coeffs;  // index j: coefficient of r^j
    out["factorial_offset"] = d.factorial_offset;
    out["matches_paper"] = c.matches_paper;
    out["deviations"] = c.deviations;
    out["notes"] = d.notes;
    return out;
  });

  // Exact evaluators take and return rationals as strings, e.g. "2/3".
  m.def("laguerre_exact", [](int n, const std::string& x, const std::string& y) {
    return laguerre<Rational>(n, to_rational(x), to_rational(y)).str();
  });
  m.def("assoc_laguerre_exact", [](int n, const std::string& a, const std::string& x, const std::string& y) {
    return assoc_laguerre<Rational>(n, to_rational(a), to_rational(x), to_rational(y)).str();
  });
  m.def("lambda_poly_exact", [](int n, long a, long b, const std::string& x, const std::string& y) {
    return lambda_poly<Rational>(n, a, b, to_rational(x), to_rational(y)).str();
  });
  m.def("umbral_laguerre", [](int n, const std::string& x, const std::string& y) {
    const auto s = ExactUmbralSeries::monomial(to_rational(y), {Rational(0), Rational(0)}) +
                   ExactUmbralSeries::monomial(-to_rational(x), {Rational(1), Rational(0)});
    return s.pow(n).reduce().str();
  });
  m.def("laguerre", [](int n, double x, double y) { return laguerre<double>(n, x, y); });
  m.def("assoc_laguerre", [](int n, double a, double x, double y) { return assoc_laguerre<double>(n, a, x, y); });
  m.def("hermite", [](int n, std::vector<double> slots) { return hermite<double>(n, std::span<const double>(slots)); });

  m.def("wright", [](double b, double a, Complex x) { return wright(b, a, x); });
  m.def("mittag_leffler", [](double b, double a, Complex x) { return mittag_leffler(b, a, x); });
  m.def("tricomi", [](double a, Complex x) { return tricomi(a, x); });
  m.def("bessel_i", [](int n, Complex z) { return bessel_i(n, z); });
  m.def("h_tricomi", [](double s, std::vector<Complex> slots) { return h_tricomi(s, std::span<const Complex>(slots)); });
  m.def("borel_j0", [](double x, double tol) { return borel_j0(x, tol).value; }, py::arg("x"), py::arg("tol") = 1e-10);

  m.def("cli_main", [](std::vector<std::string> args) {
    args.insert(args.begin(), "lacunary");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release release;
      code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  });
}
