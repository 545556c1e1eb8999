#pragma once

// Registry of generating-function identities and the engines that check them
// by exact coefficient extraction, pointwise evaluation and quadrature.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lacunary/multipoly.hpp"
#include "lacunary/quadrature.hpp"
#include "lacunary/rational.hpp"
#include "lacunary/scalar.hpp"
#include "lacunary/series.hpp"

namespace lacunary {

enum class CheckMode { ExactCoeff, NumericPointwise, Quadrature };

/// "EXACT_COEFF", "NUMERIC_POINTWISE", "QUADRATURE".
std::string_view mode_name(CheckMode mode);

using Point = std::vector<Rational>;

/// One parameter binding checked by coefficient extraction. Both sides
/// produce the same flat list of exact coefficients for a given order.
struct CoefficientVariant {
  std::string label;
  std::vector<std::string> parameter_names;
  std::vector<Point> tuples;
  int sampled_tuples = 2;
  /// Draws an extra tuple; empty means small nonzero rationals per parameter.
  std::function<Point(std::mt19937_64&)> sampler;
  std::function<std::vector<Rational>(const Point&, int order)> lhs;
  std::function<std::vector<Rational>(const Point&, int order)> rhs;
};

/// A closed form for the right-hand side. Forms with `checked == false`
/// are printed variants kept for the report only.
struct ClosedForm {
  std::string label;
  std::function<Complex(const std::vector<double>&, const SumControl&)> eval;
  bool checked = true;
};

/// One parameter binding checked pointwise: the left side is the series
/// sum_n lhs_term(point, n) evaluated exactly term by term.
struct PointwiseVariant {
  std::string label;
  std::vector<std::string> parameter_names;
  std::vector<Point> grid;
  std::function<bool(const Point&)> in_domain;
  std::function<Rational(const Point&, int n)> lhs_term;
  std::vector<ClosedForm> rhs;
};

struct QuadratureVariant {
  std::string label;
  std::vector<double> points;
  std::function<QuadratureResult(double x, double tol)> integrate;
  std::function<double(double x)> closed_form;
};

struct IdentityCase {
  std::string id;
  std::string paper_ref;  // the identity written out
  std::vector<CheckMode> modes;
  double tolerance = 1e-8;
  int exact_order = 10;
  std::vector<CoefficientVariant> exact;
  std::vector<PointwiseVariant> numeric;
  std::vector<QuadratureVariant> quadrature;
  std::vector<std::string> notes;

  bool supports(CheckMode mode) const;
};

struct VerificationReport {
  std::string id;
  std::string paper_ref;
  CheckMode mode = CheckMode::ExactCoeff;
  int grid_size = 0;
  int truncation = 0;
  double max_abs_err = 0.0;
  double max_rel_err = 0.0;
  bool pass = false;
  std::vector<std::string> notes;
};

struct CheckOptions {
  std::optional<int> nmax;          // coefficient order, or fixed LHS length
  std::optional<double> tolerance;  // may only tighten the case tolerance
  std::uint64_t seed = 7;
  std::optional<int> max_points;    // per variant
  bool flip_rhs_sign = false;       // mutation testing
  SumControl sum_control{};
};

/// Both sides of a pointwise identity at one grid point.
struct PointEvaluation {
  double lhs = 0.0;        // partial sum of `terms` exact terms
  double lhs_longer = 0.0; // same with ten more terms
  int terms = 0;
  double tail = 0.0;       // |last term| / |lhs|
  double stability = 0.0;  // |lhs_longer - lhs| / |lhs|
  std::vector<Complex> rhs;  // one value per closed form
};

PointEvaluation evaluate_point(const PointwiseVariant& v, const Point& p, const CheckOptions& opts = {});

const std::vector<IdentityCase>& registry();
/// Throws NotFound for an unknown id.
const IdentityCase& lookup(std::string_view id);
std::vector<std::string> registry_ids();

VerificationReport check_coefficients(const IdentityCase& c, const CheckOptions& opts = {});
VerificationReport check_coefficients(std::string_view id, int nmax);
VerificationReport check_pointwise(const IdentityCase& c, const CheckOptions& opts = {});
VerificationReport check_quadrature(const IdentityCase& c, const CheckOptions& opts = {});
/// Dispatches on mode; ModeUnsupported if the case does not register it.
VerificationReport verify(const IdentityCase& c, CheckMode mode, const CheckOptions& opts = {});

/// Lowering action, exponential shift and eigenfunction checks of the
/// Laguerre derivative, merged into one report.
VerificationReport laguerre_derivative_suite();
/// Pseudo-Gaussian, dilation, Borel-transform, Lorentzian and arctan checks.
VerificationReport pseudo_gaussian_suite();

enum class AuxFamily { P, Q };

/// Auxiliary polynomial in r with coefficients in (t, x, y), fitted so that
/// the lacunary expansion template reproduces the umbral oracle.
struct DerivedAuxPolynomial {
  AuxFamily family = AuxFamily::P;
  int m = 1;
  int lacunarity = 2;                      // 2 for p, 3 for q
  int factorial_offset = 0;                // k in the denominator r! (r+k)!
  std::vector<MultiPoly> coefficients;     // index j: coefficient of r^j; vars (t, x, y)
  int fit_orders = 0;
  int verified_orders = 0;
  std::string template_used;
  std::vector<std::string> notes;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  /// p(r; x, y, t) in double precision.
  double evaluate(double r, double t, double x, double y) const;
  std::string str() const;
};

/// Family p with m in {1, 2} or q with m = 1. nmax_fit = 0 picks the
/// smallest order range that determines the system.
DerivedAuxPolynomial derive_aux_polynomial(AuxFamily family, int m, int nmax_fit = 0);

struct AuxComparison {
  bool matches_paper = false;
  std::string printed;
  std::vector<std::string> deviations;  // per r-power differences
  std::vector<std::string> notes;
};

/// Compares a derived polynomial with its printed counterpart (available for
/// p with m = 1, 2 and q with m = 1).
AuxComparison compare_with_printed(const DerivedAuxPolynomial& derived);

/// Printed auxiliary polynomial, as a derived-shaped object.
DerivedAuxPolynomial printed_aux_polynomial(AuxFamily family, int m);

}  // namespace lacunary
