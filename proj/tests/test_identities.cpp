#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "generators.hpp"
#include "lacunary/errors.hpp"
#include "lacunary/fps.hpp"
#include "lacunary/identities.hpp"
#include "lacunary/polynomials.hpp"

using namespace lacunary;
using testing_support::Gen;

namespace {

const std::vector<std::string> kVars{"t", "x", "y"};

MultiPoly mono(const Rational& c, int t, int x, int y) { return MultiPoly::monomial(3, c, {t, x, y}); }

bool has_note(const VerificationReport& r, const std::string& fragment) {
  return std::any_of(r.notes.begin(), r.notes.end(), [&](const std::string& n) { return n.find(fragment) != std::string::npos; });
}

const PointwiseVariant& variant(const IdentityCase& c, const std::string& label) {
  for (const auto& v : c.numeric) {
    if (v.label == label) return v;
  }
  throw NotFound(label);
}

// Physicists' Hermite at a complex point by the three-term recurrence.
Complex hermite_ref(int n, Complex z) {
  Complex a(1.0), b = 2.0 * z;
  if (n == 0) return a;
  for (int k = 1; k < n; ++k) {
    const Complex c = 2.0 * z * b - 2.0 * double(k) * a;
    a = b;
    b = c;
  }
  return b;
}

}  // namespace

TEST_CASE("registry contents") {
  const auto& all = registry();
  CHECK(all.size() == 25);
  const std::vector<std::string> expected{"EQ1.7",  "EQ1.9",  "EQ1.11", "EQ1.12", "EQ2.7",  "EQ2.8",  "EQ2.9",
                                          "EQ2.10", "EQ2.11", "EQ2.13", "EQ2.14", "EQ3.1",  "EQ3.3",  "EQ3.4",
                                          "EQ3.5",  "EQ3.8",  "EQ3.9",  "EQ3.10", "EQ3.11", "EQ3.14", "EQ3.15",
                                          "EQ3.17", "EQ3.18", "EQ3.20", "EQ3.21"};
  CHECK(registry_ids() == expected);
  for (const auto& c : all) {
    CHECK_FALSE(c.modes.empty());
    CHECK_FALSE(c.paper_ref.empty());
    if (c.supports(CheckMode::ExactCoeff)) CHECK_FALSE(c.exact.empty());
    if (c.supports(CheckMode::NumericPointwise)) CHECK_FALSE(c.numeric.empty());
    if (c.supports(CheckMode::Quadrature)) CHECK_FALSE(c.quadrature.empty());
  }
  CHECK(lookup("EQ2.7").supports(CheckMode::NumericPointwise));
  CHECK(lookup("EQ3.18").supports(CheckMode::Quadrature));
  CHECK_THROWS_AS(lookup("EQ9.9"), NotFound);
  CHECK_THROWS_AS(check_coefficients(lookup("EQ2.10")), ModeUnsupported);
}

TEST_CASE("every registered mode passes") {
  for (const auto& c : registry()) {
    for (CheckMode m : c.modes) {
      const VerificationReport r = verify(c, m);
      INFO(c.id << " " << mode_name(m) << " " << (r.notes.empty() ? "" : r.notes.front()));
      CHECK(r.pass);
      CHECK(r.grid_size > 0);
      CHECK(r.id == c.id);
      if (m == CheckMode::ExactCoeff) {
        CHECK(r.max_abs_err == 0.0);
        CHECK(r.grid_size >= 3);
      } else {
        CHECK(r.max_rel_err <= c.tolerance);
      }
    }
  }
}

TEST_CASE("negating a right-hand side fails every case") {
  CheckOptions opts;
  opts.flip_rhs_sign = true;
  for (const auto& c : registry()) {
    for (CheckMode m : c.modes) {
      INFO(c.id << " " << mode_name(m));
      CHECK_FALSE(verify(c, m, opts).pass);
    }
  }
}

TEST_CASE("coefficient examples computed independently") {
  // [t^2] (1+t)^3 e^(-t) = 3 - 3 + 1/2
  FormalPowerSeries lin(2), ex(2);
  lin.set(0, 1);
  lin.set(1, 1);
  ex.set(1, -1);
  CHECK((power(lin, 3) * exp_series(ex))[2] == Rational(1, 2));
  CHECK(assoc_laguerre<Rational>(2, Rational(1), Rational(1), Rational(1)) == Rational(1, 2));

  // classical generating function against the recurrence oracle at x = 2/3
  const Rational x(2, 3);
  const CoefficientVariant& v = lookup("EQ1.11").exact.front();
  const auto rhs = v.rhs({x, Rational(1)}, 10);
  for (int n = 0; n <= 10; ++n) CHECK(rhs[static_cast<std::size_t>(n)] == testing_support::laguerre_by_recurrence(n, x));

  // two-symbol oracle: t^0 coefficient is L_0 L_0 = 1, then L_n L_n / n!
  const CoefficientVariant& b = lookup("EQ3.8").exact.front();
  Gen g(51);
  for (int i = 0; i < 3; ++i) {
    const Point p{g.rational(), g.nonzero_rational(), g.rational(), g.nonzero_rational()};
    const auto c = b.rhs(p, 6);
    CHECK(c[0] == Rational(1));
    for (int n = 0; n <= 6; ++n) {
      CHECK(c[static_cast<std::size_t>(n)] == testing_support::laguerre2_by_recurrence(n, p[0], p[1]) *
                                                  testing_support::laguerre2_by_recurrence(n, p[2], p[3]) / factorial(n));
    }
  }
}

TEST_CASE("check_coefficients by id and order") {
  const VerificationReport r = check_coefficients("EQ2.13", 10);
  CHECK(r.pass);
  CHECK(r.truncation == 10);
  CHECK(r.max_abs_err == 0.0);
  CHECK(check_coefficients("EQ3.15", 20).pass);
  CHECK(check_coefficients("EQ3.17", 20).pass);
  CHECK(check_coefficients("EQ3.21", 20).pass);
  CHECK_THROWS_AS(check_coefficients("EQ9.9", 4), NotFound);
}

TEST_CASE("sampled tuples are deterministic per seed") {
  CheckOptions a;
  a.seed = 99;
  const auto r1 = check_coefficients(lookup("EQ1.9"), a);
  const auto r2 = check_coefficients(lookup("EQ1.9"), a);
  CHECK(r1.notes == r2.notes);
  CHECK(r1.grid_size == r2.grid_size);
}

TEST_CASE("tolerance may only tighten") {
  CheckOptions opts;
  opts.tolerance = 1e-6;
  CHECK_THROWS_AS(check_pointwise(lookup("EQ2.10"), opts), ConfigError);
  opts.tolerance = -1.0;
  CHECK_THROWS_AS(check_pointwise(lookup("EQ2.10"), opts), ConfigError);
  opts.tolerance = 1e-10;
  CHECK(check_pointwise(lookup("EQ2.10"), opts).pass);
}

TEST_CASE("pointwise example: double lacunary at (1, 1/10)") {
  const PointwiseVariant& v = variant(lookup("EQ2.7"), "y=1");
  CheckOptions opts;
  opts.nmax = 40;
  const PointEvaluation ev = evaluate_point(v, {Rational(1), Rational(1, 10)}, opts);
  // RHS summed here from the recurrence
  const double t = 0.1, x = 1.0;
  const Complex z(0.0, std::sqrt(t));
  Complex rhs(0.0), pw(1.0);
  double fact = 1.0;
  for (int r = 0; r < 60; ++r) {
    if (r > 0) {
      fact *= r;
      pw *= Complex(0.0, x * std::sqrt(t));
    }
    rhs += pw / (fact * fact) * hermite_ref(r, z);
  }
  rhs *= std::exp(t);
  // LHS summed here from the recurrence oracle
  double lhs = 0.0, tn = 1.0, nf = 1.0;
  for (int n = 0; n < 40; ++n) {
    if (n > 0) {
      tn *= t;
      nf *= n;
    }
    lhs += tn / nf * testing_support::laguerre_by_recurrence(2 * n, Rational(1)).to_double();
  }
  CHECK(std::abs(ev.lhs - lhs) < 1e-12);
  CHECK(std::abs(ev.rhs.front() - rhs) < 1e-9);
  CHECK(std::abs(ev.lhs - rhs.real()) < 1e-9);
  CHECK(ev.terms == 40);
}

TEST_CASE("pointwise collapse points") {
  const PointwiseVariant& m0 = variant(lookup("EQ3.10"), "m=0");
  for (auto t : {Rational(1, 10), Rational(1, 4), Rational(1, 2)}) {
    const PointEvaluation ev = evaluate_point(m0, {Rational(0), t});
    const double want = 1.0 / std::sqrt(1.0 - t.to_double());
    CHECK(std::abs(ev.lhs - want) < 1e-12 * want);
    CHECK(std::abs(ev.rhs.front() - want) < 1e-12 * want);
  }
  const PointwiseVariant& a2 = variant(lookup("EQ2.14"), "alpha=2");
  const PointEvaluation ev = evaluate_point(a2, {Rational(0), Rational(1), Rational(1, 100)});
  CHECK(std::abs(ev.lhs - 1.01) < 1e-12);  // 1 + t: only n <= 1 survives at x = 0
  for (const Complex& r : ev.rhs) CHECK(std::abs(r - Complex(1.01)) < 1e-12);
}

TEST_CASE("pointwise domain guard") {
  const PointwiseVariant& v = variant(lookup("EQ2.10"), "y=1");
  CHECK_THROWS_AS(evaluate_point(v, {Rational(1), Rational(3, 2)}), DomainError);
}

TEST_CASE("derive p_2 reproduces the printed polynomial") {
  const DerivedAuxPolynomial p = derive_aux_polynomial(AuxFamily::P, 1);
  REQUIRE(p.degree() == 2);
  CHECK(p.factorial_offset == 3);
  CHECK(p.coefficients[2] == mono(1, 0, 0, 0) + mono(2, 1, 0, 2));
  CHECK(p.coefficients[1] == mono(5, 0, 0, 0) + mono(-4, 1, 1, 1) + mono(10, 1, 0, 2));
  CHECK(p.coefficients[0] == mono(6, 0, 0, 0) + mono(12, 1, 0, 2) + mono(-12, 1, 1, 1) + mono(2, 1, 2, 0));
  CHECK(p.verified_orders >= 5);
  CHECK(compare_with_printed(p).matches_paper);
}

TEST_CASE("derive p_4 and q_3") {
  const DerivedAuxPolynomial p4 = derive_aux_polynomial(AuxFamily::P, 2);
  REQUIRE(p4.degree() == 4);
  CHECK(p4.coefficients[4] == mono(2, 0, 0, 0) + mono(10, 1, 0, 2) + mono(4, 2, 0, 4));
  CHECK(p4.verified_orders >= 7);
  const AuxComparison c4 = compare_with_printed(p4);
  CHECK((c4.matches_paper || !c4.deviations.empty()));

  const DerivedAuxPolynomial q3 = derive_aux_polynomial(AuxFamily::Q, 1);
  REQUIRE(q3.degree() == 3);
  CHECK(q3.factorial_offset == 4);
  // at y = 1 the leading coefficient is 1 + 3t
  CHECK(q3.coefficients[3].substituted(2, Rational(1)) == mono(1, 0, 0, 0) + mono(3, 1, 0, 0));
  const AuxComparison cq = compare_with_printed(q3);
  CHECK_FALSE(cq.matches_paper);
  CHECK_FALSE(cq.deviations.empty());

  CHECK_THROWS(derive_aux_polynomial(AuxFamily::Q, 2));
}

TEST_CASE("derived auxiliary polynomials make their identities pass tightly") {
  CheckOptions opts;
  opts.tolerance = 1e-9;
  const auto r8 = check_pointwise(lookup("EQ2.8"), opts);
  CHECK(r8.pass);
  const auto r34 = check_pointwise(lookup("EQ3.4"), opts);
  CHECK(r34.pass);
  CHECK(has_note(r34, "paper_deviation"));
}

TEST_CASE("reports carry convention notes") {
  CHECK(has_note(check_pointwise(lookup("EQ3.10")), "m!"));
  CHECK(has_note(check_pointwise(lookup("EQ2.7")), "unchecked"));
  CHECK(has_note(check_pointwise(lookup("EQ3.3")), "e^(y^3 t)"));
}

TEST_CASE("Laguerre derivative and pseudo-Gaussian suites") {
  const VerificationReport ld = laguerre_derivative_suite();
  CHECK(ld.pass);
  CHECK(ld.max_abs_err == 0.0);
  CHECK(has_note(ld, "lowering"));
  const VerificationReport pg = pseudo_gaussian_suite();
  CHECK(pg.pass);
  CHECK(has_note(pg, "quadrature"));
}

TEST_CASE("pointwise check with a fixed series length reports the truncation") {
  CheckOptions opts;
  opts.nmax = 60;
  const auto r = check_pointwise(lookup("EQ1.7"), opts);
  CHECK(r.pass);
  CHECK(r.truncation == 60);
  opts.nmax = 3;
  CHECK_FALSE(check_pointwise(lookup("EQ1.7"), opts).pass);
}
