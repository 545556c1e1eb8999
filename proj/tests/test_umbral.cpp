#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "lacunary/errors.hpp"
#include "lacunary/umbral.hpp"

using namespace lacunary;
using testing_support::Gen;
using U = ExactUmbralSeries;

namespace {

const Rational kZero(0);

U c1(const Rational& coeff, const Rational& e) { return U::monomial(coeff, {e, kZero}); }
U c2(const Rational& coeff, const Rational& e) { return U::monomial(coeff, {kZero, e}); }

// y - c^beta x
U shifted(const Rational& x, const Rational& y, long beta = 1) { return c1(y, 0) + c1(-x, Rational(beta)); }

// Explicit double-factorial sum for L_n(x, y), written out independently of the library.
Rational laguerre_sum(int n, const Rational& x, const Rational& y) {
  Rational s(0);
  for (int r = 0; r <= n; ++r) {
    s += (-x).pow(r) * y.pow(n - r) / (factorial(r) * factorial(r) * factorial(n - r));
  }
  return s * factorial(n);
}

// Lambda_n^(a,b)(x, y) = n! sum_r (-x)^r y^(n-r) / (r! (n-r)! Gamma(b r + a + 1)).
Rational lambda_sum(int n, long a, long b, const Rational& x, const Rational& y) {
  Rational s(0);
  for (int r = 0; r <= n; ++r) {
    s += (-x).pow(r) * y.pow(n - r) / (factorial(r) * factorial(n - r) * factorial(b * r + a));
  }
  return s * factorial(n);
}

}  // namespace

TEST_CASE("algebra examples") {
  const Rational x(2, 3), y(5, 4);
  const U s = shifted(x, y);
  CHECK(s.size() == 2);
  CHECK(s.coefficient({0, 0}) == y);
  CHECK(s.coefficient({1, 0}) == -x);
  const U sq = s.pow(2);
  CHECK(sq.coefficient({0, 0}) == y * y);
  CHECK(sq.coefficient({1, 0}) == Rational(-2) * x * y);
  CHECK(sq.coefficient({2, 0}) == x * x);

  const U two = (c2(Rational(7), 0) + c2(Rational(-3), 1)) * shifted(x, y);
  CHECK(two.size() == 4);
  CHECK(two.arity() == 2);
  CHECK_THROWS_AS(s.pow(-1), DomainError);
}

TEST_CASE("term count of a product is bounded by the product of counts") {
  Gen g(21);
  for (int i = 0; i < 30; ++i) {
    U a = U::zero_like(1), b = U::zero_like(1);
    for (int k = 0; k < 4; ++k) a += c1(g.rational(), Rational(g.integer(-2, 3), 2));
    for (int k = 0; k < 3; ++k) b += c1(g.rational(), Rational(g.integer(-2, 3), 3));
    CHECK((a * b).size() <= a.size() * b.size());
    CHECK(a * b == b * a);
  }
}

TEST_CASE("exp examples") {
  const Rational x(3, 2);
  // exp(-c x t) with the t-power folded into the coefficient via t = 1
  const U e = c1(-x, 1).exp(2);
  CHECK(e.coefficient({0, 0}) == Rational(1));
  CHECK(e.coefficient({1, 0}) == -x);
  CHECK(e.coefficient({2, 0}) == x * x / Rational(2));
  CHECK(U::zero_like(1).exp(5).size() == 1);
  CHECK(U::zero_like(1).exp(5).reduce() == Rational(1));
  CHECK_THROWS_AS(c1(1, 0).exp(3), NonzeroConstantTerm);
  CHECK_THROWS_AS(c1(1, 1).exp(-1), DomainError);
  CHECK_THROWS_AS((c1(1, 1) + c1(1, Rational(1, 7))).exp(12, 10), OrderOverflow);
}

TEST_CASE("reduce examples") {
  CHECK(c1(1, 3).reduce() == Rational(1, 6));
  CHECK(c1(5, -2).reduce() == Rational(0));
  const Rational x(1, 3), y(2);
  CHECK(shifted(x, y).pow(2).reduce() == y * y - Rational(2) * x * y + x * x / Rational(2));
  CHECK_THROWS_AS(c1(1, Rational(1, 2)).reduce(), ExactnessViolation);
}

TEST_CASE("float reduction handles half-integer exponents") {
  const FloatUmbralSeries h = FloatUmbralSeries::monomial(Complex(1.0), {Rational(1, 2), kZero});
  CHECK(std::abs(h.reduce() - Complex(1.0 / std::tgamma(1.5))) < 1e-15);
  const FloatUmbralSeries pole = FloatUmbralSeries::monomial(Complex(4.0), {Rational(-3), kZero});
  CHECK(pole.reduce() == Complex(0.0));
}

TEST_CASE("reduction of the Laguerre umbral form equals the explicit sum") {
  Gen g(22);
  for (int trial = 0; trial < 6; ++trial) {
    const Rational x = g.rational(), y = g.rational();
    for (int n = 0; n <= 12; ++n) CHECK(shifted(x, y).pow(n).reduce() == laguerre_sum(n, x, y));
  }
}

TEST_CASE("reduction of the Laguerre-Wright umbral form equals the explicit sum") {
  Gen g(23);
  for (int trial = 0; trial < 3; ++trial) {
    const Rational x = g.rational(), y = g.rational();
    for (long a = 0; a <= 4; ++a) {
      for (long b = 1; b <= 3; ++b) {
        for (int n = 0; n <= 10; ++n) {
          const U form = c1(1, Rational(a)) * shifted(x, y, b).pow(n);
          CHECK(form.reduce() == lambda_sum(n, a, b, x, y));
        }
      }
    }
  }
}

TEST_CASE("two-symbol reduction factorizes") {
  Gen g(24);
  for (int trial = 0; trial < 5; ++trial) {
    const Rational x = g.rational(), y = g.rational(), z = g.rational(), u = g.rational();
    for (int n = 0; n <= 8; ++n) {
      const U first = shifted(x, y).pow(n);
      const U second = (c2(u, 0) + c2(-z, 1)).pow(n);
      CHECK((first * second).reduce() == first.reduce() * second.reduce());
    }
  }
}

TEST_CASE("vacuum building block c^a exp(b/c)") {
  Gen g(25);
  for (int trial = 0; trial < 5; ++trial) {
    const Rational b = g.rational();
    for (long a = 0; a <= 8; ++a) {
      const U block = c1(1, Rational(a)) * c1(b, -1).exp(static_cast<int>(a) + 5);
      CHECK(block.reduce() == (Rational(1) + b).pow(a) / factorial(a));
    }
  }
}

TEST_CASE("geometric series in c x^2 reduces to the Gaussian") {
  const int N = 10;
  U f = U::zero_like(1);
  for (int k = 0; k <= N; ++k) f += U::graded(Rational(k % 2 == 0 ? 1 : -1), {Rational(k), kZero}, 2 * k);
  const auto by_degree = f.reduce_by_degree();
  for (int d = 0; d <= 2 * N; ++d) {
    const auto it = by_degree.find(d);
    const Rational got = it == by_degree.end() ? Rational(0) : it->second;
    const Rational want = d % 2 == 1 ? Rational(0) : Rational((d / 2) % 2 == 0 ? 1 : -1) / factorial(d / 2);
    CHECK(got == want);
  }
}

TEST_CASE("dilation") {
  const U j0 = U::graded(Rational(1), {kZero, kZero}, 0) + U::graded(Rational(-1, 4), {Rational(1), kZero}, 2) +
               U::graded(Rational(1, 32), {Rational(2), kZero}, 4);
  const U dil = j0.dilate(Rational(-1, 2));
  for (const auto& [k, c] : dil.terms()) CHECK(k.exponent.first == Rational(0));
  const auto red = dil.reduce_by_degree();
  CHECK(red.at(2) == Rational(-1, 4));
  CHECK(red.at(4) == Rational(1, 32));
  CHECK(j0.dilate(Rational(0)) == j0);
  const U single = U::graded(Rational(1), {Rational(1), kZero}, 2);
  CHECK(single.dilate(Rational(1, 2)).coefficient({Rational(2), kZero}, 2) == Rational(1));
  CHECK_THROWS_AS(c1(1, 1).dilate(Rational(1)), MissingDegreeMetadata);
  CHECK_THROWS_AS(c1(1, 1).reduce_by_degree(), MissingDegreeMetadata);
  CHECK_THROWS_AS(single.reduce(), DomainError);
}

TEST_CASE("x-derivative of a graded series") {
  const U f = U::graded(Rational(3), {Rational(2), kZero}, 4);
  const U d = f.derivative_x();
  CHECK(d.coefficient({Rational(2), kZero}, 3) == Rational(12));
  CHECK(U::graded(Rational(3), {}, 0).derivative_x().empty());
}

TEST_CASE("series-valued coefficients") {
  // exp(-c x t) as a series in t reduces to e^(-x t) coefficientwise: (-x)^n / (n!)^2 ... after c^n -> 1/n!
  const Rational x(2, 5);
  const int N = 8;
  const SeriesUmbralSeries arg = SeriesUmbralSeries::monomial(FormalPowerSeries::monomial(-x, 1, N), {Rational(1), kZero});
  const FormalPowerSeries red = arg.exp(N).reduce();
  for (int n = 0; n <= N; ++n) CHECK(red[n] == (-x).pow(n) / (factorial(n) * factorial(n)));
}

TEST_CASE("float lift agrees with exact reduction") {
  Gen g(26);
  for (int i = 0; i < 10; ++i) {
    const Rational x = g.rational(), y = g.rational();
    const U s = shifted(x, y).pow(6);
    CHECK(std::abs(to_float(s).reduce() - Complex(s.reduce().to_double())) < 1e-12 * (1 + std::abs(s.reduce().to_double())));
  }
}
