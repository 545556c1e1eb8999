#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "lacunary/errors.hpp"
#include "lacunary/gamma.hpp"
#include "lacunary/quadrature.hpp"
#include "lacunary/special_functions.hpp"
#include "lacunary/umbral.hpp"

using namespace lacunary;
using testing_support::Gen;
using testing_support::rel_err;
using F = FloatUmbralSeries;

namespace {

const Rational kZero(0);

F fc1(Complex c, long e) { return F::monomial(c, {Rational(e), kZero}); }
F fc2(Complex c, long e) { return F::monomial(c, {kZero, Rational(e)}); }

// c^s exp(sum_p c^p (-1)^p a_p) reduced: the umbral counterpart of h_tricomi.
Complex umbral_h_tricomi(long s, const std::vector<Complex>& slots, int order) {
  F arg = F::zero_like(Complex(1.0));
  for (std::size_t p = 0; p < slots.size(); ++p) {
    const double sign = (p % 2 == 0) ? -1.0 : 1.0;
    arg += fc1(sign * slots[p], static_cast<long>(p) + 1);
  }
  return (fc1(1.0, s) * arg.exp(order)).reduce();
}

bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("wright") {
  CHECK(close(wright(2.0, 3.0, 0.0), rgamma(3.0), 1e-15));
  CHECK(close(wright(1.0, 1.0, 1.0), 2.2795853023360673, 1e-13));
  CHECK(close(wright(1.0, 2.0, 1.0), 1.5906368546373291, 1e-13));
  for (double x : {0.25, 1.0, 4.0}) {
    CHECK(close(wright(1.0, 1.0, x), bessel_i(0, 2 * std::sqrt(x)), 1e-11));
    CHECK(close(wright(1.0, 1.0, x), std::cyl_bessel_i(0.0, 2 * std::sqrt(x)), 1e-11));
  }
  // W^(1,1)(-x^2/4) = J0(x)
  CHECK(close(wright(1.0, 1.0, -1.0), std::cyl_bessel_j(0.0, 2.0), 1e-12));
}

TEST_CASE("mittag_leffler") {
  CHECK(close(mittag_leffler(1.5, 2.0, 0.0), rgamma(2.0), 1e-15));
  CHECK(close(mittag_leffler(1.0, 1.0, 1.0), std::numbers::e, 1e-13));
  CHECK(close(mittag_leffler(2.0, 1.0, 4.0), std::cosh(2.0), 1e-12));
  for (double x = -5.0; x <= 5.0; x += 0.5) CHECK(close(mittag_leffler(1.0, 1.0, x), std::exp(x), 1e-12));
  CHECK_THROWS_AS(mittag_leffler(1.0, 1.0, 40.0), DomainError);
}

TEST_CASE("tricomi") {
  CHECK(close(tricomi(2.0, 0.0), rgamma(3.0), 1e-15));
  CHECK(close(tricomi(0.0, 1.0), 0.22389077914123567, 1e-13));
  CHECK(close(tricomi(1.0, 0.0), 1.0, 1e-15));
  for (double x : {0.5, 1.0, 3.0}) {
    CHECK(close(tricomi(0.0, x * x / 4), std::cyl_bessel_j(0.0, x), 1e-11));
    CHECK(close(tricomi(0.0, x * x / 4), h_bessel_j(0, x, 0.0), 1e-11));
  }
}

TEST_CASE("h_tricomi slot collapse and degenerate slots") {
  const std::vector<Complex> zeros{0.0, 0.0};
  CHECK(close(h_tricomi(0.0, zeros), 1.0, 1e-15));
  for (double a : {0.3, 1.2, -0.7}) {
    for (double s : {0.0, 1.0, 2.5}) {
      const std::vector<Complex> slots{a, 0.0};
      CHECK(close(h_tricomi(s, slots), tricomi(s, a), 1e-12));
    }
  }
  CHECK_THROWS(h_tricomi(HBasedSpec{0.0, {1.0}, SlotSigns::Alternating}));
}

TEST_CASE("h_tricomi matches the umbral exponential") {
  const double x = 1, y = 1, t = 0.1;
  const std::vector<Complex> slots{2 * x * y * t, x * x * t};
  CHECK(close(h_tricomi(0.0, slots), umbral_h_tricomi(0, slots, 60), 1e-10));
  Gen g(41);
  for (int m = 2; m <= 4; ++m) {
    for (int i = 0; i < 3; ++i) {
      std::vector<Complex> s;
      for (int p = 0; p < m; ++p) s.emplace_back(g.real(-0.8, 0.8));
      const long idx = g.integer(0, 3);
      CHECK(close(h_tricomi(static_cast<double>(idx), s), umbral_h_tricomi(idx, s, 60), 1e-10));
    }
  }
}

TEST_CASE("h_tricomi sign conventions") {
  const std::vector<Complex> slots{0.4, 0.3};
  const Complex alt = h_tricomi(HBasedSpec{1.0, slots, SlotSigns::Alternating});
  const Complex given = h_tricomi(HBasedSpec{1.0, {-0.4, 0.3}, SlotSigns::AsGiven});
  CHECK(close(alt, given, 1e-14));
}

TEST_CASE("h_wright") {
  CHECK(close(h_wright(1.0, 2.0, 0.0, 0.0), rgamma(2.0), 1e-15));
  for (double x : {0.3, -1.1}) CHECK(close(h_wright(2.0, 1.5, x, 0.0), wright(2.0, 1.5, x), 1e-12));
  // sum H_r^(2)(x,y)/(r! Gamma(r+1)) against the umbral expansion exp(c x + c^2 y)
  const double x = -0.6, y = 0.25;
  const Complex oracle = (fc1(x, 1) + fc1(y, 2)).exp(60).reduce();
  CHECK(close(h_wright(1.0, 1.0, x, y), oracle, 1e-10));
}

TEST_CASE("h_tricomi_bilateral") {
  CHECK(close(h_tricomi_bilateral(0.0, 0.0, 0.0), 1.0, 1e-15));
  for (double x : {0.5, 2.0}) {
    CHECK(close(h_tricomi_bilateral(x, 0.0, 0.0), std::cyl_bessel_i(0.0, 2 * std::sqrt(x)), 1e-11));
  }
  const double a = -0.2, b = -0.3, c = 0.06;
  const F two = fc1(a, 1) + fc2(b, 1) + F::monomial(c, {Rational(1), Rational(1)});
  CHECK(close(h_tricomi_bilateral(a, b, c), two.exp(40).reduce(), 1e-11));
  Gen g(42);
  for (int i = 0; i < 5; ++i) {
    const double x = g.real(-1, 1), y = g.real(-1, 1), t = g.real(-0.5, 0.5);
    CHECK(close(h_tricomi_bilateral(x, y, t), h_tricomi_bilateral(y, x, t), 1e-14));
  }
}

TEST_CASE("h_bessel_j") {
  CHECK(close(h_bessel_j(0, 2.0, 0.0), 0.22389077914123567, 1e-12));
  CHECK(std::abs(h_bessel_j(1, 0.0, 0.7)) < 1e-15);
  CHECK(close(h_bessel_j(0, 0.0, 0.0), 1.0, 1e-15));
  for (int n = 0; n <= 3; ++n) CHECK(close(h_bessel_j(n, 1.7, 0.0), std::cyl_bessel_j(double(n), 1.7), 1e-12));
}

TEST_CASE("bessel functions") {
  CHECK(close(bessel_i(0, 0.0), 1.0, 1e-15));
  CHECK(std::abs(bessel_i(1, 0.0)) == 0.0);
  CHECK(close(bessel_i(0, 2.0), 2.2795853023360673, 1e-13));
  for (int m = 0; m <= 4; ++m) {
    for (double z : {0.1, 1.0, 5.0, 12.0}) {
      CHECK(close(bessel_i(m, z), std::cyl_bessel_i(double(m), z), 1e-12));
      CHECK(std::abs(bessel_j(m, z) - std::cyl_bessel_j(double(m), z)) < 1e-11);
    }
  }
}

TEST_CASE("Hermite stream and binomial slots") {
  const auto slots = binomial_slots(3, 0.5, 2.0, 0.1);
  REQUIRE(slots.size() == 3);
  CHECK(close(slots[0], 3 * 0.5 * 4 * 0.1, 1e-15));
  CHECK(close(slots[1], 3 * 0.25 * 2 * 0.1, 1e-15));
  CHECK(close(slots[2], 0.125 * 0.1, 1e-15));
  const auto zero_y = binomial_slots(2, 1.0, 0.0, 1.0);
  CHECK(zero_y[0] == Complex(0.0));
  CHECK(zero_y[1] == Complex(1.0));
  HermiteScaledStream s({0.3, -0.2});
  // H_2^(2)(a, b)/2! = (a^2 + 2b)/2
  CHECK(close(s[2], (0.09 - 0.4) / 2, 1e-15));
  CHECK(close(s[0], 1.0, 1e-15));
}

TEST_CASE("Gauss-Laguerre rules") {
  for (int n : {5, 24, 48}) {
    const auto rule = gauss_laguerre(n);
    REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
    double sum = 0.0;
    for (double w : rule.weights) sum += w;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
    // exact for s^k, k <= 2n-1
    for (int k = 1; k <= std::min(2 * n - 1, 12); ++k) {
      double m = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) m += rule.weights[i] * std::pow(rule.nodes[i], k);
      CHECK(rel_err(m, std::tgamma(k + 1.0)) < 1e-10);
    }
  }
}

TEST_CASE("Borel transform of J0") {
  CHECK(std::abs(borel_j0(0.0, 1e-10).value - 1.0) < 1e-12);
  CHECK(std::abs(borel_j0(2.0, 1e-10).value - std::exp(-1.0)) < 1e-8);
  for (double x : {0.5, 1.0, 3.0}) CHECK(std::abs(borel_j0(x, 1e-10).value - std::exp(-x * x / 4)) < 1e-8);
  CHECK_THROWS_AS(integrate_laguerre_weight([](double s) { return std::cos(40 * s) * std::exp(s / 2); }, 1e-12, {4, 8}),
                  QuadratureFailure);
}
