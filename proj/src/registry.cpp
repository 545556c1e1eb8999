#include <cmath>
#include <mutex>
#include <numbers>

#include "lacunary/errors.hpp"
#include "lacunary/fps.hpp"
#include "lacunary/gamma.hpp"
#include "lacunary/identities.hpp"
#include "lacunary/polynomials.hpp"
#include "lacunary/special_functions.hpp"
#include "lacunary/umbral.hpp"

namespace lacunary {

namespace {

using Coeffs = std::vector<Rational>;
using Values = std::vector<double>;
const Complex I(0.0, 1.0);

Rational q(long a, long b = 1) { return Rational(a, b); }

template <class F>
Coeffs coeff_list(int order, F&& f) {
  Coeffs out;
  for (int n = 0; n <= order; ++n) out.push_back(f(n));
  return out;
}

template <class F>
FormalPowerSeries series_of(int order, F&& f) {
  return FormalPowerSeries(coeff_list(order, f));
}

// a + b t
FormalPowerSeries linear(const Rational& a, const Rational& b, int order) {
  FormalPowerSeries f(order);
  f.set(0, a);
  if (order >= 1) f.set(1, b);
  return f;
}

Rational inv_fact(long n) { return factorial(n).inverse(); }

// 1/k! in double, zero once it underflows.
double rfact(int k) { return rgamma(static_cast<double>(k) + 1.0); }

ClosedForm checked_form(std::string label, std::function<Complex(const Values&, const SumControl&)> f) {
  return ClosedForm{std::move(label), std::move(f), true};
}

ClosedForm printed_form(std::string label, std::function<Complex(const Values&, const SumControl&)> f) {
  return ClosedForm{std::move(label), std::move(f), false};
}

std::vector<Point> points(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<Point> out;
  for (const auto& r : rows) out.emplace_back(r);
  return out;
}

std::string num(long v) { return std::to_string(v); }

// (i x sqrt t)^r H_r(i sqrt t) / r! = H_r^(2)(-2xt, x^2 t) / r!, the y = 1 Hermite weight.
class ClassicalWeight {
 public:
  ClassicalWeight(double x, double t) : u_(I * x * std::sqrt(t)), z_(I * std::sqrt(t)) {}
  Complex operator()(int r) { return ipow(u_, r) * hermite_classical(r, z_) * rfact(r); }

 private:
  Complex u_, z_;
};

// H_r^(3)(-3tx, 3tx^2, -tx^3)/r! written through classical Hermite polynomials:
// sum_k (-t x^3)^k (i x sqrt(3t))^(r-3k) H_(r-3k)(i sqrt(3t)/2) / (k! (r-3k)!).
Complex triple_bracket(int r, double x, double t) {
  const Complex u = I * x * std::sqrt(3.0 * t);
  const Complex z = I * std::sqrt(3.0 * t) / 2.0;
  Complex s(0.0);
  for (int k = 0; 3 * k <= r; ++k) {
    s += std::pow(-t * x * x * x, k) * ipow(u, r - 3 * k) * hermite_classical(r - 3 * k, z) * rfact(k) *
         rfact(r - 3 * k);
  }
  return s;
}

// ---------------------------------------------------------------- Λ families

IdentityCase eq_1_7() {
  IdentityCase c;
  c.id = "EQ1.7";
  c.paper_ref = "sum_n t^n/n! Lambda_n^(a,b)(x,y) = e^(yt) W^(b,a+1)(-tx)";
  c.modes = {CheckMode::ExactCoeff, CheckMode::NumericPointwise};
  for (auto [a, b] : std::vector<std::pair<long, long>>{{0, 1}, {2, 1}, {1, 2}, {3, 3}}) {
    const std::string tag = "alpha=" + num(a) + ", beta=" + num(b);
    CoefficientVariant v;
    v.label = tag;
    v.parameter_names = {"x", "y"};
    v.tuples = points({{1, 1}, {q(2, 3), q(-1, 2)}, {-3, q(5, 4)}});
    v.lhs = [a, b](const Point& p, int N) {
      return coeff_list(N, [&](int n) { return lambda_poly<Rational>(n, a, b, p[0], p[1]) * inv_fact(n); });
    };
    v.rhs = [a, b](const Point& p, int N) {
      const auto w = series_of(N, [&](int r) { return (-p[0]).pow(r) * inv_fact(r) * rgamma_exact(Rational(b * r + a + 1)); });
      return (exp_series(linear(0, p[1], N)) * w).coeffs();
    };
    c.exact.push_back(v);

    PointwiseVariant pv;
    pv.label = tag;
    pv.parameter_names = {"x", "y", "t"};
    pv.grid = points({{1, 1, q(1, 2)}, {q(1, 2), 2, q(1, 4)}, {3, -1, q(1, 10)}, {-2, q(1, 2), 1}});
    pv.lhs_term = [a, b](const Point& p, int n) {
      return p[2].pow(n) * inv_fact(n) * lambda_poly<Rational>(n, a, b, p[0], p[1]);
    };
    pv.rhs = {checked_form("e^(yt) W(-tx)", [a, b](const Values& v, const SumControl& ctrl) {
      return std::exp(v[1] * v[2]) * wright(static_cast<double>(b), a + 1.0, -v[2] * v[0], ctrl);
    })};
    c.numeric.push_back(pv);
  }
  return c;
}

IdentityCase eq_1_9() {
  IdentityCase c;
  c.id = "EQ1.9";
  c.paper_ref = "sum_n t^n Lambda_n^(a,b)(x,y) = 1/(1-ty) E_(b,a+1)(-tx/(1-ty))";
  c.modes = {CheckMode::ExactCoeff, CheckMode::NumericPointwise};
  for (auto [a, b] : std::vector<std::pair<long, long>>{{0, 1}, {1, 1}, {2, 2}, {1, 3}}) {
    const std::string tag = "alpha=" + num(a) + ", beta=" + num(b);
    CoefficientVariant v;
    v.label = tag;
    v.parameter_names = {"x", "y"};
    v.tuples = points({{1, 1}, {q(1, 2), q(-3, 2)}, {-2, q(2, 5)}});
    v.lhs = [a, b](const Point& p, int N) {
      return coeff_list(N, [&](int n) { return lambda_poly<Rational>(n, a, b, p[0], p[1]); });
    };
    v.rhs = [a, b](const Point& p, int N) {
      const auto geo = reciprocal(linear(1, -p[1], N));
      const auto arg = linear(0, -p[0], N) * geo;
      const auto ml = series_of(N, [&](int r) { return rgamma_exact(Rational(b * r + a + 1)); });
      return (geo * compose(ml, arg)).coeffs();
    };
    c.exact.push_back(v);

    PointwiseVariant pv;
    pv.label = tag;
    pv.parameter_names = {"x", "y", "t"};
    pv.grid = points({{1, 1, q(1, 5)}, {q(1, 2), q(1, 2), q(1, 4)}, {2, q(-1, 2), q(1, 10)}, {-1, 1, q(1, 3)}});
    pv.in_domain = [](const Point& p) { return (p[1] * p[2]).abs() < Rational(1); };
    pv.lhs_term = [a, b](const Point& p, int n) { return p[2].pow(n) * lambda_poly<Rational>(n, a, b, p[0], p[1]); };
    pv.rhs = {checked_form("E(-tx/(1-ty))/(1-ty)", [a, b](const Values& v, const SumControl& ctrl) {
      const double d = 1.0 - v[2] * v[1];
      return mittag_leffler(static_cast<double>(b), a + 1.0, -v[2] * v[0] / d, ctrl) / d;
    })};
    c.numeric.push_back(pv);
  }
  return c;
}

IdentityCase eq_1_11() {
  IdentityCase c;
  c.id = "EQ1.11";
  c.paper_ref = "sum_n t^n L_n^(a)(x,y) = exp(-tx/(1-ty)) / (1-ty)^(1+a)";
  c.modes = {CheckMode::ExactCoeff};
  for (long a : {0L, 1L, 2L, 3L}) {
    CoefficientVariant v;
    v.label = "alpha=" + num(a);
    v.parameter_names = {"x", "y"};
    v.tuples = points({{q(2, 3), 1}, {1, 1}, {q(-5, 2), q(3, 4)}, {3, -2}});
    v.lhs = [a](const Point& p, int N) {
      return coeff_list(N, [&](int n) { return assoc_laguerre<Rational>(n, Rational(a), p[0], p[1]); });
    };
    v.rhs = [a](const Point& p, int N) {
      const auto base = linear(1, -p[1], N);
      const auto e = exp_series(linear(0, -p[0], N) * reciprocal(base));
      return (e * power(base, -(1 + a))).coeffs();
    };
    c.exact.push_back(v);
  }
  return c;
}

IdentityCase eq_1_12() {
  IdentityCase c;
  c.id = "EQ1.12";
  c.paper_ref =
      "sum_n t^n/n! L_n^(m)(x,y) = e^(ty) sum_(r<=m) C(m,r) m!/r! sum_(s<=r) C(r,s) (ty)^(r-s) (-xt)^s W^(1,m+s+1)(-tx)";
  c.modes = {CheckMode::NumericPointwise};
  for (int m : {1, 2, 3}) {
    PointwiseVariant pv;
    pv.label = "m=" + num(m);
    pv.parameter_names = {"x", "y", "t"};
    pv.grid = points({{1, 1, q(1, 2)}, {2, q(1, 2), q(1, 3)}, {q(-1, 2), q(3, 2), q(1, 5)}, {3, 1, 1}});
    pv.lhs_term = [m](const Point& p, int n) {
      return p[2].pow(n) * inv_fact(n) * assoc_laguerre<Rational>(n, Rational(m), p[0], p[1]);
    };
    pv.rhs = {checked_form("finite Wright sum", [m](const Values& v, const SumControl& ctrl) {
      const double x = v[0], y = v[1], t = v[2];
      Complex total(0.0);
      for (int r = 0; r <= m; ++r) {
        Complex inner(0.0);
        for (int s = 0; s <= r; ++s) {
          inner += binomial(r, s).to_double() * std::pow(t * y, r - s) * std::pow(-x * t, s) *
                   wright(1.0, m + s + 1.0, -t * x, ctrl);
        }
        total += binomial(m, r).to_double() * factorial(m).to_double() * rfact(r) * inner;
      }
      return std::exp(t * y) * total;
    })};
    c.numeric.push_back(pv);
  }
  return c;
}

// ------------------------------------------------------- double lacunary

// e^(y^2 t) sum_r H_r^(2)(-2xyt, x^2 t)/(r!)^2 through t^N, straight from
// the explicit double sum of H^(2).
Coeffs double_lacunary_h_sum(const Point& p, int N) {
  const Rational a = Rational(-2) * p[0] * p[1];
  const Rational b = p[0] * p[0];
  FormalPowerSeries s(N);
  for (int r = 0; r <= 2 * N; ++r) {
    for (int k = 0; 2 * k <= r; ++k) {
      const int tdeg = r - k;
      if (tdeg > N) continue;
      // H_r^(2)(a t, b t) = r! sum_k (a t)^(r-2k) (b t)^k / (k! (r-2k)!)
      const Rational coef = a.pow(r - 2 * k) * b.pow(k) * inv_fact(k) * inv_fact(r - 2 * k) * inv_fact(r);
      s.set(tdeg, s[tdeg] + coef);
    }
  }
  return (exp_series(linear(0, p[1] * p[1], N)) * s).coeffs();
}

Coeffs double_lacunary_umbral(const Point& p, int N, int umbral_order) {
  // exp(t (c^2 x^2 - 2 c x y)) with t-series coefficients, reduced
  const auto first = SeriesUmbralSeries::monomial(linear(0, Rational(-2) * p[0] * p[1], N), {Rational(1), Rational(0)});
  const auto second = SeriesUmbralSeries::monomial(linear(0, p[0] * p[0], N), {Rational(2), Rational(0)});
  const FormalPowerSeries reduced = (first + second).exp(umbral_order).reduce();
  return (exp_series(linear(0, p[1] * p[1], N)) * reduced).coeffs();
}

IdentityCase eq_2_7() {
  IdentityCase c;
  c.id = "EQ2.7";
  c.paper_ref = "sum_n t^n/n! L_2n(x) = e^t sum_r (i x sqrt t)^r/(r!)^2 H_r(i sqrt t)";
  c.modes = {CheckMode::ExactCoeff, CheckMode::NumericPointwise};

  CoefficientVariant hsum;
  hsum.label = "Hermite double sum";
  hsum.parameter_names = {"x", "y"};
  hsum.tuples = points({{1, 1}, {q(1, 2), 2}, {q(-3, 2), q(2, 3)}});
  hsum.lhs = [](const Point& p, int N) {
    return coeff_list(N, [&](int n) { return laguerre<Rational>(2 * n, p[0], p[1]) * inv_fact(n); });
  };
  hsum.rhs = double_lacunary_h_sum;
  c.exact.push_back(hsum);
  CoefficientVariant umb = hsum;
  umb.label = "umbral exponential";
  umb.rhs = [](const Point& p, int N) { return double_lacunary_umbral(p, N, N); };
  c.exact.push_back(umb);

  PointwiseVariant y1;
  y1.label = "y=1";
  y1.parameter_names = {"x", "t"};
  y1.grid = points({{1, q(1, 10)}, {2, q(1, 4)}, {q(1, 2), q(1, 2)}, {3, q(1, 20)}});
  y1.lhs_term = [](const Point& p, int n) { return p[1].pow(n) * inv_fact(n) * laguerre<Rational>(2 * n, p[0], Rational(1)); };
  y1.rhs = {checked_form("classical Hermite series", [](const Values& v, const SumControl& ctrl) {
    ClassicalWeight w(v[0], v[1]);
    return std::exp(v[1]) * sum_in_blocks([&](int r) { return w(r) * rfact(r); }, 2, ctrl);
  })};
  c.numeric.push_back(y1);

  PointwiseVariant gy;
  gy.label = "two-variable";
  gy.parameter_names = {"x", "y", "t"};
  gy.grid = points({{1, 1, q(1, 10)}, {q(1, 2), 2, q(1, 8)}, {-1, q(3, 2), q(1, 5)}});
  gy.lhs_term = [](const Point& p, int n) { return p[2].pow(n) * inv_fact(n) * laguerre<Rational>(2 * n, p[0], p[1]); };
  gy.rhs = {checked_form("e^(y^2 t) HC_0(2xyt, x^2 t)",
                         [](const Values& v, const SumControl& ctrl) {
                           const double x = v[0], y = v[1], t = v[2];
                           const std::vector<Complex> slots{2 * x * y * t, x * x * t};
                           return std::exp(y * y * t) * h_tricomi(0.0, slots, ctrl);
                         }),
            printed_form("printed argument HC_0(-2xyt, x^2 t)", [](const Values& v, const SumControl& ctrl) {
              const double x = v[0], y = v[1], t = v[2];
              const std::vector<Complex> slots{-2 * x * y * t, x * x * t};
              return std::exp(y * y * t) * h_tricomi(0.0, slots, ctrl);
            })};
  c.numeric.push_back(gy);
  c.notes.push_back(
      "two-variable form uses HC_0 with Hermite arguments (-a1, a2), the sign fixed by the umbral expansion; the printed "
      "argument -2xyt flips the odd terms and is reported unchecked");
  return c;
}

const DerivedAuxPolynomial& derived_aux(AuxFamily f, int m) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, DerivedAuxPolynomial> cache;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(static_cast<int>(f), m);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, derive_aux_polynomial(f, m)).first;
  return it->second;
}

// sum_r P(r) a_r / (r+k)! with a_r = H_r^(2)(-2xyt, x^2 t)/r!
Complex aux_h2_sum(const DerivedAuxPolynomial& p, double x, double y, double t, const SumControl& ctrl) {
  HermiteScaledStream a({-2 * x * y * t, x * x * t});
  const int k = p.factorial_offset;
  return std::exp(t * y * y) *
         sum_in_blocks([&](int r) { return p.evaluate(r, t, x, y) * a[r] * rfact(r + k); }, 2, ctrl);
}

IdentityCase eq_2_8() {
  IdentityCase c;
  c.id = "EQ2.8";
  c.paper_ref = "sum_n t^n/n! L_2n^(m)(x) = e^t sum_r p_2m(r;x,1,t)/(r!(r+3m)!) (i x sqrt t)^r H_r(i sqrt t)";
  c.modes = {CheckMode::NumericPointwise};
  for (int m : {1, 2}) {
    const DerivedAuxPolynomial& p = derived_aux(AuxFamily::P, m);
    const DerivedAuxPolynomial printed = printed_aux_polynomial(AuxFamily::P, m);
    const AuxComparison cmp = compare_with_printed(p);
    c.notes.push_back("p_" + num(2 * m) + " derived: " + p.str());
    c.notes.push_back(std::string("p_") + num(2 * m) + (cmp.matches_paper ? " agrees with the printed polynomial"
                                                                              : " differs from the printed polynomial"));
    for (const auto& d : cmp.deviations) c.notes.push_back("paper_deviation p_" + num(2 * m) + ": " + d);
    for (const auto& n : p.notes) c.notes.push_back("p_" + num(2 * m) + ": " + n);

    PointwiseVariant y1;
    y1.label = "m=" + num(m) + ", y=1";
    y1.parameter_names = {"x", "t"};
    y1.grid = points({{1, q(1, 10)}, {q(1, 2), q(1, 4)}, {2, q(1, 20)}});
    y1.lhs_term = [m](const Point& p, int n) {
      return p[1].pow(n) * inv_fact(n) * assoc_laguerre<Rational>(2 * n, Rational(m), p[0], Rational(1));
    };
    auto with_poly = [](const DerivedAuxPolynomial& poly) {
      return [poly](const Values& v, const SumControl& ctrl) {
        const double x = v[0], t = v[1];
        ClassicalWeight w(x, t);
        const int k = poly.factorial_offset;
        return std::exp(t) *
               sum_in_blocks([&](int r) { return poly.evaluate(r, t, x, 1.0) * w(r) * rfact(r + k); }, 2, ctrl);
      };
    };
    y1.rhs = {checked_form("derived p, classical Hermite", with_poly(p)),
              printed_form("printed p", with_poly(printed))};
    c.numeric.push_back(y1);

    PointwiseVariant gy;
    gy.label = "m=" + num(m) + ", two-variable";
    gy.parameter_names = {"x", "y", "t"};
    gy.grid = points({{1, 2, q(1, 20)}, {q(1, 2), q(3, 2), q(1, 10)}, {-1, q(1, 2), q(1, 4)}});
    gy.lhs_term = [m](const Point& p, int n) {
      return p[2].pow(n) * inv_fact(n) * assoc_laguerre<Rational>(2 * n, Rational(m), p[0], p[1]);
    };
    gy.rhs = {checked_form("derived p, H^(2) series", [p](const Values& v, const SumControl& ctrl) {
      return aux_h2_sum(p, v[0], v[1], v[2], ctrl);
    })};
    c.numeric.push_back(gy);
  }
  return c;
}

IdentityCase eq_2_9() {
  IdentityCase c;
  c.id = "EQ2.9";
  c.paper_ref = "sum_n t^n/n! Lambda_2n^(a,b)(x,y) = e^(y^2 t) HW^(b,a+1)(-2xyt, x^2 t)";
  c.modes = {CheckMode::NumericPointwise};
  for (long a : {0L, 1L, 2L}) {
    for (long b : {1L, 2L}) {
      PointwiseVariant pv;
      pv.label = "alpha=" + num(a) + ", beta=" + num(b);
      pv.parameter_names = {"x", "y", "t"};
      pv.grid = points({{1, 1, q(1, 20)}, {q(1, 2), 2, q(1, 10)}, {-1, q(1, 2), q(1, 4)}});
      pv.lhs_term = [a, b](const Point& p, int n) {
        return p[2].pow(n) * inv_fact(n) * lambda_poly<Rational>(2 * n, a, b, p[0], p[1]);
      };
      pv.rhs = {checked_form("e^(y^2 t) HW", [a, b](const Values& v, const SumControl& ctrl) {
        const double x = v[0], y = v[1], t = v[2];
        return std::exp(y * y * t) * h_wright(static_cast<double>(b), a + 1.0, -2 * x * y * t, x * x * t, ctrl);
      })};
      c.numeric.push_back(pv);
    }
  }
  c.notes.push_back(
      "HW^(b,a+1) is read with the Wright parameter order, sum H_r/(r! Gamma(b r + a + 1)); the y=0 limit then "
      "reduces to the single-lacunary Wright form");
  return c;
}

IdentityCase eq_2_10() {
  IdentityCase c;
  c.id = "EQ2.10";
  c.paper_ref = "sum_n t^n L_2n(x) = 1/(1-t) sum_r L_r^(r)(x/2)/(1/2)_r [-tx/(2(1-t))]^r";
  c.modes = {CheckMode::NumericPointwise};
  PointwiseVariant pv;
  pv.label = "y=1";
  pv.parameter_names = {"x", "t"};
  pv.grid = points({{q(7, 10), q(1, 5)}, {1, q(1, 10)}, {2, q(3, 10)}, {q(1, 2), q(1, 2)}});
  pv.in_domain = [](const Point& p) { return p[1].abs() < Rational(1); };
  pv.lhs_term = [](const Point& p, int n) { return p[1].pow(n) * laguerre<Rational>(2 * n, p[0], Rational(1)); };
  pv.rhs = {checked_form("associated Laguerre series", [](const Values& v, const SumControl& ctrl) {
    const double x = v[0], t = v[1];
    const double z = -t * x / (2 * (1 - t));
    auto term = [&](int r) {
      return assoc_laguerre<double>(r, r, x / 2, 1.0) / pochhammer(0.5, r) * std::pow(z, r);
    };
    return sum_series(term, ctrl).value / (1 - t);
  })};
  c.numeric.push_back(pv);
  return c;
}

IdentityCase eq_2_11() {
  IdentityCase c;
  c.id = "EQ2.11";
  c.paper_ref =
      "sum_n t^n L_3n(x) = 1/(1-t) sum_r (-3tx/(1-t))^r sum_(s<=r) r! (-x)^s/((r-s)! (r+2s)!) L_s^(s+r)(x/3)";
  c.modes = {CheckMode::NumericPointwise};
  PointwiseVariant pv;
  pv.label = "y=1";
  pv.parameter_names = {"x", "t"};
  pv.grid = points({{q(7, 10), q(1, 5)}, {1, q(1, 10)}, {2, q(1, 10)}, {q(1, 2), q(2, 5)}});
  pv.in_domain = [](const Point& p) { return p[1].abs() < Rational(1); };
  pv.lhs_term = [](const Point& p, int n) { return p[1].pow(n) * laguerre<Rational>(3 * n, p[0], Rational(1)); };
  pv.rhs = {checked_form("nested associated Laguerre series", [](const Values& v, const SumControl& ctrl) {
    const double x = v[0], t = v[1];
    const double z = -3 * t * x / (1 - t);
    auto term = [&](int r) {
      double inner = 0.0;
      for (int s = 0; s <= r; ++s) {
        // r!/((r-s)! (r+2s)!) = 1/((r-s)! (r+1)_(2s))
        const double w = rfact(r - s) / pochhammer(static_cast<double>(r + 1), 2 * s);
        inner += w * std::pow(-x, s) * assoc_laguerre<double>(s, s + r, x / 3, 1.0);
      }
      return std::pow(z, r) * inner;
    };
    return sum_series(term, ctrl).value / (1 - t);
  })};
  c.numeric.push_back(pv);
  return c;
}

IdentityCase eq_2_13() {
  IdentityCase c;
  c.id = "EQ2.13";
  c.paper_ref = "sum_n t^n L_n^(a-n)(x,y) = (1+yt)^a e^(-tx)";
  c.modes = {CheckMode::ExactCoeff, CheckMode::NumericPointwise};
  for (long a : {0L, 1L, 3L, 5L}) {
    CoefficientVariant v;
    v.label = "alpha=" + num(a);
    v.parameter_names = {"x", "y"};
    v.tuples = points({{1, 1}, {q(2, 3), q(-1, 2)}, {-3, q(5, 4)}});
    v.lhs = [a](const Point& p, int N) {
      return coeff_list(N, [&](int n) { return assoc_laguerre<Rational>(n, Rational(a - n), p[0], p[1]); });
    };
    v.rhs = [a](const Point& p, int N) {
      return (power(linear(1, p[1], N), a) * exp_series(linear(0, -p[0], N))).coeffs();
    };
    c.exact.push_back(v);
  }
  CoefficientVariant block;
  block.label = "vacuum building block c^a e^(b/c), alpha=0..8";
  block.parameter_names = {"b"};
  block.tuples = points({{q(1, 2)}, {q(-2, 3)}, {3}});
  block.lhs = [](const Point& p, int) {
    return coeff_list(8, [&](int a) { return (Rational(1) + p[0]).pow(a) * inv_fact(a); });
  };
  block.rhs = [](const Point& p, int) {
    return coeff_list(8, [&](int a) {
      const auto arg = ExactUmbralSeries::monomial(p[0], {Rational(-1), Rational(0)});
      const auto lift = ExactUmbralSeries::monomial(Rational(1), {Rational(a), Rational(0)});
      return (lift * arg.exp(a + 5)).reduce();
    });
  };
  c.exact.push_back(block);

  for (const Rational& a : {Rational(3), Rational(1, 2), Rational(-1, 3)}) {
    PointwiseVariant pv;
    pv.label = "alpha=" + a.str();
    pv.parameter_names = {"x", "y", "t"};
    pv.grid = points({{1, 1, q(1, 5)}, {2, q(-1, 2), q(1, 2)}, {q(1, 2), 3, q(1, 10)}});
    pv.in_domain = [](const Point& p) { return (p[1] * p[2]).abs() < Rational(1); };
    pv.lhs_term = [a](const Point& p, int n) { return p[2].pow(n) * assoc_laguerre<Rational>(n, a - Rational(n), p[0], p[1]); };
    const double ad = a.to_double();
    pv.rhs = {checked_form("(1+yt)^a e^(-tx)", [ad](const Values& v, const SumControl&) {
      return Complex(std::pow(1 + v[1] * v[2], ad) * std::exp(-v[2] * v[0]));
    })};
    c.numeric.push_back(pv);
  }
  c.notes.push_back("the doubled '= =' in the printed derivation is read as a single equality with factor e^(-tx)");
  return c;
}

IdentityCase eq_2_14() {
  IdentityCase c;
  c.id = "EQ2.14";
  c.paper_ref = "sum_n t^n L_2n^(a-2n)(x,y) = (1-ty^2)^(a/2) cosh(sqrt(t) x - iT), T = a asin(sqrt(t) y/sqrt(ty^2-1))";
  c.modes = {CheckMode::NumericPointwise};
  for (const Rational& a : {Rational(1, 2), Rational(2), Rational(5, 2)}) {
    PointwiseVariant pv;
    pv.label = "alpha=" + a.str();
    pv.parameter_names = {"x", "y", "t"};
    pv.grid = points({{0, 1, q(1, 100)}, {1, 1, q(1, 4)}, {2, q(1, 2), 1}, {q(1, 2), q(3, 2), q(1, 4)}, {q(3, 2), 1, q(3, 5)}});
    pv.in_domain = [](const Point& p) {
      const Rational s = p[2] * p[1] * p[1];
      return s > Rational(0) && s < Rational(9, 10) && p[0] >= Rational(0) && p[0] <= Rational(2);
    };
    pv.lhs_term = [a](const Point& p, int n) {
      return p[2].pow(n) * assoc_laguerre<Rational>(2 * n, a - Rational(2 * n), p[0], p[1]);
    };
    const double ad = a.to_double();
    pv.rhs = {checked_form("principal-branch complex form",
                           [ad](const Values& v, const SumControl&) {
                             const double x = v[0], y = v[1], t = v[2];
                             const Complex T = ad * std::asin(std::sqrt(t) * y / std::sqrt(Complex(t * y * y - 1.0, 0.0)));
                             return std::pow(1.0 - t * y * y, ad / 2) * std::cosh(std::sqrt(t) * x - I * T);
                           }),
              checked_form("real form with artanh", [ad](const Values& v, const SumControl&) {
                const double x = v[0], y = v[1], s = std::sqrt(v[2]);
                return Complex(std::pow(1.0 - s * s * y * y, ad / 2) * std::cosh(s * x - ad * std::atanh(s * y)));
              })};
    c.numeric.push_back(pv);
  }
  return c;
}

// ------------------------------------------------------ shifted lacunary

IdentityCase eq_3_1() {
  IdentityCase c;
  c.id = "EQ3.1";
  c.paper_ref = "sum_n t^n/n! L_(2n+l)(x) = e^t l! sum_r (i x sqrt t)^r/(r!(l+r)!) L_l^(r)(x) H_r(i sqrt t)";
  c.modes = {CheckMode::NumericPointwise};
  for (int l : {1, 2, 3}) {
    PointwiseVariant y1;
    y1.label = "l=" + num(l) + ", y=1";
    y1.parameter_names = {"x", "t"};
    y1.grid = points({{1, q(1, 10)}, {q(1, 2), q(1, 4)}, {2, q(1, 20)}, {-1, q(1, 5)}});
    y1.lhs_term = [l](const Point& p, int n) {
      return p[1].pow(n) * inv_fact(n) * laguerre<Rational>(2 * n + l, p[0], Rational(1));
    };
    y1.rhs = {checked_form("binomial bracket", [l](const Values& v, const SumControl& ctrl) {
                const double x = v[0], t = v[1];
                ClassicalWeight w(x, t);
                auto f = [&](int r) {
                  double bracket = 0.0;
                  for (int s = 0; s <= l; ++s) bracket += binomial(l, s).to_double() * std::pow(-x, s) * rfact(r + s);
                  return w(r) * bracket;
                };
                return std::exp(t) * sum_in_blocks(f, 2, ctrl);
              }),
              checked_form("associated Laguerre form", [l](const Values& v, const SumControl& ctrl) {
                const double x = v[0], t = v[1];
                ClassicalWeight w(x, t);
                auto f = [&](int r) { return w(r) * rfact(l + r) * assoc_laguerre<double>(l, r, x, 1.0); };
                return std::exp(t) * factorial(l).to_double() * sum_in_blocks(f, 2, ctrl);
              })};
    c.numeric.push_back(y1);

    PointwiseVariant gy;
    gy.label = "l=" + num(l) + ", two-variable";
    gy.parameter_names = {"x", "y", "t"};
    gy.grid = points({{1, 2, q(1, 10)}, {q(1, 2), q(3, 2), q(1, 8)}, {-1, q(1, 2), q(1, 5)}});
    gy.lhs_term = [l](const Point& p, int n) {
      return p[2].pow(n) * inv_fact(n) * laguerre<Rational>(2 * n + l, p[0], p[1]);
    };
    gy.rhs = {checked_form("H-based Tricomi sum", [l](const Values& v, const SumControl& ctrl) {
      const double x = v[0], y = v[1], t = v[2];
      const std::vector<Complex> slots{2 * x * y * t, x * x * t};
      Complex s(0.0);
      for (int k = 0; k <= l; ++k) {
        s += binomial(l, k).to_double() * std::pow(y, l - k) * std::pow(-x, k) * h_tricomi(k, slots, ctrl);
      }
      return std::exp(y * y * t) * s;
    })};
    c.numeric.push_back(gy);
  }
  return c;
}

IdentityCase eq_3_3() {
  IdentityCase c;
  c.id = "EQ3.3";
  c.paper_ref =
      "sum_n t^n/n! L_(3n+l)(x) = e^t l! sum_n L_l^(n)(x)/(n+l)! sum_(r<=n/3) (-tx^3)^r (i x sqrt(3t))^(n-3r) "
      "H_(n-3r)(i sqrt(3t)/2)/(r!(n-3r)!)";
  c.modes = {CheckMode::NumericPointwise};
  for (int l : {0, 1, 2}) {
    PointwiseVariant y1;
    y1.label = "l=" + num(l) + ", y=1";
    y1.parameter_names = {"x", "t"};
    y1.grid = points({{1, q(1, 10)}, {q(1, 2), q(1, 5)}, {2, q(1, 20)}});
    y1.lhs_term = [l](const Point& p, int n) {
      return p[1].pow(n) * inv_fact(n) * laguerre<Rational>(3 * n + l, p[0], Rational(1));
    };
    y1.rhs = {checked_form("classical Hermite bracket", [l](const Values& v, const SumControl& ctrl) {
      const double x = v[0], t = v[1];
      auto f = [&](int n) { return assoc_laguerre<double>(l, n, x, 1.0) * rfact(n + l) * triple_bracket(n, x, t); };
      return std::exp(t) * factorial(l).to_double() * sum_in_blocks(f, 3, ctrl);
    })};
    c.numeric.push_back(y1);

    PointwiseVariant gy;
    gy.label = "l=" + num(l) + ", two-variable";
    gy.parameter_names = {"x", "y", "t"};
    gy.grid = points({{1, 2, q(1, 20)}, {q(1, 2), q(3, 2), q(1, 10)}, {-1, q(1, 2), q(1, 5)}});
    gy.lhs_term = [l](const Point& p, int n) {
      return p[2].pow(n) * inv_fact(n) * laguerre<Rational>(3 * n + l, p[0], p[1]);
    };
    auto hc3 = [l](double prefactor_power) {
      return [l, prefactor_power](const Values& v, const SumControl& ctrl) {
        const double x = v[0], y = v[1], t = v[2];
        const std::vector<Complex> slots{3 * x * y * y * t, 3 * x * x * y * t, x * x * x * t};
        Complex s(0.0);
        for (int k = 0; k <= l; ++k) {
          s += binomial(l, k).to_double() * std::pow(y, l - k) * std::pow(-x, k) * h_tricomi(k, slots, ctrl);
        }
        return std::exp(std::pow(y, prefactor_power) * t) * s;
      };
    };
    gy.rhs = {checked_form("e^(y^3 t) third-order HC sum", hc3(3.0)),
              printed_form("printed prefactor e^(y^2 t)", hc3(2.0))};
    c.numeric.push_back(gy);
  }
  c.notes.push_back(
      "the second line of the three-variable form prints the prefactor e^(y^2 t); the first line and the expansion "
      "give e^(y^3 t), which is registered");
  return c;
}

IdentityCase eq_3_4() {
  IdentityCase c;
  c.id = "EQ3.4";
  c.paper_ref = "sum_n t^n/n! L_3n^(1)(x) = e^t sum_r q_3(r;x,t)/(r!(r+4)!) H_r(-3tx, 3tx^2, -tx^3)";
  c.modes = {CheckMode::NumericPointwise};
  const DerivedAuxPolynomial& qd = derived_aux(AuxFamily::Q, 1);
  const DerivedAuxPolynomial printed = printed_aux_polynomial(AuxFamily::Q, 1);
  const AuxComparison cmp = compare_with_printed(qd);
  c.notes.push_back("q_3 derived: " + qd.str());
  for (const auto& d : cmp.deviations) c.notes.push_back("paper_deviation q_3: " + d);
  for (const auto& n : cmp.notes) c.notes.push_back("q_3: " + n);
  c.notes.push_back("the inner bracket reuses r as its summation index; it is read as the bracket of the l=0 "
                    "triple-lacunary form evaluated at the outer index");

  PointwiseVariant pv;
  pv.label = "y=1";
  pv.parameter_names = {"x", "t"};
  pv.grid = points({{1, q(1, 10)}, {q(1, 2), q(1, 5)}, {2, q(1, 20)}});
  pv.lhs_term = [](const Point& p, int n) {
    return p[1].pow(n) * inv_fact(n) * assoc_laguerre<Rational>(3 * n, Rational(1), p[0], Rational(1));
  };
  auto bracket_form = [](const DerivedAuxPolynomial& poly) {
    return [poly](const Values& v, const SumControl& ctrl) {
      const double x = v[0], t = v[1];
      const int k = poly.factorial_offset;
      auto f = [&](int r) { return poly.evaluate(r, t, x, 1.0) * rfact(r + k) * triple_bracket(r, x, t); };
      return std::exp(t) * sum_in_blocks(f, 3, ctrl);
    };
  };
  pv.rhs = {checked_form("derived q_3, classical Hermite bracket", bracket_form(qd)),
            checked_form("derived q_3, H^(3) series",
                         [qd](const Values& v, const SumControl& ctrl) {
                           const double x = v[0], t = v[1];
                           HermiteScaledStream a({-3 * t * x, 3 * t * x * x, -t * x * x * x});
                           const int k = qd.factorial_offset;
                           auto f = [&](int r) { return qd.evaluate(r, t, x, 1.0) * rfact(r + k) * a[r]; };
                           return std::exp(t) * sum_in_blocks(f, 3, ctrl);
                         }),
            printed_form("printed q_3", bracket_form(printed))};
  c.numeric.push_back(pv);
  return c;
}

IdentityCase eq_3_5() {
  IdentityCase c;
  c.id = "EQ3.5";
  c.paper_ref =
      "sum_n t^n/n! L_(mn+l)(x,y) = e^(t y^m) sum_(s<=l) C(l,s) y^(l-s) (-x)^s HC_s^(m)(a_1..a_m), a_p = C(m,p) x^p "
      "y^(m-p) t";
  c.modes = {CheckMode::NumericPointwise};
  for (int m : {2, 3, 4}) {
    for (int l : {0, 1}) {
      PointwiseVariant pv;
      pv.label = "m=" + num(m) + ", l=" + num(l);
      pv.parameter_names = {"x", "y", "t"};
      pv.grid = points({{1, 1, q(1, 10)}, {q(1, 2), q(3, 2), q(1, 20)}, {-1, q(1, 2), q(1, 5)}});
      pv.lhs_term = [m, l](const Point& p, int n) {
        return p[2].pow(n) * inv_fact(n) * laguerre<Rational>(m * n + l, p[0], p[1]);
      };
      pv.rhs = {checked_form("m-th order HC sum", [m, l](const Values& v, const SumControl& ctrl) {
        const double x = v[0], y = v[1], t = v[2];
        const auto slots = binomial_slots(m, x, y, t);
        Complex s(0.0);
        for (int k = 0; k <= l; ++k) {
          s += binomial(l, k).to_double() * std::pow(y, l - k) * std::pow(-x, k) * h_tricomi(k, slots, ctrl);
        }
        return std::exp(t * std::pow(y, m)) * s;
      })};
      c.numeric.push_back(pv);
    }
  }
  return c;
}

IdentityCase eq_3_8() {
  IdentityCase c;
  c.id = "EQ3.8";
  c.paper_ref = "sum_n t^n/n! L_n(x,y) L_n(z,u) = e^(tuy) HC_00(-xut, -yzt | xzt)";
  c.modes = {CheckMode::ExactCoeff, CheckMode::NumericPointwise};
  auto umbral_side = [](const Point& p, int N, int umbral_order) {
    const Rational &x = p[0], &y = p[1], &z = p[2], &u = p[3];
    const auto a = SeriesUmbralSeries::monomial(linear(0, -x * u, N), {Rational(1), Rational(0)});
    const auto b = SeriesUmbralSeries::monomial(linear(0, -y * z, N), {Rational(0), Rational(1)});
    const auto ab = SeriesUmbralSeries::monomial(linear(0, x * z, N), {Rational(1), Rational(1)});
    const FormalPowerSeries reduced = (a + b + ab).exp(umbral_order).reduce();
    return (exp_series(linear(0, u * y, N)) * reduced).coeffs();
  };
  CoefficientVariant v;
  v.label = "two-symbol umbral exponential";
  v.parameter_names = {"x", "y", "z", "u"};
  v.tuples = points({{1, 1, 1, 1}, {q(1, 2), -2, 3, q(1, 3)}, {q(2, 3), q(5, 4), -1, 2}});
  v.lhs = [](const Point& p, int N) {
    return coeff_list(N, [&](int n) {
      return laguerre<Rational>(n, p[0], p[1]) * laguerre<Rational>(n, p[2], p[3]) * inv_fact(n);
    });
  };
  v.rhs = [umbral_side](const Point& p, int N) { return umbral_side(p, N, N); };
  c.exact.push_back(v);
  CoefficientVariant longer = v;
  longer.label = "umbral order N+5";
  longer.rhs = [umbral_side](const Point& p, int N) { return umbral_side(p, N, N + 5); };
  c.exact.push_back(longer);

  PointwiseVariant pv;
  pv.label = "bilateral";
  pv.parameter_names = {"x", "y", "z", "u", "t"};
  pv.grid = points({{1, 1, 1, 1, q(1, 10)}, {q(1, 2), 2, -1, 1, q(1, 5)}, {2, q(1, 2), 1, q(3, 2), q(1, 20)}});
  pv.lhs_term = [](const Point& p, int n) {
    return p[4].pow(n) * inv_fact(n) * laguerre<Rational>(n, p[0], p[1]) * laguerre<Rational>(n, p[2], p[3]);
  };
  pv.rhs = {checked_form("e^(tuy) HC_00", [](const Values& v, const SumControl& ctrl) {
    const double x = v[0], y = v[1], z = v[2], u = v[3], t = v[4];
    return std::exp(t * u * y) * h_tricomi_bilateral(-x * u * t, -y * z * t, x * z * t, ctrl);
  })};
  c.numeric.push_back(pv);
  return c;
}

// -------------------------------------------------- Pochhammer-weighted

IdentityCase eq_3_9() {
  IdentityCase c;
  c.id = "EQ3.9";
  c.paper_ref =
      "sum_n (1/2)_n t^n/(1+a/2)_n L_2n^(a)(x) = (1-t)^(-(1+a)/2) sum_r L_r^(r+a)(x/2)/(1+a/2)_r [-tx/(2(1-t))]^r";
  c.modes = {CheckMode::NumericPointwise};
  for (long a : {0L, 1L, 2L}) {
    PointwiseVariant pv;
    pv.label = "alpha=" + num(a);
    pv.parameter_names = {"x", "t"};
    pv.grid = points({{q(7, 10), q(1, 5)}, {1, q(1, 10)}, {2, q(3, 10)}});
    pv.in_domain = [](const Point& p) { return p[1].abs() < Rational(1); };
    pv.lhs_term = [a](const Point& p, int n) {
      return pochhammer(Rational(1, 2), n) / pochhammer(Rational(2 + a, 2), n) * p[1].pow(n) *
             assoc_laguerre<Rational>(2 * n, Rational(a), p[0], Rational(1));
    };
    pv.rhs = {checked_form("associated Laguerre series", [a](const Values& v, const SumControl& ctrl) {
      const double x = v[0], t = v[1];
      const double z = -t * x / (2 * (1 - t));
      auto term = [&](int r) {
        return assoc_laguerre<double>(r, static_cast<double>(r + a), x / 2, 1.0) / pochhammer(1.0 + a / 2.0, r) *
               std::pow(z, r);
      };
      return std::pow(1 - t, -(1.0 + a) / 2) * sum_series(term, ctrl).value;
    })};
    c.numeric.push_back(pv);
  }
  return c;
}

// (z/2)^(-m) I_m(z) = sum_k (z/2)^(2k) / (k! (m+k)!), finite at z = 0.
double scaled_bessel_i(int m, double z, const SumControl& ctrl) {
  const double h2 = z * z / 4.0;
  double p = rfact(m);
  auto term = [&](int k) {
    if (k > 0) p *= h2 / (static_cast<double>(k) * (m + k));
    return p;
  };
  return sum_series(term, ctrl).value.real();
}

IdentityCase eq_3_10() {
  IdentityCase c;
  c.id = "EQ3.10";
  c.paper_ref =
      "sum_n (1/2)_n/(1+m)_n t^n L_2n^(2m)(x) = m! (1-t)^(-1/2) (x sqrt(t)/2)^(-m) exp(-tx/(1-t)) I_m(x sqrt(t)/(1-t))";
  c.modes = {CheckMode::NumericPointwise};
  for (int m : {0, 1, 2}) {
    PointwiseVariant pv;
    pv.label = "m=" + num(m);
    pv.parameter_names = {"x", "t"};
    pv.grid = points({{0, q(1, 10)}, {0, q(1, 4)}, {0, q(1, 2)}, {1, q(9, 100)}, {q(7, 10), q(1, 5)}, {2, q(1, 10)}});
    pv.in_domain = [](const Point& p) { return p[1] > Rational(0) && p[1] < Rational(1); };
    pv.lhs_term = [m](const Point& p, int n) {
      return pochhammer(Rational(1, 2), n) / pochhammer(Rational(1 + m), n) * p[1].pow(n) *
             assoc_laguerre<Rational>(2 * n, Rational(2 * m), p[0], Rational(1));
    };
    auto form = [m](double factor) {
      return [m, factor](const Values& v, const SumControl& ctrl) {
        const double x = v[0], t = v[1];
        const double z = x * std::sqrt(t) / (1 - t);
        // (x sqrt(t)/2)^(-m) I_m(z) = (1-t)^(-m) (z/2)^(-m) I_m(z)
        return Complex(factor * std::pow(1 - t, -0.5 - m) * std::exp(-t * x / (1 - t)) * scaled_bessel_i(m, z, ctrl));
      };
    };
    pv.rhs = {checked_form("with factor m!", form(factorial(m).to_double())),
              printed_form("as printed, without m!", form(1.0))};
    c.numeric.push_back(pv);
  }
  c.notes.push_back(
      "paper_deviation: the printed right-hand side lacks a factor m! (Gamma(1+m)); it only holds for m = 0, 1 as "
      "printed; the registered form carries m!");
  return c;
}

IdentityCase eq_3_11() {
  IdentityCase c;
  c.id = "EQ3.11";
  c.paper_ref =
      "sum_n (1/3)_n (2/3)_n t^n L_3n^(a)(x)/((1+a/3)_n (2/3+a/3)_n) = (1-t)^(-(1+a)/3) sum_r Gamma(3r+a+1)/((1+a/3)_r "
      "(2/3+a/3)_r) [-tx/(9(1-t))]^r sum_(s<=r) (-x)^s L_s^(s+a+r)(x/3)/((r-s)! Gamma(2s+a+r+1))";
  c.modes = {CheckMode::NumericPointwise};
  for (long a : {0L, 1L}) {
    PointwiseVariant pv;
    pv.label = "alpha=" + num(a);
    pv.parameter_names = {"x", "t"};
    pv.grid = points({{q(7, 10), q(1, 10)}, {1, q(1, 20)}, {q(1, 2), q(1, 10)}});
    pv.in_domain = [](const Point& p) { return p[1].abs() <= Rational(1, 10); };
    pv.lhs_term = [a](const Point& p, int n) {
      return pochhammer(Rational(1, 3), n) * pochhammer(Rational(2, 3), n) /
             (pochhammer(Rational(3 + a, 3), n) * pochhammer(Rational(2 + a, 3), n)) * p[1].pow(n) *
             assoc_laguerre<Rational>(3 * n, Rational(a), p[0], Rational(1));
    };
    pv.rhs = {checked_form("nested associated Laguerre series", [a](const Values& v, const SumControl& ctrl) {
      const double x = v[0], t = v[1];
      const double z = -t * x / (9 * (1 - t));
      auto term = [&](int r) {
        double inner = 0.0;
        for (int s = 0; s <= r; ++s) {
          // Gamma(3r+a+1)/Gamma(2s+a+r+1) as a rising product
          const double ratio = pochhammer(static_cast<double>(2 * s + a + r + 1), 2 * (r - s));
          inner += std::pow(-x, s) * assoc_laguerre<double>(s, static_cast<double>(s + a + r), x / 3, 1.0) *
                   rfact(r - s) * ratio;
        }
        return inner * std::pow(z, r) / (pochhammer(1.0 + a / 3.0, r) * pochhammer(2.0 / 3 + a / 3.0, r));
      };
      return std::pow(1 - t, -(1.0 + a) / 3) * sum_series(term, ctrl).value;
    })};
    c.numeric.push_back(pv);
  }
  c.notes.push_back("no convergence domain is stated for this expansion; the grid keeps |t| <= 1/10");
  return c;
}

// ------------------------------------------------- Laguerre derivative

// Flattened (a, j) entries with a + j <= D, j outer.
template <class F>
Coeffs bivariate(int D, F&& f) {
  Coeffs out;
  for (int j = 0; j <= D; ++j) {
    for (int a = 0; a + j <= D; ++a) out.push_back(f(a, j));
  }
  return out;
}

// -d/dx x d/dx on a Taylor coefficient vector: c_k x^k -> -k^2 c_k x^(k-1)
Coeffs laguerre_derivative(const Coeffs& f) {
  Coeffs g(f.size(), Rational(0));
  for (std::size_t k = 1; k < f.size(); ++k) g[k - 1] = -Rational(static_cast<long>(k * k)) * f[k];
  return g;
}

Coeffs shift_by_differential(const Coeffs& f, int D) {
  std::vector<Coeffs> powers{f};
  for (int j = 1; j <= D; ++j) powers.push_back(laguerre_derivative(powers.back()));
  return bivariate(D, [&](int a, int j) {
    return powers[static_cast<std::size_t>(j)][static_cast<std::size_t>(a)] * inv_fact(j);
  });
}

// -c^(-1) d/dx applied umbrally to a graded series
Coeffs shift_by_umbral(const ExactUmbralSeries& f, int D) {
  const auto inv_c = ExactUmbralSeries::graded(Rational(-1), {Rational(-1), Rational(0)}, 0);
  std::vector<std::map<int, Rational>> reduced;
  ExactUmbralSeries g = f;
  for (int j = 0; j <= D; ++j) {
    reduced.push_back(g.reduce_by_degree());
    g = inv_c * g.derivative_x();
  }
  return bivariate(D, [&](int a, int j) {
    const auto& m = reduced[static_cast<std::size_t>(j)];
    auto it = m.find(a);
    return (it == m.end() ? Rational(0) : it->second) * inv_fact(j);
  });
}

IdentityCase eq_3_14() {
  IdentityCase c;
  c.id = "EQ3.14";
  c.paper_ref = "exp(y LD) e^(-x) = e^(-x/(1-y)) / (1-y), LD = -d/dx x d/dx = -c^(-1) d/dx";
  c.modes = {CheckMode::ExactCoeff};
  c.exact_order = 12;
  auto rhs = [](const Point& p, int D) {
    const Rational& lam = p[0];
    return bivariate(D, [&](int a, int j) {
      return (-lam).pow(a) * inv_fact(a) * power(linear(1, -lam, D), -(a + 1))[j];
    });
  };
  CoefficientVariant diff;
  diff.label = "differential form, e^(-lambda x)";
  diff.parameter_names = {"lambda"};
  diff.tuples = points({{1}, {q(1, 2)}, {q(-3, 4)}});
  diff.lhs = [](const Point& p, int D) {
    return shift_by_differential(coeff_list(D, [&](int k) { return (-p[0]).pow(k) * inv_fact(k); }), D);
  };
  diff.rhs = rhs;
  c.exact.push_back(diff);
  CoefficientVariant umb = diff;
  umb.label = "umbral form, 1/(1 + c lambda x)";
  umb.lhs = [](const Point& p, int D) {
    ExactUmbralSeries f = ExactUmbralSeries::zero_like(Rational(1));
    for (int k = 0; k <= D; ++k) f += ExactUmbralSeries::graded((-p[0]).pow(k), {Rational(k), Rational(0)}, k);
    return shift_by_umbral(f, D);
  };
  c.exact.push_back(umb);
  c.notes.push_back("checked as a Taylor identity in (x, y) through total order N with x scaled by lambda");
  return c;
}

IdentityCase eq_3_15() {
  IdentityCase c;
  c.id = "EQ3.15";
  c.paper_ref = "exp(y LD) C_0(x) = e^y C_0(x)";
  c.modes = {CheckMode::ExactCoeff};
  c.exact_order = 20;
  auto rhs = [](const Point& p, int D) {
    const Rational& lam = p[0];
    const auto e = exp_series(linear(0, lam, D));
    return bivariate(D, [&](int a, int j) { return e[j] * (-lam).pow(a) * inv_fact(a) * inv_fact(a); });
  };
  CoefficientVariant diff;
  diff.label = "differential form, C_0(lambda x)";
  diff.parameter_names = {"lambda"};
  diff.tuples = points({{1}, {q(1, 2)}, {q(-2, 3)}});
  diff.lhs = [](const Point& p, int D) {
    return shift_by_differential(coeff_list(D, [&](int k) { return (-p[0]).pow(k) * inv_fact(k) * inv_fact(k); }), D);
  };
  diff.rhs = rhs;
  c.exact.push_back(diff);
  CoefficientVariant umb = diff;
  umb.label = "umbral form, e^(-c lambda x)";
  umb.lhs = [](const Point& p, int D) {
    ExactUmbralSeries f = ExactUmbralSeries::zero_like(Rational(1));
    for (int k = 0; k <= D; ++k) {
      f += ExactUmbralSeries::graded((-p[0]).pow(k) * inv_fact(k), {Rational(k), Rational(0)}, k);
    }
    return shift_by_umbral(f, D);
  };
  c.exact.push_back(umb);
  c.notes.push_back("checked as a Taylor identity in (x, y) through total order N with x scaled by lambda");
  return c;
}

// ------------------------------------------------------ pseudo-Gaussian

ExactUmbralSeries pseudo_gaussian_j0(const Rational& lam, int N) {
  ExactUmbralSeries f = ExactUmbralSeries::zero_like(Rational(1));
  const Rational h2 = lam * lam / Rational(4);
  for (int k = 0; k <= N; ++k) {
    f += ExactUmbralSeries::graded((-h2).pow(k) * inv_fact(k), {Rational(k), Rational(0)}, 2 * k);
  }
  return f;
}

Coeffs degree_list(const std::map<int, Rational>& m, int maxdeg) {
  return coeff_list(maxdeg, [&](int d) {
    auto it = m.find(d);
    return it == m.end() ? Rational(0) : it->second;
  });
}

CoefficientVariant lambda_variant(std::string label) {
  CoefficientVariant v;
  v.label = std::move(label);
  v.parameter_names = {"lambda"};
  v.tuples = points({{1}, {q(1, 2)}, {2}, {q(-1, 3)}});
  return v;
}

IdentityCase eq_3_17() {
  IdentityCase c;
  c.id = "EQ3.17";
  c.paper_ref = "J_0(x) = exp(-c (x/2)^2) phi_0";
  c.modes = {CheckMode::ExactCoeff};
  c.exact_order = 20;
  CoefficientVariant v = lambda_variant("J_0(lambda x) through degree 2N");
  v.lhs = [](const Point& p, int N) { return degree_list(pseudo_gaussian_j0(p[0], N).reduce_by_degree(), 2 * N); };
  v.rhs = [](const Point& p, int N) {
    // Bessel equation x^2 f'' + x f' + lambda^2 x^2 f = 0
    Coeffs a(static_cast<std::size_t>(2 * N + 1), Rational(0));
    a[0] = Rational(1);
    for (int k = 0; k + 2 <= 2 * N; ++k) {
      a[static_cast<std::size_t>(k + 2)] = -p[0] * p[0] * a[static_cast<std::size_t>(k)] / Rational((k + 2) * (k + 2));
    }
    return a;
  };
  c.exact.push_back(v);
  return c;
}

IdentityCase eq_3_18() {
  IdentityCase c;
  c.id = "EQ3.18";
  c.paper_ref = "c^(-x d/dx / 2) J_0(x) = e^(-(x/2)^2) = int_0^inf e^(-s) J_0(sqrt(s) x) ds";
  c.modes = {CheckMode::ExactCoeff, CheckMode::Quadrature};
  c.exact_order = 20;
  CoefficientVariant v = lambda_variant("dilation c^(-1/2) on J_0(lambda x)");
  v.lhs = [](const Point& p, int N) {
    return degree_list(pseudo_gaussian_j0(p[0], N).dilate(Rational(-1, 2)).reduce_by_degree(), 2 * N);
  };
  v.rhs = [](const Point& p, int N) {
    FormalPowerSeries arg(2 * N);
    if (2 * N >= 2) arg.set(2, -p[0] * p[0] / Rational(4));
    return exp_series(arg).coeffs();
  };
  c.exact.push_back(v);
  QuadratureVariant qv;
  qv.label = "Gauss-Laguerre Borel transform of J_0";
  qv.points = {0.0, 1.0, 2.0, 3.0};
  qv.integrate = borel_j0;
  qv.closed_form = [](double x) { return std::exp(-x * x / 4.0); };
  c.quadrature.push_back(qv);
  return c;
}

IdentityCase eq_3_20() {
  IdentityCase c;
  c.id = "EQ3.20";
  c.paper_ref = "e^(-x^2) = 1/(1 + c x^2) phi_0";
  c.modes = {CheckMode::ExactCoeff};
  c.exact_order = 20;
  CoefficientVariant v = lambda_variant("geometric series in c lambda x^2");
  v.lhs = [](const Point& p, int N) {
    ExactUmbralSeries f = ExactUmbralSeries::zero_like(Rational(1));
    for (int k = 0; k <= N; ++k) f += ExactUmbralSeries::graded((-p[0]).pow(k), {Rational(k), Rational(0)}, 2 * k);
    return degree_list(f.reduce_by_degree(), 2 * N);
  };
  v.rhs = [](const Point& p, int N) {
    FormalPowerSeries arg(2 * N);
    if (2 * N >= 2) arg.set(2, -p[0]);
    return exp_series(arg).coeffs();
  };
  c.exact.push_back(v);
  return c;
}

IdentityCase eq_3_21() {
  IdentityCase c;
  c.id = "EQ3.21";
  c.paper_ref = "int_0^x e^(-s^2) ds = c^(-1/2) arctan(sqrt(c) x) phi_0";
  c.modes = {CheckMode::ExactCoeff};
  c.exact_order = 20;
  CoefficientVariant v = lambda_variant("arctan series, lambda-scaled");
  v.lhs = [](const Point& p, int N) {
    ExactUmbralSeries f = ExactUmbralSeries::zero_like(Rational(1));
    for (int k = 0; k <= N; ++k) {
      const Rational coef = p[0].pow(2 * k + 1) * Rational(k % 2 == 0 ? 1 : -1, 2 * k + 1);
      f += ExactUmbralSeries::graded(coef, {Rational(2 * k + 1, 2), Rational(0)}, 2 * k + 1);
    }
    const auto lead = ExactUmbralSeries::graded(Rational(1), {Rational(-1, 2), Rational(0)}, 0);
    return degree_list((lead * f).reduce_by_degree(), 2 * N + 1);
  };
  v.rhs = [](const Point& p, int N) {
    FormalPowerSeries arg(2 * N);
    if (2 * N >= 2) arg.set(2, -p[0] * p[0]);
    FormalPowerSeries g = integrate(exp_series(arg));
    g *= p[0];
    return g.coeffs();
  };
  c.exact.push_back(v);
  c.notes.push_back("lambda-scaled: c^(-1/2) arctan(sqrt(c) lambda x) = lambda int_0^x e^(-lambda^2 s^2) ds");
  return c;
}

std::vector<IdentityCase> build() {
  std::vector<IdentityCase> all;
  all.push_back(eq_1_7());
  all.push_back(eq_1_9());
  all.push_back(eq_1_11());
  all.push_back(eq_1_12());
  all.push_back(eq_2_7());
  all.push_back(eq_2_8());
  all.push_back(eq_2_9());
  all.push_back(eq_2_10());
  all.push_back(eq_2_11());
  all.push_back(eq_2_13());
  all.push_back(eq_2_14());
  all.push_back(eq_3_1());
  all.push_back(eq_3_3());
  all.push_back(eq_3_4());
  all.push_back(eq_3_5());
  all.push_back(eq_3_8());
  all.push_back(eq_3_9());
  all.push_back(eq_3_10());
  all.push_back(eq_3_11());
  all.push_back(eq_3_14());
  all.push_back(eq_3_15());
  all.push_back(eq_3_17());
  all.push_back(eq_3_18());
  all.push_back(eq_3_20());
  all.push_back(eq_3_21());
  return all;
}

}  // namespace

const std::vector<IdentityCase>& registry() {
  static const std::vector<IdentityCase> cases = build();
  return cases;
}

}  // namespace lacunary
