#pragma once

#include <vector>

#include "lacunary/rational.hpp"

namespace lacunary {

/// Dense truncated power series in t with exact rational coefficients
/// c[0..order]. Binary operations truncate to the smaller order.
class FormalPowerSeries {
 public:
  explicit FormalPowerSeries(int order = 0);
  explicit FormalPowerSeries(std::vector<Rational> coeffs);

  static FormalPowerSeries constant(const Rational& c, int order);
  static FormalPowerSeries variable(int order);  // t
  static FormalPowerSeries monomial(const Rational& c, int power, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  const std::vector<Rational>& coeffs() const { return c_; }
  void set(int k, Rational v) { c_.at(static_cast<std::size_t>(k)) = std::move(v); }
  bool is_zero() const;

  FormalPowerSeries truncated(int order) const;

  FormalPowerSeries& operator+=(const FormalPowerSeries& o);
  FormalPowerSeries& operator-=(const FormalPowerSeries& o);
  FormalPowerSeries& operator*=(const Rational& s);

  friend FormalPowerSeries operator+(FormalPowerSeries a, const FormalPowerSeries& b) { return a += b; }
  friend FormalPowerSeries operator-(FormalPowerSeries a, const FormalPowerSeries& b) { return a -= b; }
  friend FormalPowerSeries operator*(const FormalPowerSeries& a, const FormalPowerSeries& b);
  friend FormalPowerSeries operator*(FormalPowerSeries a, const Rational& s) { return a *= s; }
  friend FormalPowerSeries operator*(const Rational& s, FormalPowerSeries a) { return a *= s; }
  friend FormalPowerSeries operator-(const FormalPowerSeries& a);
  friend bool operator==(const FormalPowerSeries& a, const FormalPowerSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<Rational> c_;
};

/// 1/f; requires f(0) != 0 (ZeroConstantTerm otherwise).
FormalPowerSeries reciprocal(const FormalPowerSeries& f);
/// exp(f); requires f(0) == 0 (NonzeroConstantTerm otherwise).
FormalPowerSeries exp_series(const FormalPowerSeries& f);
/// outer(inner(t)); requires inner(0) == 0. Result order is the smaller of
/// the two orders.
FormalPowerSeries compose(const FormalPowerSeries& outer, const FormalPowerSeries& inner);
/// f^e for any integer e; negative e requires f(0) != 0.
FormalPowerSeries power(const FormalPowerSeries& f, long e);
/// Antiderivative with zero constant term; order grows by one.
FormalPowerSeries integrate(const FormalPowerSeries& f);
FormalPowerSeries derivative(const FormalPowerSeries& f);

}  // namespace lacunary
