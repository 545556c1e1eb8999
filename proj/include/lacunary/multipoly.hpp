#pragma once

// Sparse multivariate polynomials with exact rational coefficients.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "lacunary/rational.hpp"

namespace lacunary {

class MultiPoly {
 public:
  using Monomial = std::vector<int>;  // one exponent per variable

  explicit MultiPoly(int nvars = 1);

  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int var);
  static MultiPoly monomial(int nvars, const Rational& c, Monomial exps);

  int nvars() const { return nvars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;
  int degree(int var) const;  // -1 for the zero polynomial

  /// Drops every term whose exponent in `var` exceeds max_degree.
  MultiPoly truncated(int var, int max_degree) const;
  /// Coefficient of var^power, as a polynomial with that exponent cleared.
  MultiPoly coefficient_of(int var, int power) const;
  MultiPoly substituted(int var, const Rational& value) const;

  Rational evaluate(std::span<const Rational> values) const;
  double evaluate(std::span<const double> values) const;

  /// Human-readable form, e.g. "2*t*x^2 - 1/3*y".
  std::string str(std::span<const std::string> names) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a) { return a * Rational(-1); }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// a*b keeping only terms with exponent of `var` at most max_degree.
  static MultiPoly product_truncated(const MultiPoly& a, const MultiPoly& b, int var, int max_degree);

 private:
  void add_term(const Monomial& m, const Rational& c);
  void check_var(int var) const;
  void check_compatible(const MultiPoly& o) const;

  int nvars_;
  std::map<Monomial, Rational> terms_;
};

}  // namespace lacunary
