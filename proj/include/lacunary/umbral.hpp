#pragma once

// Finite formal series in one or two commuting umbral symbols c1, c2 with
// rational exponents, reduced against the vacuum by c^a phi0 = 1/Gamma(1+a).

#include <compare>
#include <cstddef>
#include <map>
#include <string>

#include "lacunary/errors.hpp"
#include "lacunary/fps.hpp"
#include "lacunary/gamma.hpp"
#include "lacunary/rational.hpp"
#include "lacunary/scalar.hpp"

namespace lacunary {

struct UmbralExponent {
  Rational first;   // power of c1
  Rational second;  // power of c2

  friend bool operator==(const UmbralExponent&, const UmbralExponent&) = default;
  friend auto operator<=>(const UmbralExponent&, const UmbralExponent&) = default;
  friend UmbralExponent operator+(const UmbralExponent& a, const UmbralExponent& b) {
    return {a.first + b.first, a.second + b.second};
  }
  bool is_zero() const { return first.is_zero() && second.is_zero(); }
};

/// Coefficient rings an UmbralSeries can carry. Exact rings reduce through
/// rgamma_exact; the float ring through the floating rgamma.
template <class C>
struct UmbralCoeffTraits;

template <>
struct UmbralCoeffTraits<Rational> {
  static constexpr bool exact = true;
  using Factor = Rational;
  static bool is_zero(const Rational& c) { return c.is_zero(); }
  static Rational one_like(const Rational&) { return Rational(1); }
  static Rational zero_like(const Rational&) { return Rational(0); }
  static Factor vacuum(const Rational& exponent) { return rgamma_exact(exponent + Rational(1)); }
  static Rational scale(const Rational& c, const Rational& f) { return c * f; }
};

template <>
struct UmbralCoeffTraits<FormalPowerSeries> {
  static constexpr bool exact = true;
  using Factor = Rational;
  static bool is_zero(const FormalPowerSeries& c) { return c.is_zero(); }
  static FormalPowerSeries one_like(const FormalPowerSeries& c) {
    return FormalPowerSeries::constant(Rational(1), c.order());
  }
  static FormalPowerSeries zero_like(const FormalPowerSeries& c) { return FormalPowerSeries(c.order()); }
  static Factor vacuum(const Rational& exponent) { return rgamma_exact(exponent + Rational(1)); }
  static FormalPowerSeries scale(const FormalPowerSeries& c, const Rational& f) { return c * f; }
};

template <>
struct UmbralCoeffTraits<Complex> {
  static constexpr bool exact = false;
  using Factor = double;
  static bool is_zero(const Complex& c) { return c == Complex(0.0); }
  static Complex one_like(const Complex&) { return Complex(1.0); }
  static Complex zero_like(const Complex&) { return Complex(0.0); }
  static Factor vacuum(const Rational& exponent) { return rgamma(exponent.to_double() + 1.0); }
  static Complex scale(const Complex& c, const Rational& f) { return c * f.to_double(); }
  static Complex scale(const Complex& c, double f) { return c * f; }
};

template <class C>
class UmbralSeries {
 public:
  using Coeff = C;
  using Traits = UmbralCoeffTraits<C>;

  /// A term is coeff * x^x_degree * c1^e1 * c2^e2. Series built without x
  /// bookkeeping keep x_degree = 0 and are flagged ungraded.
  struct Key {
    UmbralExponent exponent;
    int x_degree = 0;
    friend bool operator==(const Key&, const Key&) = default;
    friend auto operator<=>(const Key&, const Key&) = default;
  };
  using TermMap = std::map<Key, C>;

  /// The zero series over the coefficient ring of `sample`.
  static UmbralSeries zero_like(const C& sample) { return UmbralSeries(Traits::one_like(sample), true); }

  /// A scalar with no umbral or x dependence.
  static UmbralSeries scalar(const C& c) { return graded(c, {}, 0); }

  /// c * c1^e1 * c2^e2; the coefficient may hide any dependence on x.
  static UmbralSeries monomial(const C& c, UmbralExponent e) {
    UmbralSeries s(Traits::one_like(c), false);
    s.insert({std::move(e), 0}, c);
    return s;
  }

  /// c * x^x_degree * c1^e1 * c2^e2 with x tracked symbolically.
  static UmbralSeries graded(const C& c, UmbralExponent e, int x_degree) {
    if (x_degree < 0) throw DomainError("UmbralSeries: negative x degree");
    UmbralSeries s(Traits::one_like(c), true);
    s.insert({std::move(e), x_degree}, c);
    return s;
  }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  bool is_graded() const { return graded_; }
  int arity() const {
    for (const auto& [k, c] : terms_) {
      if (!k.exponent.second.is_zero()) return 2;
    }
    return 1;
  }

  /// Coefficient of the given exponent/x-degree, zero if absent.
  C coefficient(const UmbralExponent& e, int x_degree = 0) const {
    auto it = terms_.find(Key{e, x_degree});
    return it == terms_.end() ? Traits::zero_like(unit_) : it->second;
  }

  UmbralSeries& operator+=(const UmbralSeries& o) {
    graded_ = graded_ && o.graded_;
    for (const auto& [k, c] : o.terms_) insert(k, c);
    return *this;
  }
  UmbralSeries& operator-=(const UmbralSeries& o) { return *this += -o; }

  friend UmbralSeries operator+(UmbralSeries a, const UmbralSeries& b) { return a += b; }
  friend UmbralSeries operator-(UmbralSeries a, const UmbralSeries& b) { return a -= b; }
  friend UmbralSeries operator-(const UmbralSeries& a) {
    UmbralSeries r(a.unit_, a.graded_);
    for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
    return r;
  }

  friend bool operator==(const UmbralSeries& a, const UmbralSeries& b) { return a.terms_ == b.terms_; }

  /// Exponents (and x degrees) add; coefficients multiply.
  friend UmbralSeries operator*(const UmbralSeries& a, const UmbralSeries& b) {
    UmbralSeries r(a.unit_, a.graded_ && b.graded_);
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        r.insert({ka.exponent + kb.exponent, ka.x_degree + kb.x_degree}, ca * cb);
      }
    }
    return r;
  }

  /// Multiplies every coefficient by a ring element (e.g. a series in t).
  UmbralSeries times(const C& s) const {
    UmbralSeries r(unit_, graded_);
    for (const auto& [k, c] : terms_) r.insert(k, c * s);
    return r;
  }

  UmbralSeries scaled(const Rational& s) const {
    UmbralSeries r(unit_, graded_);
    for (const auto& [k, c] : terms_) r.insert(k, Traits::scale(c, s));
    return r;
  }

  UmbralSeries pow(int n) const {
    if (n < 0) throw DomainError("UmbralSeries::pow: negative exponent");
    UmbralSeries result = scalar(unit_);
    result.graded_ = graded_;
    UmbralSeries base = *this;
    while (n > 0) {
      if (n & 1) result = result * base;
      n >>= 1;
      if (n > 0) base = base * base;
    }
    return result;
  }

  /// sum_{k=0}^{order} s^k / k!. The pure scalar part must be split off by
  /// the caller; `term_cap` bounds the number of stored terms.
  UmbralSeries exp(int order, std::size_t term_cap = 1u << 20) const {
    if (order < 0) throw DomainError("UmbralSeries::exp: negative order");
    auto it = terms_.find(Key{UmbralExponent{}, 0});
    if (it != terms_.end()) {
      throw NonzeroConstantTerm("UmbralSeries::exp: argument has a pure scalar term; factor it out");
    }
    UmbralSeries result = scalar(unit_);
    result.graded_ = graded_;
    UmbralSeries term = result;
    for (int k = 1; k <= order; ++k) {
      term = (term * *this).scaled(Rational(1, k));
      result += term;
      if (result.size() > term_cap || term.size() > term_cap) {
        throw OrderOverflow("UmbralSeries::exp: more than " + std::to_string(term_cap) + " terms");
      }
    }
    return result;
  }

  /// Applies the vacuum rule to every symbol independently.
  C reduce() const {
    C total = Traits::zero_like(unit_);
    for (const auto& [k, c] : terms_) {
      if (k.x_degree != 0) {
        throw DomainError("UmbralSeries::reduce: series depends on x; use reduce_by_degree");
      }
      total = total + apply_vacuum(k.exponent, c);
    }
    return total;
  }

  /// Vacuum reduction of a graded series, returned as x-degree -> coefficient.
  std::map<int, C> reduce_by_degree() const {
    require_graded("reduce_by_degree");
    std::map<int, C> out;
    for (const auto& [k, c] : terms_) {
      C v = apply_vacuum(k.exponent, c);
      auto [it, fresh] = out.emplace(k.x_degree, v);
      if (!fresh) it->second = it->second + v;
    }
    return out;
  }

  /// Substitution x -> c1^sigma x: a term of x-degree d gains sigma*d on c1.
  UmbralSeries dilate(const Rational& sigma) const {
    require_graded("dilate");
    UmbralSeries r(unit_, true);
    for (const auto& [k, c] : terms_) {
      UmbralExponent e = k.exponent;
      e.first += sigma * Rational(k.x_degree);
      r.insert({e, k.x_degree}, c);
    }
    return r;
  }

  /// d/dx on a graded series.
  UmbralSeries derivative_x() const {
    require_graded("derivative_x");
    UmbralSeries r(unit_, true);
    for (const auto& [k, c] : terms_) {
      if (k.x_degree == 0) continue;
      r.insert({k.exponent, k.x_degree - 1}, Traits::scale(c, Rational(k.x_degree)));
    }
    return r;
  }

 private:
  UmbralSeries(C unit, bool graded) : unit_(std::move(unit)), graded_(graded) {}

  void insert(const Key& k, const C& c) {
    if (Traits::is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
      it->second = it->second + c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  void require_graded(const char* op) const {
    if (!graded_) {
      throw MissingDegreeMetadata(std::string("UmbralSeries::") + op +
                                  ": series was not built from x-monomials");
    }
  }

  C apply_vacuum(const UmbralExponent& e, const C& c) const {
    return Traits::scale(c, Traits::vacuum(e.first) * Traits::vacuum(e.second));
  }

  TermMap terms_;
  C unit_;
  bool graded_ = true;
};

using ExactUmbralSeries = UmbralSeries<Rational>;
using SeriesUmbralSeries = UmbralSeries<FormalPowerSeries>;
using FloatUmbralSeries = UmbralSeries<Complex>;

/// Lifts an exact series into the float ring.
inline FloatUmbralSeries to_float(const ExactUmbralSeries& s) {
  FloatUmbralSeries r = FloatUmbralSeries::zero_like(Complex(1.0));
  for (const auto& [k, c] : s.terms()) {
    const Complex v(c.to_double(), 0.0);
    r += s.is_graded() ? FloatUmbralSeries::graded(v, k.exponent, k.x_degree)
                       : FloatUmbralSeries::monomial(v, k.exponent);
  }
  return r;
}

}  // namespace lacunary
