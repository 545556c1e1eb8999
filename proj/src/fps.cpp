#include "lacunary/fps.hpp"

#include <algorithm>

#include "lacunary/errors.hpp"

namespace lacunary {

FormalPowerSeries::FormalPowerSeries(int order) {
  if (order < 0) throw DomainError("FormalPowerSeries: negative order");
  c_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

FormalPowerSeries::FormalPowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw DomainError("FormalPowerSeries: empty coefficient list");
}

FormalPowerSeries FormalPowerSeries::constant(const Rational& c, int order) {
  FormalPowerSeries f(order);
  f.c_[0] = c;
  return f;
}

FormalPowerSeries FormalPowerSeries::variable(int order) { return monomial(Rational(1), 1, order); }

FormalPowerSeries FormalPowerSeries::monomial(const Rational& c, int power, int order) {
  if (power < 0) throw DomainError("FormalPowerSeries: negative power");
  FormalPowerSeries f(order);
  if (power <= order) f.c_[static_cast<std::size_t>(power)] = c;
  return f;
}

bool FormalPowerSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

FormalPowerSeries FormalPowerSeries::truncated(int order) const {
  if (order < 0) throw DomainError("FormalPowerSeries: negative order");
  FormalPowerSeries f(order);
  const int n = std::min(order, this->order());
  for (int k = 0; k <= n; ++k) f.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)];
  return f;
}

FormalPowerSeries& FormalPowerSeries::operator+=(const FormalPowerSeries& o) {
  if (o.order() < order()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

FormalPowerSeries& FormalPowerSeries::operator-=(const FormalPowerSeries& o) {
  if (o.order() < order()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

FormalPowerSeries& FormalPowerSeries::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

FormalPowerSeries operator*(const FormalPowerSeries& a, const FormalPowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  FormalPowerSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (a.c_[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      r.c_[static_cast<std::size_t>(i + j)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
    }
  }
  return r;
}

FormalPowerSeries operator-(const FormalPowerSeries& a) {
  FormalPowerSeries r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

FormalPowerSeries reciprocal(const FormalPowerSeries& f) {
  if (f[0].is_zero()) throw ZeroConstantTerm("reciprocal: constant term is zero");
  const int n = f.order();
  FormalPowerSeries g(n);
  const Rational inv0 = f[0].inverse();
  g.set(0, inv0);
  for (int k = 1; k <= n; ++k) {
    Rational acc(0);
    for (int j = 1; j <= k; ++j) acc += f[j] * g[k - j];
    g.set(k, -acc * inv0);
  }
  return g;
}

FormalPowerSeries exp_series(const FormalPowerSeries& f) {
  if (!f[0].is_zero()) throw NonzeroConstantTerm("exp_series: constant term must be zero");
  const int n = f.order();
  FormalPowerSeries g(n);
  g.set(0, Rational(1));
  // g' = f' g  =>  k g_k = sum_{j=1..k} j f_j g_{k-j}
  for (int k = 1; k <= n; ++k) {
    Rational acc(0);
    for (int j = 1; j <= k; ++j) {
      if (!f[j].is_zero()) acc += Rational(j) * f[j] * g[k - j];
    }
    g.set(k, acc / Rational(k));
  }
  return g;
}

FormalPowerSeries compose(const FormalPowerSeries& outer, const FormalPowerSeries& inner) {
  if (!inner[0].is_zero()) throw NonzeroConstantTerm("compose: inner series must vanish at t = 0");
  // inner = O(t), so the result is exact through min(orders).
  const int n = std::min(inner.order(), outer.order());
  const FormalPowerSeries g = inner.truncated(n);
  // Horner: outer_0 + g (outer_1 + g (outer_2 + ...))
  FormalPowerSeries acc = FormalPowerSeries::constant(outer[n], n);
  for (int k = n - 1; k >= 0; --k) {
    acc = acc * g;
    acc += FormalPowerSeries::constant(outer[k], n);
  }
  return acc;
}

FormalPowerSeries power(const FormalPowerSeries& f, long e) {
  if (e < 0) return power(reciprocal(f), -e);
  FormalPowerSeries result = FormalPowerSeries::constant(Rational(1), f.order());
  FormalPowerSeries base = f;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

FormalPowerSeries integrate(const FormalPowerSeries& f) {
  FormalPowerSeries g(f.order() + 1);
  for (int k = 0; k <= f.order(); ++k) g.set(k + 1, f[k] / Rational(k + 1));
  return g;
}

FormalPowerSeries derivative(const FormalPowerSeries& f) {
  if (f.order() == 0) return FormalPowerSeries(0);
  FormalPowerSeries g(f.order() - 1);
  for (int k = 1; k <= f.order(); ++k) g.set(k - 1, f[k] * Rational(k));
  return g;
}

}  // namespace lacunary
