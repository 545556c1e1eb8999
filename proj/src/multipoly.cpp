#include "lacunary/multipoly.hpp"

#include <cmath>
#include <sstream>

#include "lacunary/errors.hpp"

namespace lacunary {

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw DomainError("MultiPoly: need at least one variable");
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  return monomial(nvars, c, Monomial(static_cast<std::size_t>(nvars), 0));
}

MultiPoly MultiPoly::variable(int nvars, int var) {
  Monomial m(static_cast<std::size_t>(nvars), 0);
  MultiPoly p(nvars);
  p.check_var(var);
  m[static_cast<std::size_t>(var)] = 1;
  p.add_term(m, Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(int nvars, const Rational& c, Monomial exps) {
  MultiPoly p(nvars);
  if (static_cast<int>(exps.size()) != nvars) throw DomainError("MultiPoly: exponent arity mismatch");
  for (int e : exps) {
    if (e < 0) throw DomainError("MultiPoly: negative exponent");
  }
  p.add_term(exps, c);
  return p;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree(int var) const {
  check_var(var);
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<std::size_t>(var)]);
  return d;
}

MultiPoly MultiPoly::truncated(int var, int max_degree) const {
  check_var(var);
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[static_cast<std::size_t>(var)] <= max_degree) r.terms_.emplace(m, c);
  }
  return r;
}

MultiPoly MultiPoly::coefficient_of(int var, int power) const {
  check_var(var);
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[static_cast<std::size_t>(var)] != power) continue;
    Monomial k = m;
    k[static_cast<std::size_t>(var)] = 0;
    r.add_term(k, c);
  }
  return r;
}

MultiPoly MultiPoly::substituted(int var, const Rational& value) const {
  check_var(var);
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial k = m;
    const int e = k[static_cast<std::size_t>(var)];
    k[static_cast<std::size_t>(var)] = 0;
    r.add_term(k, c * value.pow(e));
  }
  return r;
}

Rational MultiPoly::evaluate(std::span<const Rational> values) const {
  if (static_cast<int>(values.size()) != nvars_) throw DomainError("MultiPoly::evaluate: arity mismatch");
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) term = term * values[i].pow(m[i]);
    }
    sum = sum + term;
  }
  return sum;
}

double MultiPoly::evaluate(std::span<const double> values) const {
  if (static_cast<int>(values.size()) != nvars_) throw DomainError("MultiPoly::evaluate: arity mismatch");
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double term = c.to_double();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) term *= std::pow(values[i], m[i]);
    }
    sum += term;
  }
  return sum;
}

std::string MultiPoly::str(std::span<const std::string> names) const {
  if (static_cast<int>(names.size()) != nvars_) throw DomainError("MultiPoly::str: arity mismatch");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest total degree first reads more naturally
  std::vector<std::pair<Monomial, Rational>> ordered(terms_.rbegin(), terms_.rend());
  for (const auto& [m, c] : ordered) {
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = false;
    std::ostringstream vars;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (has_var) vars << "*";
      vars << names[i];
      if (m[i] > 1) vars << "^" << m[i];
      has_var = true;
    }
    if (!has_var) {
      os << mag.str();
    } else if (mag == Rational(1)) {
      os << vars.str();
    } else {
      os << mag.str() << "*" << vars.str();
    }
  }
  return os.str();
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c = c * s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  return MultiPoly::product_truncated(a, b, 0, -1);
}

MultiPoly MultiPoly::product_truncated(const MultiPoly& a, const MultiPoly& b, int var, int max_degree) {
  a.check_compatible(b);
  a.check_var(var);
  MultiPoly r(a.nvars_);
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (max_degree >= 0 && ma[v] + mb[v] > max_degree) continue;
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_var(int var) const {
  if (var < 0 || var >= nvars_) throw DomainError("MultiPoly: variable index out of range");
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (o.nvars_ != nvars_) throw DomainError("MultiPoly: variable count mismatch");
}

}  // namespace lacunary
