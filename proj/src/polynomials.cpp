#include "lacunary/polynomials.hpp"

#include <cmath>

#include "lacunary/errors.hpp"
#include "lacunary/gamma.hpp"

namespace lacunary {

namespace {

template <class T>
std::vector<T> powers(const T& base, int n) {
  std::vector<T> p;
  p.reserve(static_cast<std::size_t>(n) + 1);
  p.push_back(T(1));
  for (int k = 1; k <= n; ++k) p.push_back(p.back() * base);
  return p;
}

template <class T>
T rgamma_as(GammaParam<T> z) {
  if constexpr (is_exact_v<T>) {
    return rgamma_exact(Rational(z));
  } else {
    return T(rgamma(z));
  }
}

void require_degree(int n, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + ": negative degree");
}

}  // namespace

template <class T>
T laguerre(int n, const T& x, const T& y) {
  require_degree(n, "laguerre");
  const auto xp = powers(T(-x), n);
  const auto yp = powers(y, n);
  T sum(0);
  Rational c(1);  // C(n, r) / r!
  for (int r = 0; r <= n; ++r) {
    sum += from_rational<T>(c) * xp[static_cast<std::size_t>(r)] * yp[static_cast<std::size_t>(n - r)];
    c = c * Rational(n - r, static_cast<long>(r + 1) * (r + 1));
  }
  return sum;
}

template <class T>
T lambda_poly(int n, GammaParam<T> alpha, GammaParam<T> beta, const T& x, const T& y) {
  require_degree(n, "lambda_poly");
  if (!(beta > 0)) throw DomainError("lambda_poly: beta must be positive");
  const auto xp = powers(T(-x), n);
  const auto yp = powers(y, n);
  T sum(0);
  Rational binom(1);
  for (int r = 0; r <= n; ++r) {
    const T g = rgamma_as<T>(beta * r + 1 + alpha);
    if (!(g == T(0))) {
      sum += from_rational<T>(binom) * g * xp[static_cast<std::size_t>(r)] * yp[static_cast<std::size_t>(n - r)];
    }
    binom = binom * Rational(n - r, r + 1);
  }
  return sum;
}

template <class T>
T assoc_laguerre(int n, RealParam<T> alpha, const T& x, const T& y) {
  require_degree(n, "assoc_laguerre");
  using C = RealParam<T>;
  const auto xp = powers(T(-x), n);
  const auto yp = powers(y, n);
  T sum(0);
  // Gamma(1+alpha+n)/Gamma(1+alpha+r) = (1+alpha+r)_(n-r), built downward
  // from r = n together with 1/(r! (n-r)!).
  C rising(1);
  C inv;
  if constexpr (is_exact_v<T>) {
    inv = factorial(n).inverse();
  } else {
    inv = rgamma(static_cast<double>(n) + 1.0);
  }
  for (int r = n; r >= 0; --r) {
    sum += T(rising * inv) * xp[static_cast<std::size_t>(r)] * yp[static_cast<std::size_t>(n - r)];
    if (r == 0) break;
    rising = rising * (alpha + C(r));
    inv = inv * C(r) / C(n - r + 1);
  }
  if constexpr (!is_exact_v<T>) {
    if (!std::isfinite(std::abs(sum))) {
      throw NonFiniteFactor("assoc_laguerre: non-finite value for n = " + std::to_string(n));
    }
  }
  return sum;
}

template <class T>
T hermite(int n, std::span<const T> slots) {
  require_degree(n, "hermite");
  const int m = static_cast<int>(slots.size());
  if (m == 0) return n == 0 ? T(1) : T(0);
  if (m == 1) return powers(slots[0], n)[static_cast<std::size_t>(n)];
  const auto lower = slots.first(static_cast<std::size_t>(m - 1));
  const T& top = slots[static_cast<std::size_t>(m - 1)];
  T sum(0);
  T top_pow(1);
  for (int r = 0; m * r <= n; ++r) {
    const int k = n - m * r;
    const Rational c = factorial(n) / (factorial(k) * factorial(r));
    sum += from_rational<T>(c) * top_pow * hermite<T>(k, lower);
    top_pow *= top;
  }
  return sum;
}

template <class T>
std::vector<T> hermite_scaled_sequence(int count, std::span<const T> slots) {
  std::vector<T> a;
  if (count <= 0) return a;
  a.reserve(static_cast<std::size_t>(count));
  a.push_back(T(1));
  const int m = static_cast<int>(slots.size());
  for (int k = 0; k + 1 < count; ++k) {
    T acc(0);
    for (int s = 1; s <= m && s <= k + 1; ++s) {
      acc += T(s) * slots[static_cast<std::size_t>(s - 1)] * a[static_cast<std::size_t>(k + 1 - s)];
    }
    a.push_back(acc / T(k + 1));
  }
  return a;
}

Complex hermite_classical(int n, const Complex& z) {
  require_degree(n, "hermite_classical");
  Complex prev(1.0), cur = 2.0 * z;
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    const Complex next = 2.0 * z * cur - 2.0 * static_cast<double>(k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Complex hermite2_from_classical(int n, const Complex& x, const Complex& y) {
  if (y == Complex(0.0)) throw DomainError("hermite2_from_classical: y must be nonzero");
  const Complex s = std::sqrt(y);
  const Complex i(0.0, 1.0);
  return checked(ipow(-i * s, n) * hermite_classical(n, i * x / (2.0 * s)), "hermite2_from_classical");
}

template <class T>
T lacunary_decomposition(Lacunarity kind, int n, const T& x, const T& y) {
  require_degree(n, "lacunary_decomposition");
  const auto xp = powers(T(-x), 2 * n);
  const auto yp = powers(y, 2 * n);
  T sum(0);
  if (kind == Lacunarity::Double) {
    for (int r = 0; r <= n; ++r) {
      sum += from_rational<T>(binomial(n, r)) * xp[static_cast<std::size_t>(r)] *
             yp[static_cast<std::size_t>(n - r)] * lambda_poly<T>(n, r, 1, x, y);
    }
    return sum;
  }
  for (int r = 0; r <= n; ++r) {
    for (int k = 0; k <= n; ++k) {
      sum += from_rational<T>(binomial(n, r) * binomial(n, k)) * xp[static_cast<std::size_t>(r + k)] *
             yp[static_cast<std::size_t>(2 * n - r - k)] * lambda_poly<T>(n, r + k, 1, x, y);
    }
  }
  return sum;
}

#define LACUNARY_INSTANTIATE(T)                                                                \
  template T laguerre<T>(int, const T&, const T&);                                           \
  template T lambda_poly<T>(int, GammaParam<T>, GammaParam<T>, const T&, const T&);          \
  template T assoc_laguerre<T>(int, RealParam<T>, const T&, const T&);                       \
  template T hermite<T>(int, std::span<const T>);                                            \
  template std::vector<T> hermite_scaled_sequence<T>(int, std::span<const T>);               \
  template T lacunary_decomposition<T>(Lacunarity, int, const T&, const T&);

LACUNARY_INSTANTIATE(Rational)
LACUNARY_INSTANTIATE(double)
LACUNARY_INSTANTIATE(Complex)

#undef LACUNARY_INSTANTIATE

}  // namespace lacunary
