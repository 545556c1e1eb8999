#pragma once

// Closed-form evaluators for the Laguerre-type and Hermite-type families.
// Every template is instantiated for Rational (exact), double and Complex.

#include <span>
#include <type_traits>
#include <vector>

#include "lacunary/rational.hpp"
#include "lacunary/scalar.hpp"

namespace lacunary {

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

/// Gamma-argument parameters (alpha, beta of Lambda): integers in the exact
/// path so every reciprocal Gamma is rational.
template <class T>
using GammaParam = std::conditional_t<is_exact_v<T>, long, double>;

/// Real parameters that only enter through rising factorials.
template <class T>
using RealParam = std::conditional_t<is_exact_v<T>, Rational, double>;

/// Converts an exact coefficient into the evaluation domain T.
template <class T>
T from_rational(const Rational& r) {
  if constexpr (is_exact_v<T>) {
    return r;
  } else {
    return T(r.to_double());
  }
}

/// Two-variable Laguerre L_n(x, y) = n! sum_r (-x)^r y^(n-r) / ((r!)^2 (n-r)!).
template <class T>
T laguerre(int n, const T& x, const T& y);

/// Laguerre-Wright polynomial
/// n! sum_r (-x)^r y^(n-r) / (r! (n-r)!) * 1/Gamma(beta r + 1 + alpha).
template <class T>
T lambda_poly(int n, GammaParam<T> alpha, GammaParam<T> beta, const T& x, const T& y);

/// Associated two-variable Laguerre L_n^(alpha)(x, y). The Gamma prefactor is
/// distributed termwise as the rising factorial (1+alpha+r)_(n-r), so negative
/// integer alpha is well defined.
template <class T>
T assoc_laguerre(int n, RealParam<T> alpha, const T& x, const T& y);

/// m-variable Hermite H_n^(m)(x_1..x_m) = n! [t^n] exp(sum_s x_s t^s), with
/// m = slots.size(), by reduction to order m-1.
template <class T>
T hermite(int n, std::span<const T> slots);

/// H_k^(m)(slots) / k! for k = 0..count-1, from the generating-function
/// recurrence (k+1) a_(k+1) = sum_s s x_s a_(k+1-s).
template <class T>
std::vector<T> hermite_scaled_sequence(int count, std::span<const T> slots);

/// Physicists' Hermite H_n(z) by three-term recurrence.
Complex hermite_classical(int n, const Complex& z);

/// H_n^(2)(x, y) through (-i sqrt y)^n H_n(i x / (2 sqrt y)); y must be nonzero.
Complex hermite2_from_classical(int n, const Complex& x, const Complex& y);

enum class Lacunarity { Double = 2, Triple = 3 };

/// L_(2n) or L_(3n) rebuilt from Lambda_n^(r) blocks.
template <class T>
T lacunary_decomposition(Lacunarity kind, int n, const T& x, const T& y);

}  // namespace lacunary
