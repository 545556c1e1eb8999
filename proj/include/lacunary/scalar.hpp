#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "lacunary/errors.hpp"

namespace lacunary {

/// Floating evaluation domain: complex double.
using Complex = std::complex<double>;

inline bool is_nan(const Complex& z) { return std::isnan(z.real()) || std::isnan(z.imag()); }

/// Throws InvalidNumber if `z` carries a NaN; returns it unchanged otherwise.
inline Complex checked(const Complex& z, const char* where) {
  if (is_nan(z)) throw InvalidNumber(std::string(where) + ": NaN produced");
  return z;
}

inline double checked(double v, const char* where) {
  if (std::isnan(v)) throw InvalidNumber(std::string(where) + ": NaN produced");
  return v;
}

/// z^n by repeated squaring; 0^0 = 1. std::pow on complex goes through a
/// logarithm and turns 0^n into NaN.
inline Complex ipow(Complex z, int n) {
  if (n < 0) return 1.0 / ipow(z, -n);
  Complex r(1.0);
  while (n > 0) {
    if (n & 1) r *= z;
    n >>= 1;
    if (n > 0) z *= z;
  }
  return r;
}

/// True when the imaginary residue of a value that should be real is within
/// `factor * (1 + |re|)`.
inline bool is_effectively_real(const Complex& z, double factor = 1e-12) {
  return std::abs(z.imag()) <= factor * (1.0 + std::abs(z.real()));
}

}  // namespace lacunary
