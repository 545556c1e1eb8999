#pragma once

#include "lacunary/rational.hpp"
#include "lacunary/scalar.hpp"

namespace lacunary {

// Reciprocal Gamma is the primitive: poles of Gamma map to an exact zero.

double rgamma(double z);
Complex rgamma(const Complex& z);

/// 1/Gamma(z) for integer z: 1/(z-1)! or 0 at the poles. Non-integer z has
/// no rational value and raises ExactnessViolation.
Rational rgamma_exact(const Rational& z);

/// Rising factorial a (a+1) ... (a+n-1); the empty product is 1.
template <class T>
T pochhammer(const T& a, long n) {
  if (n < 0) throw DomainError("pochhammer: negative length");
  T result(1);
  for (long k = 0; k < n; ++k) result *= a + T(k);
  return result;
}

}  // namespace lacunary
