#include "lacunary/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace lacunary {

namespace {

bool is_nonpositive_integer(double z) { return z <= 0.0 && z == std::floor(z); }

// Godfrey's coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

Complex lanczos_gamma(Complex z) {
  // Valid for Re z >= 1/2.
  z -= 1.0;
  Complex sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) sum += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + kLanczosG + 0.5;
  const Complex log_gamma = 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(sum);
  return std::exp(log_gamma);
}

}  // namespace

double rgamma(double z) {
  if (std::isnan(z)) throw InvalidNumber("rgamma: NaN argument");
  if (!std::isfinite(z)) throw DomainError("rgamma: argument must be finite");
  if (is_nonpositive_integer(z)) return 0.0;
  if (z > 171.7) return 0.0;  // Gamma overflows; the reciprocal underflows
  return 1.0 / std::tgamma(z);
}

Complex rgamma(const Complex& z) {
  if (is_nan(z)) throw InvalidNumber("rgamma: NaN argument");
  if (z.imag() == 0.0) return Complex(rgamma(z.real()), 0.0);
  if (z.real() < 0.5) {
    // 1/Gamma(z) = Gamma(1-z) sin(pi z) / pi
    const Complex g = lanczos_gamma(1.0 - z);
    return checked(g * std::sin(std::numbers::pi * z) / std::numbers::pi, "rgamma");
  }
  return checked(1.0 / lanczos_gamma(z), "rgamma");
}

Rational rgamma_exact(const Rational& z) {
  if (!z.is_integer()) {
    throw ExactnessViolation("rgamma_exact: non-integer argument " + z.str());
  }
  const long n = z.to_long();
  if (n <= 0) return Rational(0);
  return factorial(n - 1).inverse();
}

}  // namespace lacunary
