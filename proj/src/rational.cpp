#include "lacunary/rational.hpp"

#include <climits>
#include <ostream>

#include "lacunary/errors.hpp"

namespace lacunary {

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw DomainError("Rational: cannot parse '" + s + "'");
  }
  if (q.get_den() == 0) throw DomainError("Rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

long Rational::to_long() const {
  if (!is_integer()) throw ExactnessViolation("Rational " + str() + " is not an integer");
  if (!q_.get_num().fits_slong_p()) throw ExactnessViolation("Rational " + str() + " out of range");
  return q_.get_num().get_si();
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("Rational: inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational binomial(long n, long k) {
  if (k < 0) return Rational(0);
  mpz_class b;
  mpz_class top(n);
  mpz_bin_ui(b.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(b);
}

}  // namespace lacunary
