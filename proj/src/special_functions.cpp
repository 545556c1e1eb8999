#include "lacunary/special_functions.hpp"

#include <cmath>
#include <string>

#include "lacunary/errors.hpp"
#include "lacunary/gamma.hpp"
#include "lacunary/rational.hpp"

namespace lacunary {

namespace {

void require_positive(double beta, const char* what) {
  if (!(beta > 0.0)) throw DomainError(std::string(what) + ": beta must be positive");
}

}  // namespace

Complex wright(double beta, double alpha, const Complex& x, const SumControl& ctrl) {
  require_positive(beta, "wright");
  Complex p(1.0);  // x^r / r!
  int next = 0;
  auto term = [&](int r) {
    if (r != next) throw DomainError("wright: out-of-order term");
    if (r > 0) p *= x / static_cast<double>(r);
    ++next;
    return p * rgamma(beta * r + alpha);
  };
  return checked(sum_series(term, ctrl).value, "wright");
}

Complex mittag_leffler(double beta, double alpha, const Complex& x, const SumControl& ctrl) {
  require_positive(beta, "mittag_leffler");
  if (std::abs(x) > 30.0) throw DomainError("mittag_leffler: |x| > 30 is outside the supported range");
  Complex p(1.0);
  auto term = [&](int r) {
    if (r > 0) p *= x;
    return p * rgamma(beta * r + alpha);
  };
  return checked(sum_series(term, ctrl).value, "mittag_leffler");
}

Complex tricomi(double alpha, const Complex& x, const SumControl& ctrl) {
  Complex p(1.0);
  auto term = [&](int r) {
    if (r > 0) p *= -x / static_cast<double>(r);
    return p * rgamma(1.0 + alpha + r);
  };
  return checked(sum_series(term, ctrl).value, "tricomi");
}

HermiteScaledStream::HermiteScaledStream(std::vector<Complex> slots) : slots_(std::move(slots)) {
  a_.push_back(Complex(1.0));
}

const Complex& HermiteScaledStream::operator[](int k) {
  if (k < 0) throw DomainError("HermiteScaledStream: negative index");
  const int m = static_cast<int>(slots_.size());
  while (static_cast<int>(a_.size()) <= k) {
    const int n = static_cast<int>(a_.size());  // computing a_n
    Complex acc(0.0);
    for (int s = 1; s <= m && s <= n; ++s) {
      acc += static_cast<double>(s) * slots_[static_cast<std::size_t>(s - 1)] * a_[static_cast<std::size_t>(n - s)];
    }
    a_.push_back(acc / static_cast<double>(n));
  }
  return a_[static_cast<std::size_t>(k)];
}

std::vector<Complex> binomial_slots(int m, const Complex& x, const Complex& y, const Complex& t) {
  std::vector<Complex> out;
  for (int p = 1; p <= m; ++p) {
    out.push_back(binomial(m, p).to_double() * ipow(x, p) * ipow(y, m - p) * t);
  }
  return out;
}

Complex h_tricomi(const HBasedSpec& spec, const SumControl& ctrl) {
  const int m = static_cast<int>(spec.slots.size());
  if (m < 2) throw DomainError("h_tricomi: need at least two slots");
  std::vector<Complex> signed_slots = spec.slots;
  if (spec.signs == SlotSigns::Alternating) {
    for (int p = 1; p <= m; p += 2) signed_slots[static_cast<std::size_t>(p - 1)] *= -1.0;
  }
  HermiteScaledStream a(std::move(signed_slots));
  auto f = [&](int r) { return a[r] * rgamma(1.0 + spec.index + r); };
  return checked(sum_in_blocks(f, m, ctrl), "h_tricomi");
}

Complex h_tricomi(double index, std::span<const Complex> slots, const SumControl& ctrl) {
  return h_tricomi(HBasedSpec{index, {slots.begin(), slots.end()}, SlotSigns::Alternating}, ctrl);
}

Complex h_wright(double beta, double alpha, const Complex& x, const Complex& y, const SumControl& ctrl) {
  require_positive(beta, "h_wright");
  HermiteScaledStream a({x, y});
  auto f = [&](int r) { return a[r] * rgamma(beta * r + alpha); };
  return checked(sum_in_blocks(f, 2, ctrl), "h_wright");
}

Complex h_tricomi_bilateral(const Complex& x, const Complex& y, const Complex& tau, const SumControl& ctrl) {
  std::vector<Complex> xp{1.0}, yp{1.0}, tp{1.0};
  std::vector<double> rf{1.0};  // 1/k!
  auto grow = [&](int n) {
    while (static_cast<int>(rf.size()) <= 2 * n) {
      const auto k = rf.size();
      rf.push_back(rf.back() / static_cast<double>(k));
    }
    while (static_cast<int>(xp.size()) <= n) {
      xp.push_back(xp.back() * x);
      yp.push_back(yp.back() * y);
      tp.push_back(tp.back() * tau);
    }
  };
  auto shell = [&](int n) {
    grow(n);
    Complex s(0.0);
    for (int k = 0; k <= n; ++k) {
      for (int r = 0; r + k <= n; ++r) {
        const int q = n - r - k;
        const double w = rf[static_cast<std::size_t>(r)] * rf[static_cast<std::size_t>(q)] *
                         rf[static_cast<std::size_t>(k)] * rf[static_cast<std::size_t>(r + k)] *
                         rf[static_cast<std::size_t>(q + k)];
        s += w * xp[static_cast<std::size_t>(r)] * yp[static_cast<std::size_t>(q)] * tp[static_cast<std::size_t>(k)];
      }
    }
    return s;
  };
  return checked(sum_series(shell, ctrl).value, "h_tricomi_bilateral");
}

Complex h_bessel_j(int n, const Complex& x, const Complex& y, const SumControl& ctrl) {
  if (n < 0) throw DomainError("h_bessel_j: negative order");
  HermiteScaledStream a({x, y});
  // c_r = (n+2r)! / (2^(n+2r) r! (n+r)!)
  double c = std::ldexp(1.0, -n);
  int next = 0;
  auto term = [&](int r) {
    if (r != next) throw DomainError("h_bessel_j: out-of-order term");
    if (r > 0) {
      const double k = r - 1;
      c *= (n + 2 * k + 1) * (n + 2 * k + 2) / (4.0 * (k + 1) * (n + k + 1));
    }
    ++next;
    return (r % 2 == 0 ? 1.0 : -1.0) * c * a[n + 2 * r];
  };
  return checked(sum_series(term, ctrl).value, "h_bessel_j");
}

namespace {

Complex bessel_series(int m, const Complex& z, double sign, const SumControl& ctrl, const char* what) {
  if (m < 0) throw DomainError(std::string(what) + ": negative order");
  const Complex h = z / 2.0;
  const Complex h2 = h * h;
  Complex p = ipow(h, m) * rgamma(static_cast<double>(m) + 1.0);
  auto term = [&](int k) {
    if (k > 0) p *= sign * h2 / (static_cast<double>(k) * static_cast<double>(m + k));
    return p;
  };
  return checked(sum_series(term, ctrl).value, what);
}

}  // namespace

Complex bessel_i(int m, const Complex& z, const SumControl& ctrl) { return bessel_series(m, z, 1.0, ctrl, "bessel_i"); }

Complex bessel_j(int n, const Complex& z, const SumControl& ctrl) { return bessel_series(n, z, -1.0, ctrl, "bessel_j"); }

}  // namespace lacunary
