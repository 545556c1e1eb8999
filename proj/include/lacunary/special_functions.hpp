#pragma once

// Series evaluators for the Wright, Mittag-Leffler, Tricomi and Bessel
// families and their Hermite-based lifts. All sums go through sum_series.

#include <span>
#include <vector>

#include "lacunary/scalar.hpp"
#include "lacunary/series.hpp"

namespace lacunary {

/// W^(beta, alpha)(x) = sum x^r / (r! Gamma(beta r + alpha)).
Complex wright(double beta, double alpha, const Complex& x, const SumControl& ctrl = {});

/// E_(beta, alpha)(x) = sum x^r / Gamma(beta r + alpha); |x| <= 30.
Complex mittag_leffler(double beta, double alpha, const Complex& x, const SumControl& ctrl = {});

/// C_alpha(x) = sum (-x)^r / (r! Gamma(1 + alpha + r)).
Complex tricomi(double alpha, const Complex& x, const SumControl& ctrl = {});

/// How slot values map onto the Hermite arguments.
enum class SlotSigns {
  Alternating,  // H_r(-a1, a2, -a3, ...): the convention fixed by the umbral oracle
  AsGiven,      // H_r(a1, a2, ..., am)
};

struct HBasedSpec {
  double index = 0.0;           // s (Tricomi index)
  std::vector<Complex> slots;   // a1..am, m = slots.size() >= 2
  SlotSigns signs = SlotSigns::Alternating;
};

/// m-th order Hermite-based Tricomi function
/// sum_r H_r^(m)(signed slots) / (r! Gamma(1 + s + r)).
Complex h_tricomi(const HBasedSpec& spec, const SumControl& ctrl = {});
Complex h_tricomi(double index, std::span<const Complex> slots, const SumControl& ctrl = {});

/// sum_r H_r^(2)(x, y) / (r! Gamma(beta r + alpha)). Parameter order follows
/// wright(), so y = 0 collapses to wright(beta, alpha, x).
Complex h_wright(double beta, double alpha, const Complex& x, const Complex& y, const SumControl& ctrl = {});

/// sum_(r,s,k) x^r y^s tau^k / (r! s! k! (r+k)! (s+k)!), summed in shells
/// of constant r+s+k.
Complex h_tricomi_bilateral(const Complex& x, const Complex& y, const Complex& tau, const SumControl& ctrl = {});

/// sum_r (-1)^r H_(n+2r)^(2)(x, y) / (2^(n+2r) r! (n+r)!).
Complex h_bessel_j(int n, const Complex& x, const Complex& y, const SumControl& ctrl = {});

/// Modified Bessel I_m(z), integer m >= 0.
Complex bessel_i(int m, const Complex& z, const SumControl& ctrl = {});

/// Bessel J_n(z), integer n >= 0.
Complex bessel_j(int n, const Complex& z, const SumControl& ctrl = {});

/// Incremental H_k^(m)(slots)/k!, extended on demand.
class HermiteScaledStream {
 public:
  explicit HermiteScaledStream(std::vector<Complex> slots);
  const Complex& operator[](int k);

 private:
  std::vector<Complex> slots_;
  std::vector<Complex> a_;
};

/// Slot values a_1..a_m with a_p = C(m,p) x^p y^(m-p) t.
std::vector<Complex> binomial_slots(int m, const Complex& x, const Complex& y, const Complex& t);

}  // namespace lacunary
