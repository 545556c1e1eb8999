#pragma once

#include <cmath>
#include <string>
#include <type_traits>

#include "lacunary/errors.hpp"
#include "lacunary/scalar.hpp"

namespace lacunary {

/// Stopping rule for floating series: stop once `consecutive_small`
/// successive terms satisfy |term| <= rel_tol * |partial sum|.
struct SumControl {
  int max_terms = 5000;
  double rel_tol = 1e-15;
  int consecutive_small = 3;

  void validate() const {
    if (max_terms < 1) throw DomainError("SumControl: max_terms must be >= 1");
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw DomainError("SumControl: rel_tol must lie in (0, 1)");
    if (consecutive_small < 1) throw DomainError("SumControl: consecutive_small must be >= 1");
  }
};

struct SumResult {
  Complex value;
  double tail_estimate = 0.0;  // magnitude of the last term added
  int terms = 0;
};

namespace detail {

// Neumaier compensated summation, componentwise.
class CompensatedSum {
 public:
  void add(const Complex& z) {
    add_part(re_, re_c_, z.real());
    add_part(im_, im_c_, z.imag());
  }
  Complex value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_part(double& sum, double& comp, double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  double re_ = 0.0, re_c_ = 0.0, im_ = 0.0, im_c_ = 0.0;
};

}  // namespace detail

/// Sums term(0) + term(1) + ... under `ctrl`.
template <class Term>
SumResult sum_series(Term&& term, const SumControl& ctrl = {}) {
  ctrl.validate();
  detail::CompensatedSum acc;
  int small_run = 0;
  double last = 0.0;
  for (int k = 0; k < ctrl.max_terms; ++k) {
    const Complex tk = Complex(term(k));
    if (is_nan(tk)) throw InvalidNumber("sum_series: NaN term at index " + std::to_string(k));
    if (!std::isfinite(tk.real()) || !std::isfinite(tk.imag())) {
      throw NonConvergence("sum_series: term " + std::to_string(k) + " overflowed");
    }
    acc.add(tk);
    last = std::abs(tk);
    if (last <= ctrl.rel_tol * std::abs(acc.value())) {
      if (++small_run >= ctrl.consecutive_small) return {acc.value(), last, k + 1};
    } else {
      small_run = 0;
    }
  }
  const Complex s = acc.value();
  if (last > ctrl.rel_tol * std::abs(s)) {
    throw NonConvergence("sum_series: no convergence within " + std::to_string(ctrl.max_terms) + " terms");
  }
  return {s, last, ctrl.max_terms};
}

/// Sums f(0) + f(1) + ... grouped in blocks of `block` consecutive indices,
/// so sequences with regular gaps do not trip the stopping rule early.
template <class F>
Complex sum_in_blocks(F&& f, int block, const SumControl& ctrl = {}) {
  if (block < 1) throw DomainError("sum_in_blocks: block must be >= 1");
  auto term = [&](int k) {
    Complex s(0.0);
    for (int j = 0; j < block; ++j) s += Complex(f(k * block + j));
    return s;
  };
  return sum_series(term, ctrl).value;
}

}  // namespace lacunary
