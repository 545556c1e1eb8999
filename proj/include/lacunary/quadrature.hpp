#pragma once

// Gauss-Laguerre quadrature for integrals of the form int_0^inf e^(-s) f(s) ds.

#include <functional>
#include <vector>

namespace lacunary {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point rule for the weight e^(-s) on [0, inf), by Golub-Welsch.
QuadratureRule gauss_laguerre(int n);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // difference between the last two rules
  int nodes = 0;
};

/// Applies rules of increasing size until two consecutive ones agree to
/// `tol` (absolute, scaled by max(1, |value|)); QuadratureFailure otherwise.
QuadratureResult integrate_laguerre_weight(const std::function<double(double)>& f, double tol,
                                           std::vector<int> sizes = {24, 48, 96, 160});

/// int_0^inf e^(-s) J0(sqrt(s) x) ds.
QuadratureResult borel_j0(double x, double tol);

}  // namespace lacunary
