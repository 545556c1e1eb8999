#include "lacunary/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "lacunary/errors.hpp"
#include "lacunary/special_functions.hpp"

namespace lacunary {

QuadratureRule gauss_laguerre(int n) {
  if (n < 1) throw DomainError("gauss_laguerre: need at least one node");
  // Jacobi matrix of the monic Laguerre recurrence: diag 2k+1, offdiag k+1.
  Eigen::VectorXd diag(n), sub(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) diag(k) = 2.0 * k + 1.0;
  for (int k = 0; k + 1 < n; ++k) sub(k) = k + 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw QuadratureFailure("gauss_laguerre: eigensolver failed");
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double v0 = solver.eigenvectors()(0, k);
    rule.nodes[static_cast<std::size_t>(k)] = solver.eigenvalues()(k);
    rule.weights[static_cast<std::size_t>(k)] = v0 * v0;  // mu_0 = 1
  }
  return rule;
}

namespace {

const QuadratureRule& cached_rule(int n) {
  static std::mutex mu;
  static std::map<int, QuadratureRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gauss_laguerre(n)).first;
  return it->second;
}

double apply(const QuadratureRule& rule, const std::function<double(double)>& f) {
  double s = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    if (rule.weights[k] == 0.0) continue;
    s += rule.weights[k] * f(rule.nodes[k]);
  }
  return s;
}

}  // namespace

QuadratureResult integrate_laguerre_weight(const std::function<double(double)>& f, double tol,
                                           std::vector<int> sizes) {
  if (sizes.size() < 2) throw DomainError("integrate_laguerre_weight: need at least two rule sizes");
  double prev = apply(cached_rule(sizes[0]), f);
  double err = 0.0;
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    const double cur = apply(cached_rule(sizes[i]), f);
    err = std::abs(cur - prev);
    if (!std::isfinite(cur)) throw QuadratureFailure("integrate_laguerre_weight: non-finite value");
    if (err <= tol * std::max(1.0, std::abs(cur))) return {cur, err, sizes[i]};
    prev = cur;
  }
  throw QuadratureFailure("integrate_laguerre_weight: error estimate " + std::to_string(err) +
                          " above tolerance after " + std::to_string(sizes.back()) + " nodes");
}

QuadratureResult borel_j0(double x, double tol) {
  auto f = [x](double s) { return bessel_j(0, Complex(std::sqrt(s) * x, 0.0)).real(); };
  return integrate_laguerre_weight(f, tol);
}

}  // namespace lacunary
