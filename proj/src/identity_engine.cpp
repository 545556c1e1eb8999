#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "lacunary/errors.hpp"
#include "lacunary/identities.hpp"

namespace lacunary {

namespace {

constexpr double kLhsStop = 1e-14;     // relative size of the terms that end the LHS
constexpr int kMinLhsTerms = 8;
constexpr int kMaxLhsTerms = 4000;
constexpr int kStabilityExtra = 10;
constexpr double kStabilityLimit = 1e-9;
constexpr double kImagResidue = 1e-10;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string point_text(const std::vector<std::string>& names, const Point& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ", ";
    if (i < names.size()) os << names[i] << "=";
    os << p[i].str();
  }
  os << ")";
  return os.str();
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Point default_sample(std::mt19937_64& rng, std::size_t n) {
  Point p;
  for (std::size_t i = 0; i < n; ++i) {
    long num = static_cast<long>(rng() % 18) - 9;
    if (num >= 0) ++num;  // skip zero
    const long den = static_cast<long>(rng() % 6) + 1;
    p.emplace_back(num, den);
  }
  return p;
}

double effective_tolerance(const IdentityCase& c, const CheckOptions& opts) {
  if (!opts.tolerance) return c.tolerance;
  if (!(*opts.tolerance > 0.0) || *opts.tolerance > c.tolerance) {
    throw ConfigError("tolerance override must lie in (0, " + sci(c.tolerance) + "] for " + c.id);
  }
  return *opts.tolerance;
}

VerificationReport base_report(const IdentityCase& c, CheckMode mode) {
  VerificationReport r;
  r.id = c.id;
  r.paper_ref = c.paper_ref;
  r.mode = mode;
  r.pass = true;
  return r;
}

void require_mode(const IdentityCase& c, CheckMode mode) {
  if (!c.supports(mode)) {
    throw ModeUnsupported(c.id + " does not register mode " + std::string(mode_name(mode)));
  }
}

template <class T>
std::vector<T> limited(std::vector<T> v, const std::optional<int>& max_points) {
  if (max_points && *max_points >= 0 && static_cast<std::size_t>(*max_points) < v.size()) {
    v.resize(static_cast<std::size_t>(*max_points));
  }
  return v;
}

}  // namespace

std::string_view mode_name(CheckMode mode) {
  switch (mode) {
    case CheckMode::ExactCoeff: return "EXACT_COEFF";
    case CheckMode::NumericPointwise: return "NUMERIC_POINTWISE";
    case CheckMode::Quadrature: return "QUADRATURE";
  }
  return "?";
}

bool IdentityCase::supports(CheckMode mode) const {
  return std::find(modes.begin(), modes.end(), mode) != modes.end();
}

const IdentityCase& lookup(std::string_view id) {
  for (const auto& c : registry()) {
    if (c.id == id) return c;
  }
  std::string all;
  for (const auto& c : registry()) all += (all.empty() ? "" : ", ") + c.id;
  throw NotFound("unknown identity '" + std::string(id) + "'; valid ids: " + all);
}

std::vector<std::string> registry_ids() {
  std::vector<std::string> ids;
  for (const auto& c : registry()) ids.push_back(c.id);
  return ids;
}

VerificationReport check_coefficients(const IdentityCase& c, const CheckOptions& opts) {
  require_mode(c, CheckMode::ExactCoeff);
  const int order = opts.nmax.value_or(c.exact_order);
  if (order < 0) throw ConfigError("coefficient order must be nonnegative");
  VerificationReport rep = base_report(c, CheckMode::ExactCoeff);
  rep.truncation = order;
  std::mt19937_64 rng(opts.seed ^ fnv1a(c.id));

  for (const auto& v : c.exact) {
    std::vector<Point> tuples = v.tuples;
    for (int k = 0; k < v.sampled_tuples; ++k) {
      tuples.push_back(v.sampler ? v.sampler(rng) : default_sample(rng, v.parameter_names.size()));
    }
    tuples = limited(std::move(tuples), opts.max_points);
    int mismatches = 0;
    std::size_t length = 0;
    for (const auto& pt : tuples) {
      ++rep.grid_size;
      try {
        const auto lhs = v.lhs(pt, order);
        auto rhs = v.rhs(pt, order);
        if (opts.flip_rhs_sign) {
          for (auto& x : rhs) x = -x;
        }
        length = lhs.size();
        if (lhs.size() != rhs.size()) {
          rep.pass = false;
          rep.notes.push_back(v.label + " " + point_text(v.parameter_names, pt) + ": coefficient lists differ in length");
          continue;
        }
        for (std::size_t k = 0; k < lhs.size(); ++k) {
          if (lhs[k] == rhs[k]) continue;
          const double diff = (lhs[k] - rhs[k]).abs().to_double();
          const double rel = rhs[k].is_zero() ? diff : diff / rhs[k].abs().to_double();
          rep.max_abs_err = std::max(rep.max_abs_err, diff);
          rep.max_rel_err = std::max(rep.max_rel_err, rel);
          if (mismatches++ < 3) {
            rep.notes.push_back(v.label + " " + point_text(v.parameter_names, pt) + ": coefficient " +
                                std::to_string(k) + " differs (" + lhs[k].str() + " vs " + rhs[k].str() + ")");
          }
        }
      } catch (const Error& e) {
        rep.pass = false;
        rep.notes.push_back(v.label + " " + point_text(v.parameter_names, pt) + ": " + e.what());
      }
    }
    if (mismatches > 0) rep.pass = false;
    rep.notes.push_back(v.label + ": " + std::to_string(tuples.size()) + " tuples x " + std::to_string(length) +
                        " coefficients, " + (mismatches == 0 ? "exact match" : std::to_string(mismatches) + " mismatches"));
  }
  for (const auto& n : c.notes) rep.notes.push_back(n);
  return rep;
}

VerificationReport check_coefficients(std::string_view id, int nmax) {
  CheckOptions opts;
  opts.nmax = nmax;
  return check_coefficients(lookup(id), opts);
}

PointEvaluation evaluate_point(const PointwiseVariant& v, const Point& p, const CheckOptions& opts) {
  if (v.in_domain && !v.in_domain(p)) {
    throw DomainError(v.label + ": grid point " + point_text(v.parameter_names, p) + " outside the registered domain");
  }
  PointEvaluation ev;
  Rational exact(0);
  std::vector<double> magnitudes;
  int n = 0;
  if (opts.nmax) {
    if (*opts.nmax < 1) throw ConfigError("series length must be positive");
    for (; n < *opts.nmax; ++n) {
      const Rational term = v.lhs_term(p, n);
      exact += term;
      magnitudes.push_back(std::abs(term.to_double()));
    }
  } else {
    int small = 0;
    for (; n < kMaxLhsTerms; ++n) {
      const Rational term = v.lhs_term(p, n);
      exact += term;
      const double mag = std::abs(term.to_double());
      magnitudes.push_back(mag);
      small = mag <= kLhsStop * std::abs(exact.to_double()) ? small + 1 : 0;
      if (small >= 3 && n + 1 >= kMinLhsTerms) break;
    }
    if (n == kMaxLhsTerms) throw NonConvergence(v.label + ": left-hand series did not settle");
    ++n;
  }
  ev.terms = n;
  ev.lhs = exact.to_double();
  Rational longer = exact;
  for (int k = n; k < n + kStabilityExtra; ++k) longer += v.lhs_term(p, k);
  ev.lhs_longer = longer.to_double();
  const double scale = std::abs(ev.lhs) > 0.0 ? std::abs(ev.lhs) : 1.0;
  ev.tail = magnitudes.back() / scale;
  ev.stability = std::abs(ev.lhs_longer - ev.lhs) / scale;

  std::vector<double> values;
  for (const auto& q : p) values.push_back(q.to_double());
  for (const auto& form : v.rhs) ev.rhs.push_back(form.eval(values, opts.sum_control));
  return ev;
}

VerificationReport check_pointwise(const IdentityCase& c, const CheckOptions& opts) {
  require_mode(c, CheckMode::NumericPointwise);
  const double tol = effective_tolerance(c, opts);
  const double stability_limit = std::min(tol, kStabilityLimit);
  VerificationReport rep = base_report(c, CheckMode::NumericPointwise);

  for (const auto& v : c.numeric) {
    const auto grid = limited(v.grid, opts.max_points);
    double v_rel = 0.0, v_tail = 0.0, v_stab = 0.0;
    int v_terms = 0, failures = 0;
    std::vector<double> info_rel(v.rhs.size(), 0.0);
    for (const auto& pt : grid) {
      ++rep.grid_size;
      const std::string where = v.label + " " + point_text(v.parameter_names, pt);
      auto fail = [&](const std::string& why) {
        rep.pass = false;
        if (failures++ < 3) rep.notes.push_back(where + ": " + why);
      };
      PointEvaluation ev;
      try {
        ev = evaluate_point(v, pt, opts);
      } catch (const Error& e) {
        fail(e.what());
        continue;
      }
      v_terms = std::max(v_terms, ev.terms);
      v_tail = std::max(v_tail, ev.tail);
      v_stab = std::max(v_stab, ev.stability);
      rep.truncation = std::max(rep.truncation, ev.terms);
      if (ev.tail > 0.1 * tol) fail("left-hand tail " + sci(ev.tail) + " above 0.1*tolerance");
      if (ev.stability > stability_limit) fail("truncation N -> N+10 moves the sum by " + sci(ev.stability));
      for (std::size_t f = 0; f < v.rhs.size(); ++f) {
        Complex rhs = ev.rhs[f];
        if (opts.flip_rhs_sign) rhs = -rhs;
        const double abs_err = std::abs(Complex(ev.lhs) - rhs);
        const double rel_err = std::abs(rhs) > 0.0 ? abs_err / std::abs(rhs) : abs_err;
        if (!v.rhs[f].checked) {
          info_rel[f] = std::max(info_rel[f], rel_err);
          continue;
        }
        rep.max_abs_err = std::max(rep.max_abs_err, abs_err);
        rep.max_rel_err = std::max(rep.max_rel_err, rel_err);
        v_rel = std::max(v_rel, rel_err);
        if (!is_effectively_real(rhs, kImagResidue)) {
          fail(v.rhs[f].label + ": imaginary residue " + sci(std::abs(rhs.imag())));
        }
        if (!(rel_err <= tol)) fail(v.rhs[f].label + ": relative error " + sci(rel_err));
      }
    }
    rep.notes.push_back(v.label + ": " + std::to_string(grid.size()) + " points, N<=" + std::to_string(v_terms) +
                        ", tail<=" + sci(v_tail) + ", stability<=" + sci(v_stab) + ", max rel err " + sci(v_rel));
    for (std::size_t f = 0; f < v.rhs.size(); ++f) {
      if (v.rhs[f].checked) continue;
      rep.notes.push_back(v.label + ": unchecked " + v.rhs[f].label + " has max rel err " + sci(info_rel[f]));
    }
  }
  for (const auto& n : c.notes) rep.notes.push_back(n);
  return rep;
}

VerificationReport check_quadrature(const IdentityCase& c, const CheckOptions& opts) {
  require_mode(c, CheckMode::Quadrature);
  const double tol = effective_tolerance(c, opts);
  VerificationReport rep = base_report(c, CheckMode::Quadrature);
  const double quad_tol = std::min(1e-10, tol);
  for (const auto& v : c.quadrature) {
    const auto points = limited(v.points, opts.max_points);
    for (double x : points) {
      ++rep.grid_size;
      try {
        const QuadratureResult q = v.integrate(x, quad_tol);
        rep.truncation = std::max(rep.truncation, q.nodes);
        double value = q.value;
        if (opts.flip_rhs_sign) value = -value;
        const double exact = v.closed_form(x);
        const double abs_err = std::abs(value - exact);
        const double rel_err = exact != 0.0 ? abs_err / std::abs(exact) : abs_err;
        rep.max_abs_err = std::max(rep.max_abs_err, abs_err);
        rep.max_rel_err = std::max(rep.max_rel_err, rel_err);
        if (!(abs_err <= tol && rel_err <= tol)) {
          rep.pass = false;
          rep.notes.push_back(v.label + " at x=" + sci(x) + ": error " + sci(abs_err));
        }
      } catch (const Error& e) {
        rep.pass = false;
        rep.notes.push_back(v.label + " at x=" + sci(x) + ": " + e.what());
      }
    }
    rep.notes.push_back(v.label + ": " + std::to_string(points.size()) + " points, max abs err " + sci(rep.max_abs_err));
  }
  for (const auto& n : c.notes) rep.notes.push_back(n);
  return rep;
}

VerificationReport verify(const IdentityCase& c, CheckMode mode, const CheckOptions& opts) {
  switch (mode) {
    case CheckMode::ExactCoeff: return check_coefficients(c, opts);
    case CheckMode::NumericPointwise: return check_pointwise(c, opts);
    case CheckMode::Quadrature: return check_quadrature(c, opts);
  }
  throw ModeUnsupported("unknown mode");
}

}  // namespace lacunary
