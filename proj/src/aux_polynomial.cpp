#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <sstream>

#include "lacunary/errors.hpp"
#include "lacunary/gamma.hpp"
#include "lacunary/identities.hpp"

namespace lacunary {

namespace {

constexpr int kT = 0, kX = 1, kY = 2, kVars = 3;

MultiPoly mono(const Rational& c, int t, int x, int y) { return MultiPoly::monomial(kVars, c, {t, x, y}); }

struct Shape {
  int d;       // lacunarity
  int alpha;   // associated Laguerre index
  int offset;  // k in r! (r+k)!
};

Shape default_shape(AuxFamily family, int m) {
  if (family == AuxFamily::P) {
    if (m < 1) throw DomainError("derive_aux_polynomial: m must be positive");
    return {2, m, 3 * m};
  }
  if (m != 1) throw DomainError("derive_aux_polynomial: family q is available for m = 1 only");
  return {3, 1, 4};
}

// sum_n t^n L^(alpha)_(dn)(x, y) / n!, through t^N.
MultiPoly lhs_series(const Shape& s, int N) {
  MultiPoly out(kVars);
  for (int n = 0; n <= N; ++n) {
    const int deg = s.d * n;
    for (int r = 0; r <= deg; ++r) {
      const Rational rising = pochhammer(Rational(s.alpha + 1 + r), deg - r);
      Rational c = rising / (factorial(r) * factorial(deg - r) * factorial(n));
      if (r % 2 == 1) c = -c;
      out += mono(c, n, r, deg - r);
    }
  }
  return out;
}

// S_j = e^(t y^d) sum_r r^j a_r / (r + offset)!, a_r = H_r^(d)(slots)/r! with
// slots x_p = (-1)^p C(d,p) x^p y^(d-p) t, all through t^N.
std::vector<MultiPoly> moment_series(const Shape& s, int jmax, int N) {
  std::vector<MultiPoly> slots;
  for (int p = 1; p <= s.d; ++p) {
    Rational c = binomial(s.d, p);
    if (p % 2 == 1) c = -c;
    slots.push_back(mono(c, 1, p, s.d - p));
  }
  const int rmax = s.d * N;
  std::vector<MultiPoly> a{MultiPoly::constant(kVars, Rational(1))};
  for (int k = 0; k < rmax; ++k) {
    MultiPoly acc(kVars);
    for (int q = 1; q <= s.d && q <= k + 1; ++q) {
      acc += MultiPoly::product_truncated(slots[static_cast<std::size_t>(q - 1)] * Rational(q),
                                          a[static_cast<std::size_t>(k + 1 - q)], kT, N);
    }
    a.push_back(acc * Rational(1, k + 1));
  }
  MultiPoly e(kVars);
  for (int k = 0; k <= N; ++k) e += mono(factorial(k).inverse(), k, 0, s.d * k);

  std::vector<MultiPoly> out;
  for (int j = 0; j <= jmax; ++j) {
    MultiPoly acc(kVars);
    for (int r = 0; r <= rmax; ++r) {
      const Rational w = Rational(r).pow(j) / factorial(r + s.offset);
      if (w.is_zero()) continue;
      acc += a[static_cast<std::size_t>(r)] * w;
    }
    out.push_back(MultiPoly::product_truncated(e, acc, kT, N));
  }
  return out;
}

struct Unknown {
  int j, k, i;  // r^j t^k x^i y^(dk-i)
};

// Joint degree in (r, x) is capped at d*alpha: without the cap the system
// has a null space already for p with m = 2.
std::vector<Unknown> unknowns(const Shape& s) {
  std::vector<Unknown> u;
  const int top = s.d * s.alpha;
  for (int j = 0; j <= top; ++j) {
    for (int k = 0; k <= s.alpha; ++k) {
      for (int i = 0; i <= s.d * k && i + j <= top; ++i) u.push_back({j, k, i});
    }
  }
  return u;
}

std::vector<MultiPoly> basis(const Shape& s, const std::vector<Unknown>& u, int N) {
  const auto S = moment_series(s, s.d * s.alpha, N);
  std::vector<MultiPoly> out;
  out.reserve(u.size());
  for (const auto& v : u) {
    out.push_back(MultiPoly::product_truncated(mono(Rational(1), v.k, v.i, s.d * v.k - v.i),
                                               S[static_cast<std::size_t>(v.j)], kT, N));
  }
  return out;
}

enum class SolveStatus { Unique, RankDeficient, Inconsistent };

// Exact Gauss-Jordan elimination on [A | b].
SolveStatus solve(std::vector<std::vector<Rational>> rows, std::size_t cols, std::vector<Rational>& x) {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    const Rational inv = rows[rank][c].inverse();
    for (auto& v : rows[rank]) v = v * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      const Rational f = rows[r][c];
      for (std::size_t k = c; k <= cols; ++k) rows[r][k] = rows[r][k] - f * rows[rank][k];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (!rows[r][cols].is_zero()) return SolveStatus::Inconsistent;
  }
  if (rank < cols) return SolveStatus::RankDeficient;
  x.assign(cols, Rational(0));
  for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = rows[r][cols];
  return SolveStatus::Unique;
}

std::vector<std::vector<Rational>> build_system(const MultiPoly& lhs, const std::vector<MultiPoly>& b) {
  std::map<MultiPoly::Monomial, std::size_t> index;
  auto row_of = [&](const MultiPoly::Monomial& m) {
    auto it = index.find(m);
    if (it == index.end()) it = index.emplace(m, index.size()).first;
    return it->second;
  };
  for (const auto& [m, c] : lhs.terms()) row_of(m);
  for (const auto& p : b) {
    for (const auto& [m, c] : p.terms()) row_of(m);
  }
  std::vector<std::vector<Rational>> rows(index.size(), std::vector<Rational>(b.size() + 1, Rational(0)));
  for (std::size_t u = 0; u < b.size(); ++u) {
    for (const auto& [m, c] : b[u].terms()) rows[index.at(m)][u] = c;
  }
  for (const auto& [m, c] : lhs.terms()) rows[index.at(m)][b.size()] = c;
  return rows;
}

std::vector<MultiPoly> assemble(const Shape& s, const std::vector<Unknown>& u, const std::vector<Rational>& sol) {
  std::vector<MultiPoly> coeffs(static_cast<std::size_t>(s.d * s.alpha + 1), MultiPoly(kVars));
  for (std::size_t k = 0; k < u.size(); ++k) {
    coeffs[static_cast<std::size_t>(u[k].j)] += mono(sol[k], u[k].k, u[k].i, s.d * u[k].k - u[k].i);
  }
  return coeffs;
}

std::string template_text(const Shape& s) {
  std::ostringstream os;
  os << "exp(t y^" << s.d << ") sum_r P(r) H_r^(" << s.d << ")/(r! (r+" << s.offset << ")!)";
  return os.str();
}

struct FitOutcome {
  SolveStatus status = SolveStatus::Inconsistent;
  std::vector<MultiPoly> coefficients;
  int fit_orders = 0;
  std::size_t rank = 0;
  std::size_t unknown_count = 0;
};

std::size_t rank_of(std::vector<std::vector<Rational>> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] = rows[r][k] - f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Least N whose system has full rank, or the rank plateau reached by `last`.
FitOutcome fit(const Shape& s, int nmax_fit) {
  const auto u = unknowns(s);
  FitOutcome out;
  out.unknown_count = u.size();
  const int first = nmax_fit > 0 ? nmax_fit : s.alpha + 1;
  const int last = nmax_fit > 0 ? nmax_fit : s.alpha + 8;
  for (int N = first; N <= last; ++N) {
    std::vector<Rational> sol;
    auto rows = build_system(lhs_series(s, N), basis(s, u, N));
    out.status = solve(rows, u.size(), sol);
    out.fit_orders = N;
    if (out.status == SolveStatus::Inconsistent) return out;
    if (out.status == SolveStatus::RankDeficient) {
      out.rank = rank_of(std::move(rows), u.size());
      continue;
    }
    out.rank = u.size();
    out.coefficients = assemble(s, u, sol);
    return out;
  }
  return out;
}

bool reproduces(const Shape& s, const std::vector<MultiPoly>& coeffs, int V) {
  const auto S = moment_series(s, static_cast<int>(coeffs.size()) - 1, V);
  MultiPoly residual = lhs_series(s, V);
  for (std::size_t j = 0; j < coeffs.size(); ++j) residual -= MultiPoly::product_truncated(coeffs[j], S[j], kT, V);
  return residual.is_zero();
}

std::vector<Rational> poly_times_linear(const std::vector<Rational>& p, const Rational& c0, const Rational& c1) {
  std::vector<Rational> out(p.size() + 1, Rational(0));
  for (std::size_t k = 0; k < p.size(); ++k) {
    out[k] = out[k] + p[k] * c0;
    out[k + 1] = out[k + 1] + p[k] * c1;
  }
  return out;
}

// The representative produced by the umbral expansion:
//   sum_n t^n/n! L^(a)_(dn) = c^a Q(theta) exp(t Z),  Z = (y - c x)^d,
// with Q(n) = (dn+1)...(dn+a), theta = t d/dt, theta^k e^(tZ) =
// sum_i S(k,i) (tZ)^i e^(tZ). Reducing c^(a+l+r) against (r+offset)! leaves
// the rising product (r+a+l+1)...(r+offset).
std::vector<MultiPoly> umbral_representative(const Shape& s) {
  std::vector<Rational> q{Rational(1)};
  for (int j = 1; j <= s.alpha; ++j) q = poly_times_linear(q, Rational(j), Rational(s.d));
  const int kmax = static_cast<int>(q.size()) - 1;
  std::vector<std::vector<Rational>> stirling(static_cast<std::size_t>(kmax + 1),
                                              std::vector<Rational>(static_cast<std::size_t>(kmax + 1), Rational(0)));
  stirling[0][0] = Rational(1);
  for (int k = 1; k <= kmax; ++k) {
    for (int i = 1; i <= k; ++i) {
      stirling[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
          Rational(i) * stirling[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i)] +
          stirling[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)];
    }
  }
  const int rdeg = s.offset - s.alpha;
  std::vector<MultiPoly> coeffs(static_cast<std::size_t>(rdeg + 1), MultiPoly(kVars));
  for (int i = 0; i <= kmax; ++i) {
    Rational ci(0);
    for (int k = i; k <= kmax; ++k) {
      ci = ci + q[static_cast<std::size_t>(k)] * stirling[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
    }
    if (ci.is_zero()) continue;
    for (int l = 0; l <= s.d * i; ++l) {
      if (s.alpha + l > s.offset) throw NoSolution("umbral representative needs a larger factorial offset");
      std::vector<Rational> rising{Rational(1)};
      for (int v = s.alpha + l + 1; v <= s.offset; ++v) rising = poly_times_linear(rising, Rational(v), Rational(1));
      Rational c = ci * binomial(s.d * i, l);
      if (l % 2 == 1) c = -c;
      const MultiPoly m = mono(c, i, l, s.d * i - l);
      for (std::size_t j = 0; j < rising.size(); ++j) coeffs[j] += m * rising[j];
    }
  }
  return coeffs;
}

// Parses sums of monomials such as "6 + 12*t*y^2 - 12*x*y*t".
MultiPoly parse_poly(const std::string& text) {
  MultiPoly out(kVars);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  int sign = 1;
  while (true) {
    skip();
    if (i >= text.size()) break;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    }
    Rational coeff(sign);
    std::array<int, kVars> e{0, 0, 0};
    bool more = true;
    while (more) {
      skip();
      if (std::isdigit(static_cast<unsigned char>(text[i]))) {
        std::size_t j = i;
        while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/')) ++j;
        coeff = coeff * Rational::parse(text.substr(i, j - i));
        i = j;
      } else {
        const char v = text[i++];
        const int var = v == 't' ? kT : v == 'x' ? kX : v == 'y' ? kY : -1;
        if (var < 0) throw DomainError(std::string("parse_poly: unexpected '") + v + "'");
        int p = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          std::size_t j = i;
          while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
          p = std::stoi(text.substr(i, j - i));
          i = j;
        }
        e[static_cast<std::size_t>(var)] += p;
      }
      skip();
      more = i < text.size() && text[i] == '*';
      if (more) ++i;
    }
    out += mono(coeff, e[0], e[1], e[2]);
    sign = 1;
  }
  return out;
}

DerivedAuxPolynomial from_strings(AuxFamily family, int m, const std::vector<std::string>& by_power) {
  DerivedAuxPolynomial p;
  p.family = family;
  p.m = m;
  const Shape s = default_shape(family, m);
  p.lacunarity = s.d;
  p.factorial_offset = s.offset;
  for (const auto& text : by_power) p.coefficients.push_back(parse_poly(text));
  p.template_used = "printed";
  return p;
}

}  // namespace

double DerivedAuxPolynomial::evaluate(double r, double t, double x, double y) const {
  const std::array<double, kVars> v{t, x, y};
  double acc = 0.0;
  for (int j = degree(); j >= 0; --j) {
    acc = acc * r + coefficients[static_cast<std::size_t>(j)].evaluate(std::span<const double>(v));
  }
  return acc;
}

std::string DerivedAuxPolynomial::str() const {
  static const std::vector<std::string> names{"t", "x", "y"};
  std::ostringstream os;
  bool first = true;
  for (int j = degree(); j >= 0; --j) {
    const auto& c = coefficients[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str(names) << ")";
    if (j >= 1) os << "*r";
    if (j >= 2) os << "^" << j;
  }
  return first ? "0" : os.str();
}

DerivedAuxPolynomial derive_aux_polynomial(AuxFamily family, int m, int nmax_fit) {
  Shape s = default_shape(family, m);
  const int extra = 2 * m + 3;
  DerivedAuxPolynomial out;
  out.family = family;
  out.m = m;
  out.lacunarity = s.d;

  FitOutcome f = fit(s, nmax_fit);
  if (f.status == SolveStatus::Inconsistent) {
    out.notes.push_back("template " + template_text(s) + " has no solution; trying offset " +
                        std::to_string(s.d * s.alpha));
    s.offset = s.d * s.alpha;
    f = fit(s, nmax_fit);
    if (f.status == SolveStatus::Inconsistent) {
      throw NoSolution("derive_aux_polynomial: no polynomial in r reproduces the expansion (" +
                       template_text(s) + ")");
    }
  }
  out.factorial_offset = s.offset;
  out.template_used = template_text(s);
  out.fit_orders = f.fit_orders;

  if (f.status == SolveStatus::Unique) {
    out.coefficients = std::move(f.coefficients);
    out.notes.push_back("unique solution of " + std::to_string(f.unknown_count) + " unknowns from orders t^0..t^" +
                        std::to_string(f.fit_orders));
    const auto rep = umbral_representative(s);
    if (rep.size() == out.coefficients.size() &&
        std::equal(rep.begin(), rep.end(), out.coefficients.begin())) {
      out.notes.push_back("agrees with the umbral-expansion representative");
    }
  } else {
    // The recurrence (r+1) a_(r+1) = sum_s s x_s a_(r+1-s) of the Hermite
    // coefficients lets different P give the same series, so the fit only
    // fixes an affine family; take the representative from the expansion.
    const auto rep = umbral_representative(s);
    if (!reproduces(s, rep, f.fit_orders)) {
      throw RankDeficient("derive_aux_polynomial: rank " + std::to_string(f.rank) + " of " +
                          std::to_string(f.unknown_count) + " and no representative satisfies the system");
    }
    out.coefficients = rep;
    out.notes.push_back("template fixes P only up to a " + std::to_string(f.unknown_count - f.rank) +
                        "-dimensional family (rank " + std::to_string(f.rank) + " of " +
                        std::to_string(f.unknown_count) + " through t^" + std::to_string(f.fit_orders) +
                        "); umbral-expansion representative selected");
  }
  if (!reproduces(s, out.coefficients, f.fit_orders + extra)) {
    throw NoSolution("derive_aux_polynomial: fitted polynomial fails beyond the fit range");
  }
  out.verified_orders = extra;
  return out;
}

DerivedAuxPolynomial printed_aux_polynomial(AuxFamily family, int m) {
  if (family == AuxFamily::P && m == 1) {
    return from_strings(family, m,
                        {"6 + 12*t*y^2 - 12*x*y*t + 2*t*x^2", "5 - 4*x*y*t + 10*t*y^2", "1 + 2*t*y^2"});
  }
  if (family == AuxFamily::P && m == 2) {
    return from_strings(
        family, m,
        {"720 - 2400*y*x*t + 3600*y^2*t + 300*x^2*t - 1920*y^3*x*t^2 - 96*y*x^3*t^2 + 720*y^2*x^2*t^2 + "
         "1440*y^4*t^2 + 4*x^4*t^2",
         "684 + 110*x^2*t - 1480*y*x*t + 3420*y^2*t - 1184*y^3*x*t^2 + 264*y^2*x^2*t^2 - 16*y*x^3*t^2 + "
         "1368*y^4*t^2",
         "238 + 10*x^2*t + 1190*y^2*t - 300*y*x*t - 240*y^3*x*t^2 + 24*y^2*x^2*t^2 + 476*y^4*t^2",
         "36 + 180*y^2*t - 20*y*x*t + 72*y^4*t^2 - 16*y^3*x*t^2", "2 + 10*t*y^2 + 4*t^2*y^4"});
  }
  if (family == AuxFamily::Q && m == 1) {
    // As displayed: the linear bracket is multiplied by t, not r, so the
    // displayed polynomial has no r^1 term.
    return from_strings(family, m,
                        {"26*t + 78*t^2 - 63*t^2*x + 9*t^2*x^2 + 24 + 72*t - 108*t*x + 36*t*x^2 - 3*t*x^3", "0",
                         "9 + 27*t - 9*t*x", "1 + 3*t"});
  }
  throw NotFound("printed_aux_polynomial: no printed form for this family and m");
}

AuxComparison compare_with_printed(const DerivedAuxPolynomial& derived) {
  const DerivedAuxPolynomial printed = printed_aux_polynomial(derived.family, derived.m);
  static const std::vector<std::string> names{"t", "x", "y"};
  AuxComparison cmp;
  cmp.printed = printed.str();
  // the printed q has y = 1 substituted
  const bool drop_y = derived.family == AuxFamily::Q;
  const int deg = std::max(derived.degree(), printed.degree());
  for (int j = 0; j <= deg; ++j) {
    MultiPoly d = j <= derived.degree() ? derived.coefficients[static_cast<std::size_t>(j)] : MultiPoly(kVars);
    const MultiPoly p = j <= printed.degree() ? printed.coefficients[static_cast<std::size_t>(j)] : MultiPoly(kVars);
    if (drop_y) d = d.substituted(kY, Rational(1));
    const MultiPoly diff = d - p;
    if (!diff.is_zero()) {
      cmp.deviations.push_back("r^" + std::to_string(j) + ": derived - printed = " + diff.str(names));
    }
  }
  if (derived.factorial_offset != printed.factorial_offset) {
    cmp.deviations.push_back("factorial offset differs: derived " + std::to_string(derived.factorial_offset));
  }
  cmp.matches_paper = cmp.deviations.empty();
  if (!cmp.matches_paper && derived.family == AuxFamily::Q) {
    const auto alt = from_strings(AuxFamily::Q, 1,
                                  {"24 + 72*t - 108*t*x + 36*t*x^2 - 3*t*x^3", "26 + 78*t - 63*t*x + 9*t*x^2",
                                   "9 + 27*t - 9*t*x", "1 + 3*t"});
    bool same = alt.degree() == derived.degree();
    for (int j = 0; same && j <= alt.degree(); ++j) {
      same = derived.coefficients[static_cast<std::size_t>(j)].substituted(kY, Rational(1)) ==
             alt.coefficients[static_cast<std::size_t>(j)];
    }
    if (same) cmp.notes.push_back("reading the factor t after the linear bracket as r reproduces the derived polynomial");
  }
  return cmp;
}

}  // namespace lacunary
