#include "liegeo/construct.hpp"

#include "liegeo/structure.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace liegeo {

namespace {

// Collects brackets in any index order, flipping to i < j.
class BracketTable {
 public:
  void add(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
    if (i == j) throw std::logic_error("bracket of a basis element with itself");
    if (sgn(c) == 0) return;
    if (i < j)
      entries_.push_back({i, j, k, c});
    else
      entries_.push_back({j, i, k, Rational(-c)});
  }
  const std::vector<BracketEntry>& entries() const { return entries_; }

 private:
  std::vector<BracketEntry> entries_;
};

std::vector<std::string> indexed_names(const std::string& prefix, std::size_t from, std::size_t to) {
  std::vector<std::string> names;
  for (std::size_t i = from; i <= to; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

}  // namespace

TwoCocycle::TwoCocycle(const LieAlgebra& L, Matrix w) : w_(std::move(w)) {
  const std::size_t n = L.dim();
  if (w_.rows() != n || w_.cols() != n) throw std::invalid_argument("cocycle: size does not match the algebra");
  if (!w_.is_skew()) throw std::invalid_argument("cocycle: matrix is not skew-symmetric");
  auto on_bracket = [&](std::size_t i, std::size_t j, std::size_t l) {
    Rational s = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (sgn(L.c(i, j, k)) != 0) s += L.c(i, j, k) * w_(k, l);
    return s;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (sgn(on_bracket(i, j, k) + on_bracket(j, k, i) + on_bracket(k, i, j)) != 0)
          throw std::invalid_argument("cocycle identity fails on (" + std::to_string(i + 1) + ", " +
                                      std::to_string(j + 1) + ", " + std::to_string(k + 1) + ")");
}

LieAlgebra heisenberg(std::size_t n) {
  if (n == 0) throw std::invalid_argument("heisenberg: n must be at least 1");
  BracketTable t;
  for (std::size_t i = 0; i < n; ++i) t.add(i, n + i, 2 * n, 1);
  auto names = indexed_names("e", 1, 2 * n);
  names.push_back("e0");
  return LieAlgebra::from_brackets("heisenberg" + std::to_string(n), names, t.entries());
}

LieAlgebra central_extension(const LieAlgebra& L, const TwoCocycle& w, std::string central_name) {
  const std::size_t n = L.dim();
  std::vector<BracketEntry> entries = L.entries();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (sgn(w.matrix()(i, j)) != 0) entries.push_back({i, j, n, w.matrix()(i, j)});
  auto names = L.basis_names();
  names.push_back(std::move(central_name));
  return LieAlgebra::from_brackets(L.name() + "_ext", names, entries);
}

LieAlgebra semidirect_by_derivation(const LieAlgebra& H, const Matrix& d, std::string generator_name) {
  const std::size_t n = H.dim();
  if (d.rows() != n || d.cols() != n) throw std::invalid_argument("semidirect: derivation has the wrong size");
  if (!is_derivation(H, d)) throw std::invalid_argument("semidirect: matrix is not a derivation");
  BracketTable t;
  for (const auto& e : H.entries()) t.add(e.i, e.j, e.k, e.coeff);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) t.add(n, j, k, d(k, j));
  auto names = H.basis_names();
  names.push_back(std::move(generator_name));
  return LieAlgebra::from_brackets(H.name() + "_sd", names, t.entries());
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t na = a.dim();
  std::vector<BracketEntry> entries = a.entries();
  for (const auto& e : b.entries()) entries.push_back({e.i + na, e.j + na, e.k + na, e.coeff});
  std::vector<std::string> names = a.basis_names();
  std::set<std::string> used(names.begin(), names.end());
  for (std::string name : b.basis_names()) {
    while (used.count(name)) name += "'";
    used.insert(name);
    names.push_back(std::move(name));
  }
  std::string name = a.name().empty() ? b.name() : b.name().empty() ? a.name() : a.name() + "+" + b.name();
  return LieAlgebra::from_brackets(name, names, entries);
}

LieAlgebra e2() {
  BracketTable t;
  t.add(2, 0, 1, 1);
  t.add(2, 1, 0, -1);
  return LieAlgebra::from_brackets("e2", indexed_names("e", 1, 3), t.entries());
}

LieAlgebra sl2() {
  BracketTable t;
  t.add(2, 0, 0, 2);
  t.add(2, 1, 1, -2);
  t.add(0, 1, 2, 1);
  return LieAlgebra::from_brackets("sl2", indexed_names("e", 1, 3), t.entries());
}

LieAlgebra so3() {
  BracketTable t;
  t.add(0, 1, 2, 1);
  t.add(1, 2, 0, 1);
  t.add(2, 0, 1, 1);
  return LieAlgebra::from_brackets("so3", indexed_names("e", 1, 3), t.entries());
}

LieAlgebra oscillator() {
  BracketTable t;
  t.add(0, 1, 2, 1);
  t.add(0, 2, 1, -1);
  t.add(1, 2, 3, 1);
  return LieAlgebra::from_brackets("oscillator", {"h", "p", "q", "z"}, t.entries());
}

LieAlgebra aff1() {
  BracketTable t;
  t.add(0, 1, 1, 1);
  return LieAlgebra::from_brackets("aff1", indexed_names("e", 1, 2), t.entries());
}

LieAlgebra hyperbolic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("hyperbolic: n must be at least 1");
  BracketTable t;
  for (std::size_t i = 1; i <= n; ++i) t.add(0, i, i, 1);
  return LieAlgebra::from_brackets("hyperbolic" + std::to_string(n), indexed_names("e", 0, n), t.entries());
}

LieAlgebra flat5() {
  return direct_sum(e2(), LieAlgebra::from_brackets("", {"e4", "e5"}, {})).renamed("flat5");
}

LieAlgebra gn_family(std::size_t n, const Rational& p, const std::vector<Rational>& p_list, const Rational& q) {
  if (n == 0) throw std::invalid_argument("gn_family: n must be at least 1");
  if (p_list.size() != n) throw std::invalid_argument("gn_family: expected " + std::to_string(n) + " weights");
  const std::size_t z = 2 * n, u = 2 * n + 1, top = 2 * n + 2;
  BracketTable t;
  for (std::size_t i = 0; i < n; ++i) {
    t.add(i, n + i, z, 1);
    t.add(top, i, i, p_list[i]);
    t.add(top, n + i, n + i, p - p_list[i]);
  }
  t.add(top, z, z, p);
  t.add(top, u, u, q);
  auto names = indexed_names("e", 1, 2 * n);
  names.push_back("e0");
  names.push_back("e" + std::to_string(2 * n + 1));
  names.push_back("e" + std::to_string(2 * n + 2));
  return LieAlgebra::from_brackets("gn" + std::to_string(n), names, t.entries());
}

LieAlgebra gn_default() { return gn_family(1, 2, {Rational(1)}, 3); }

namespace {

// (i, j, k): [e_i, e_j] = +-1/2 e_k, i in so(3), j, k in R^4 (0-based).
constexpr std::array<std::array<std::size_t, 3>, 12> kSpinEntries{{
    {0, 3, 6}, {0, 4, 5}, {0, 5, 4}, {0, 6, 3},
    {1, 3, 4}, {1, 4, 3}, {1, 5, 6}, {1, 6, 5},
    {2, 3, 5}, {2, 4, 6}, {2, 5, 3}, {2, 6, 4},
}};

StructureConstants spin_constants(unsigned mask) {
  BracketTable t;
  t.add(0, 1, 2, 1);
  t.add(1, 2, 0, 1);
  t.add(2, 0, 1, 1);
  for (std::size_t b = 0; b < kSpinEntries.size(); ++b) {
    const auto& [i, j, k] = kSpinEntries[b];
    t.add(i, j, k, (mask >> b) & 1u ? frac(-1, 2) : frac(1, 2));
  }
  return StructureConstants::from_entries(7, t.entries());
}

unsigned find_spin_mask() {
  for (unsigned mask = 0; mask < (1u << kSpinEntries.size()); ++mask) {
    StructureConstants c = spin_constants(mask);
    if (!validate(c).empty()) continue;
    const LieAlgebra L("r4_so3", indexed_names("e", 1, 7), std::move(c));
    bool all_contact = true;
    for (std::size_t w = 3; w < 7 && all_contact; ++w) all_contact = is_contact(L, unit_vector(7, w));
    if (all_contact) return mask;
  }
  throw std::logic_error("r4_so3: no consistent sign assignment");
}

}  // namespace

unsigned r4_so3_sign_mask() {
  static const unsigned mask = find_spin_mask();
  return mask;
}

LieAlgebra r4_so3_with_signs(unsigned mask) {
  return LieAlgebra("r4_so3", indexed_names("e", 1, 7), spin_constants(mask));
}

LieAlgebra r4_so3() { return r4_so3_with_signs(r4_so3_sign_mask()); }

LieAlgebra ch2_solvable() {
  BracketTable t;
  t.add(0, 1, 2, 1);
  t.add(3, 0, 0, frac(1, 2));
  t.add(3, 1, 1, frac(1, 2));
  t.add(3, 2, 2, 1);
  return LieAlgebra::from_brackets("ch2_solvable", {"x", "y", "z", "a"}, t.entries());
}

namespace {

Matrix block_metric(const Metric& g_h) {
  const std::size_t n = g_h.dim();
  Matrix g(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = g_h.matrix()(i, j);
  g(n, n) = 1;
  return g;
}

// Lagrange interpolation through (xs[i], ys[i]).
Polynomial interpolate(const Vector& xs, const Vector& ys) {
  Polynomial result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Polynomial basis(Vector{Rational(1)});
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * Polynomial(Vector{Rational(-xs[j]), Rational(1)});
      denom *= xs[i] - xs[j];
    }
    result = result + Rational(ys[i] / denom) * basis;
  }
  return result;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  const Integer num = r.get_num(), den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  return Rational(Integer(sqrt(num)), Integer(sqrt(den)));
}

// Shrinks [lo, hi] around the unique sign change of p.
Rational bisect(const Polynomial& p, Rational lo, Rational hi, int iterations) {
  const int s_lo = sgn(p(lo));
  for (int it = 0; it < iterations; ++it) {
    const Rational mid = (lo + hi) / 2;
    const int s = sgn(p(mid));
    if (s == 0) return mid;
    if (s == s_lo)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2;
}

struct ScaleRoot {
  Rational t;
  bool exact;
};

// Nonzero real roots of a polynomial of degree 1 or 2, preferring the
// smallest positive one.
std::optional<ScaleRoot> pick_root(const Polynomial& g) {
  std::vector<ScaleRoot> roots;
  if (g.degree() == 1) {
    roots.push_back({Rational(-g.coefficient(0) / g.coefficient(1)), true});
  } else if (g.degree() == 2) {
    const Rational a = g.coefficient(2), b = g.coefficient(1), c = g.coefficient(0);
    const Rational disc = b * b - 4 * a * c;
    if (sgn(disc) < 0) return std::nullopt;
    if (auto s = rational_sqrt(disc)) {
      roots.push_back({Rational((-b - *s) / (2 * a)), true});
      roots.push_back({Rational((-b + *s) / (2 * a)), true});
    } else {
      // The vertex separates the two simple roots; Cauchy's bound caps them.
      const Rational vertex = -b / (2 * a);
      const Rational bound = 1 + std::max(abs(Rational(b / a)), abs(Rational(c / a)));
      roots.push_back({bisect(g, -bound, vertex, 64), false});
      roots.push_back({bisect(g, vertex, bound, 64), false});
    }
  } else {
    throw std::logic_error("einstein scale polynomial has unexpected degree " + std::to_string(g.degree()));
  }
  std::optional<ScaleRoot> best;
  for (const auto& r : roots) {
    if (sgn(r.t) == 0) continue;
    if (!best) {
      best = r;
      continue;
    }
    const bool r_pos = sgn(r.t) > 0, b_pos = sgn(best->t) > 0;
    if ((r_pos && !b_pos) || (r_pos == b_pos && abs(r.t) < abs(best->t))) best = r;
  }
  return best;
}

}  // namespace

EinsteinContactResult einstein_contact_extension(const LieAlgebra& H, const Covector& alpha, const Metric& g_h,
                                                 const Matrix& d, double tolerance) {
  const std::size_t n = H.dim();
  if (alpha.size() != n || g_h.dim() != n || d.rows() != n || d.cols() != n)
    throw PreconditionError("dimension", "alpha, metric and derivation must match dim " + std::to_string(n));
  if (n % 2 != 0 || n == 0) throw PreconditionError("exact_symplectic", "dimension " + std::to_string(n) + " is odd");
  if (sgn(symplectic_scalar(H, alpha)) == 0) throw PreconditionError("exact_symplectic", "Pf(d alpha) = 0");
  if (!g_h.riemannian()) throw PreconditionError("riemannian", "metric is not positive definite");
  if (!is_standard_einstein(H, g_h) && !is_standard_einstein(H, g_h, tolerance))
    throw PreconditionError("standard_einstein", "metric is not a standard Einstein metric");
  if (d.is_zero()) throw PreconditionError("nonzero", "D = 0");
  if (!is_derivation(H, d)) throw PreconditionError("derivation", "D is not a derivation");
  const Subspace a_space = derived_ideal(H).orthogonal(g_h.matrix());
  for (const auto& a : a_space.basis())
    if (!commutator(d, H.ad(a)).is_zero())
      throw PreconditionError("commutes", "D does not commute with ad(" + to_string(a) + ")");
  if (!(g_h.matrix() * d).is_symmetric()) throw PreconditionError("symmetric", "D is not g-symmetric");

  const Metric g(block_metric(g_h));
  auto algebra_at = [&](const Rational& t) { return semidirect_by_derivation(H, t * d).renamed(H.name() + "_einstein"); };

  // Ricci entries are quadratic in t; interpolate and confirm at a fourth point.
  const Vector ts{Rational(0), Rational(1), Rational(2)};
  std::vector<Matrix> samples;
  for (const auto& t : ts) samples.push_back(ricci(algebra_at(t), g));
  const Matrix check = ricci(algebra_at(3), g);
  const std::size_t m = n + 1;
  std::vector<Polynomial> ric(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vector ys;
      for (const auto& s : samples) ys.push_back(s(i, j));
      ric[i * m + j] = interpolate(ts, ys);
      if (ric[i * m + j](Rational(3)) != check(i, j))
        throw std::logic_error("einstein_contact_extension: Ricci entry is not quadratic in t");
    }

  // Ric = lambda g  <=>  g_ab Ric_ij - g_ij Ric_ab = 0 for a fixed g_ab != 0.
  const std::size_t a = m - 1;
  Polynomial common;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Polynomial e = g.matrix()(a, a) * ric[i * m + j] - g.matrix()(i, j) * ric[a * m + a];
      common = gcd(common, e);
    }

  EinsteinContactResult res(algebra_at(1), g);
  res.scale_polynomial = common;
  std::optional<ScaleRoot> root;
  if (common.is_zero()) {
    root = ScaleRoot{Rational(1), true};
  } else if (common.degree() == 0) {
    res.reason = "no scale t makes the metric Einstein (conditions share no root)";
  } else {
    root = pick_root(common);
    if (!root) res.reason = "Einstein conditions have no nonzero real root";
  }

  if (root) {
    res.algebra = algebra_at(root->t);
    res.t = root->t;
    const EinsteinFit fit = einstein_fit(res.algebra, g);
    res.residual = fit.residual;
    res.residual_approx = fit.residual.get_d();
    if (root->exact) {
      res.lambda = ric[a * m + a](root->t) / g.matrix()(a, a);
      res.mode = "exact";
      res.einstein_found = sgn(fit.residual) == 0;
    } else {
      res.lambda = fit.lambda;
      res.mode = "tolerance";
      res.einstein_found = res.residual_approx <= tolerance;
    }
    if (!res.einstein_found) res.reason = "residual above tolerance at the computed scale";
  } else {
    const EinsteinFit fit = einstein_fit(res.algebra, g);
    res.residual = fit.residual;
    res.residual_approx = fit.residual.get_d();
  }

  // Contact witness restricting to alpha on H.
  for (long s = 0; s <= static_cast<long>(n / 2) + 1 && !res.witness; ++s) {
    Covector eta = alpha;
    eta.push_back(Rational(s));
    const Rational value = contact_scalar(res.algebra, eta);
    if (sgn(value) != 0) {
      res.witness = std::move(eta);
      res.witness_value = value;
    }
  }
  return res;
}

}  // namespace liegeo
