#include "liegeo/structure.hpp"

#include "liegeo/linalg.hpp"

#include <stdexcept>

namespace liegeo {

Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
  std::vector<Vector> v;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) v.push_back(L.bracket(x, y));
  return Subspace(L.dim(), v);
}

Subspace derived_ideal(const LieAlgebra& L) {
  std::vector<Vector> v;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) v.push_back(L.bracket_basis(i, j));
  return Subspace(L.dim(), v);
}

std::vector<Subspace> derived_series(const LieAlgebra& L) {
  std::vector<Subspace> series{Subspace::whole(L.dim())};
  for (;;) {
    Subspace next = bracket_span(L, series.back(), series.back());
    const bool stable = next == series.back();
    series.push_back(std::move(next));
    if (stable || series.back().is_zero()) return series;
  }
}

std::vector<Subspace> lower_central_series(const LieAlgebra& L) {
  const Subspace whole = Subspace::whole(L.dim());
  std::vector<Subspace> series{whole};
  for (;;) {
    Subspace next = bracket_span(L, whole, series.back());
    const bool stable = next == series.back();
    series.push_back(std::move(next));
    if (stable || series.back().is_zero()) return series;
  }
}

bool is_abelian(const LieAlgebra& L) { return L.entries().empty(); }
bool is_solvable(const LieAlgebra& L) { return derived_series(L).back().is_zero(); }
bool is_nilpotent(const LieAlgebra& L) { return lower_central_series(L).back().is_zero(); }
bool is_semisimple(const LieAlgebra& L) { return sgn(determinant(killing_form(L))) != 0; }

bool is_unimodular(const LieAlgebra& L) {
  for (std::size_t i = 0; i < L.dim(); ++i)
    if (sgn(L.ad_basis(i).trace()) != 0) return false;
  return true;
}

bool is_subalgebra(const LieAlgebra& L, const Subspace& s) { return s.contains(bracket_span(L, s, s)); }

bool is_ideal(const LieAlgebra& L, const Subspace& s) {
  return s.contains(bracket_span(L, Subspace::whole(L.dim()), s));
}

bool is_abelian_subspace(const LieAlgebra& L, const Subspace& s) { return bracket_span(L, s, s).is_zero(); }

bool is_solvable_subalgebra(const LieAlgebra& L, const Subspace& s) {
  Subspace cur = s;
  while (!cur.is_zero()) {
    Subspace next = bracket_span(L, cur, cur);
    if (next == cur) return false;
    cur = std::move(next);
  }
  return true;
}

Matrix killing_form(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(L.ad_basis(i));
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) b(i, j) = b(j, i) = (ads[i] * ads[j]).trace();
  return b;
}

Subspace centralizer(const LieAlgebra& L, const Subspace& j) {
  // Rows: for each basis vector y of J and component k, sum_i x_i [e_i, y]_k = 0.
  const std::size_t n = L.dim();
  if (j.is_zero()) return Subspace::whole(n);
  Matrix m(j.dim() * n, n);
  for (std::size_t b = 0; b < j.dim(); ++b)
    for (std::size_t i = 0; i < n; ++i) {
      const Vector col = L.bracket(unit_vector(n, i), j.basis()[b]);
      for (std::size_t k = 0; k < n; ++k) m(b * n + k, i) = col[k];
    }
  return Subspace(n, kernel_basis(m));
}

Subspace center(const LieAlgebra& L) { return centralizer(L, Subspace::whole(L.dim())); }

Subspace radical(const LieAlgebra& L) {
  Subspace r = derived_ideal(L).orthogonal(killing_form(L));
  if (!is_ideal(L, r) || !is_solvable_subalgebra(L, r))
    throw std::logic_error("radical: Killing-orthogonal of the derived ideal is not a solvable ideal");
  return r;
}

Matrix restricted_ad(const LieAlgebra& L, const Vector& x, const Subspace& s) {
  const std::size_t n = L.dim();
  const std::size_t m = s.dim();
  Matrix basis = Matrix::from_columns(s.basis(), n);
  Matrix out(m, m);
  for (std::size_t c = 0; c < m; ++c) {
    const Vector image = L.bracket(x, s.basis()[c]);
    auto sol = solve_linear_system(basis, image);
    if (!sol) throw std::invalid_argument("restricted_ad: subspace is not ad-invariant");
    for (std::size_t r = 0; r < m; ++r) out(r, c) = sol->particular[r];
  }
  return out;
}

bool is_derivation(const LieAlgebra& L, const Matrix& d) {
  const std::size_t n = L.dim();
  if (d.rows() != n || d.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector lhs = d * L.bracket_basis(i, j);
      const Vector rhs = L.bracket(d.column(i), unit_vector(n, j)) + L.bracket(unit_vector(n, i), d.column(j));
      if (lhs != rhs) return false;
    }
  return true;
}

bool is_symmetric_derivation(const LieAlgebra& L, const Matrix& d, const Matrix& g) {
  if (!is_derivation(L, d)) return false;
  const Matrix gd = g * d;
  return gd == gd.transpose();
}

}  // namespace liegeo
