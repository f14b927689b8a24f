#include "liegeo/contact.hpp"

#include "liegeo/linalg.hpp"

#include <functional>
#include <stdexcept>

namespace liegeo {

TwoForm differential(const LieAlgebra& L, const Covector& eta) {
  const std::size_t n = L.dim();
  if (eta.size() != n) throw std::invalid_argument("differential: covector length mismatch");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(eta[k]) != 0 && sgn(L.c(i, j, k)) != 0) s += eta[k] * L.c(i, j, k);
      m(i, j) = -s;
      m(j, i) = s;
    }
  return m;
}

namespace {

// Pfaffian of the principal submatrix on `idx` (even length).
Rational pfaffian_rec(const Matrix& a, std::vector<std::size_t>& idx) {
  if (idx.empty()) return 1;
  const std::size_t first = idx[0];
  Rational total = 0;
  for (std::size_t p = 1; p < idx.size(); ++p) {
    const Rational& entry = a(first, idx[p]);
    if (sgn(entry) == 0) continue;
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t q = 1; q < idx.size(); ++q)
      if (q != p) rest.push_back(idx[q]);
    const Rational sub = pfaffian_rec(a, rest);
    if (sgn(sub) == 0) continue;
    // Sign (-1)^(p+1) for 0-based position p of the partner.
    if (p % 2 == 1)
      total += entry * sub;
    else
      total -= entry * sub;
  }
  return total;
}

Rational factorial(std::size_t n) {
  Rational f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<long>(k);
  return f;
}

}  // namespace

Rational pfaffian(const Matrix& skew) {
  if (!skew.is_skew()) throw std::invalid_argument("pfaffian: matrix is not skew-symmetric");
  if (skew.rows() % 2 == 1) return 0;
  std::vector<std::size_t> idx(skew.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return pfaffian_rec(skew, idx);
}

Rational contact_scalar(const LieAlgebra& L, const Covector& eta) {
  const std::size_t dim = L.dim();
  if (dim % 2 == 0) throw std::invalid_argument("contact_scalar: dimension " + std::to_string(dim) + " is even");
  const TwoForm d = differential(L, eta);
  const std::size_t n = dim / 2;
  Rational s = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    if (sgn(eta[i]) == 0) continue;
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < dim; ++j)
      if (j != i) idx.push_back(j);
    const Rational pf = pfaffian_rec(d, idx);
    // (-1)^(i+1) for 1-based i, i.e. + for even 0-based i.
    if (i % 2 == 0)
      s += eta[i] * pf;
    else
      s -= eta[i] * pf;
  }
  return factorial(n) * s;
}

Rational symplectic_scalar(const LieAlgebra& L, const Covector& alpha) {
  if (L.dim() % 2 == 1)
    throw std::invalid_argument("symplectic_scalar: dimension " + std::to_string(L.dim()) + " is odd");
  return pfaffian(differential(L, alpha));
}

bool is_contact(const LieAlgebra& L, const Covector& eta) { return sgn(contact_scalar(L, eta)) != 0; }

Vector reeb(const LieAlgebra& L, const Covector& eta) {
  if (!is_contact(L, eta)) throw std::domain_error("reeb: covector is not a contact form");
  const std::size_t n = L.dim();
  const TwoForm d = differential(L, eta);
  Matrix a(n + 1, n);
  Vector b = zero_vector(n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = d(i, j);
  for (std::size_t j = 0; j < n; ++j) a(n, j) = eta[j];
  b[n] = 1;
  auto sol = solve_linear_system(a, b);
  if (!sol || !sol->kernel.empty()) throw std::logic_error("reeb: system not uniquely solvable for a contact form");
  return sol->particular;
}

Subspace two_form_radical(const TwoForm& omega) { return Subspace(omega.rows(), kernel_basis(omega)); }

bool kernel_not_subalgebra(const LieAlgebra& L, const Covector& eta) {
  if (is_zero(eta)) throw std::invalid_argument("kernel_not_subalgebra: eta is zero");
  Matrix row(1, L.dim());
  for (std::size_t j = 0; j < L.dim(); ++j) row(0, j) = eta[j];
  const auto ker = kernel_basis(row);
  for (std::size_t a = 0; a < ker.size(); ++a)
    for (std::size_t b = a + 1; b < ker.size(); ++b)
      if (sgn(dot(eta, L.bracket(ker[a], ker[b]))) != 0) return true;
  return false;
}

namespace {

DecisionOutcome decide(const LieAlgebra& L, const SearchOptions& opts, std::size_t degree,
                       const std::function<Rational(const Covector&)>& scalar) {
  const std::size_t n = L.dim();
  DecisionOutcome out;
  auto accept = [&](Covector w, Rational value, const char* source) {
    out.verdict = Verdict::Exists;
    out.witness = std::move(w);
    out.witness_value = std::move(value);
    out.witness_source = source;
    return out;
  };

  for (std::size_t i = 0; i < n; ++i) {
    Covector e = unit_vector(n, i);
    if (Rational v = scalar(e); sgn(v) != 0) return accept(std::move(e), std::move(v), "basis_dual");
  }
  RationalSampler sampler(opts.seed);
  for (std::size_t a = 0; a < opts.random_attempts; ++a) {
    Covector r = sampler.vector(n);
    if (Rational v = scalar(r); sgn(v) != 0) return accept(std::move(r), std::move(v), "random");
  }

  ProductGrid grid{std::vector<std::size_t>(n, degree + 1)};
  auto hit = grid_find_first(
      grid, [&](const Vector& p) { return sgn(scalar(p)) != 0; }, opts.threads);
  if (hit) {
    Rational v = scalar(hit->point);
    return accept(std::move(hit->point), std::move(v), "grid");
  }
  out.verdict = Verdict::None;
  out.certificate = GridCertificate{n, degree + 1, degree, grid.size()};
  return out;
}

}  // namespace

DecisionOutcome decide_contact_exists(const LieAlgebra& L, const SearchOptions& opts) {
  if (L.dim() % 2 == 0) {
    DecisionOutcome out;
    out.note = "even dimension";
    return out;
  }
  const std::size_t n = L.dim() / 2;
  return decide(L, opts, n + 1, [&](const Covector& eta) { return contact_scalar(L, eta); });
}

DecisionOutcome decide_exact_symplectic_exists(const LieAlgebra& L, const SearchOptions& opts) {
  if (L.dim() % 2 == 1)
    throw std::invalid_argument("exact symplectic forms need even dimension, got " + std::to_string(L.dim()));
  const std::size_t m = L.dim() / 2;
  return decide(L, opts, m, [&](const Covector& a) { return symplectic_scalar(L, a); });
}

}  // namespace liegeo
