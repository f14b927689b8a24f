#include "liegeo/orthogonal.hpp"

#include "liegeo/structure.hpp"

#include <stdexcept>

namespace liegeo {

bool is_ad_invariant(const LieAlgebra& L, const SymmetricBilinearForm& b) {
  // ad(x)^T b + b ad(x) = 0 for every basis x.
  for (std::size_t i = 0; i < L.dim(); ++i) {
    const Matrix ad = L.ad_basis(i);
    if (!(ad.transpose() * b + b * ad).is_zero()) return false;
  }
  return true;
}

std::vector<SymmetricBilinearForm> ad_invariant_forms(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<std::size_t> index(n * n);
  std::size_t unknowns = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) index[i * n + j] = index[j * n + i] = unknowns++;

  // b([e_a,e_b],e_c) + b(e_b,[e_a,e_c]) = 0 for a and b <= c (symmetric in b,c).
  std::vector<Vector> rows;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = b; c < n; ++c) {
        Vector row = zero_vector(unknowns);
        for (std::size_t k = 0; k < n; ++k) {
          if (sgn(L.c(a, b, k)) != 0) row[index[k * n + c]] += L.c(a, b, k);
          if (sgn(L.c(a, c, k)) != 0) row[index[b * n + k]] += L.c(a, c, k);
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }

  std::vector<Vector> kernel;
  if (rows.empty()) {
    for (std::size_t u = 0; u < unknowns; ++u) kernel.push_back(unit_vector(unknowns, u));
  } else {
    kernel = kernel_basis(Matrix::from_rows(rows));
  }

  std::vector<SymmetricBilinearForm> forms;
  for (const auto& k : kernel) {
    Matrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) = k[index[i * n + j]];
    forms.push_back(std::move(b));
  }
  return forms;
}

namespace {

Matrix combine(const std::vector<SymmetricBilinearForm>& basis, const Vector& t, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (sgn(t[i]) != 0) m += t[i] * basis[i];
  return m;
}

}  // namespace

BiinvariantReport find_biinvariant_metric(const LieAlgebra& L, const SearchOptions& opts) {
  const std::size_t n = L.dim();
  BiinvariantReport rep;
  rep.basis = ad_invariant_forms(L);
  rep.invariant_space_dim = rep.basis.size();
  const std::size_t r = rep.basis.size();

  auto accept = [&](Matrix w) {
    rep.signature = symmetric_signature(w);
    rep.nondegenerate_witness = std::move(w);
    return rep;
  };

  for (const auto& b : rep.basis)
    if (sgn(determinant(b)) != 0) return accept(b);
  RationalSampler sampler(opts.seed);
  for (std::size_t a = 0; a < opts.random_attempts && r > 0; ++a) {
    Matrix m = combine(rep.basis, sampler.vector(r), n);
    if (sgn(determinant(m)) != 0) return accept(std::move(m));
  }

  DegeneracyCertificate cert;
  {
    std::vector<Vector> rows;
    for (const auto& b : rep.basis)
      for (std::size_t i = 0; i < n; ++i) rows.push_back(b.row(i));
    const auto common = rows.empty() ? std::vector<Vector>{} : kernel_basis(Matrix::from_rows(rows));
    if (n > 0 && (rows.empty() || !common.empty())) {
      cert.common_radical_vector = rows.empty() ? unit_vector(n, 0) : common.front();
      rep.certificate = cert;
      return rep;
    }
  }

  // det(sum t_i b_i) has degree <= rank(b_i) in t_i.
  ProductGrid grid;
  std::size_t max_deg = 0;
  for (const auto& b : rep.basis) {
    const std::size_t rk = rank(b);
    grid.points.push_back(rk + 1);
    max_deg = std::max(max_deg, rk);
  }
  auto hit = grid_find_first(
      grid, [&](const Vector& t) { return sgn(determinant(combine(rep.basis, t, n))) != 0; }, opts.threads);
  if (hit) return accept(combine(rep.basis, hit->point, n));
  cert.grid = GridCertificate{r, max_deg + 1, max_deg, grid.size()};
  rep.certificate = cert;
  return rep;
}

bool is_orthogonal(const LieAlgebra& L) { return find_biinvariant_metric(L).found(); }

Covector theta(const SymmetricBilinearForm& b, const Vector& x) { return b.transpose() * x; }

DualDecompositionReport verify_dual_decomposition(const LieAlgebra& L, const SymmetricBilinearForm& b, const Covector& eta) {
  const std::size_t n = L.dim();
  if (!b.is_symmetric() || b.rows() != n) throw std::invalid_argument("verify_dual_decomposition: b is not a symmetric form");
  if (!is_ad_invariant(L, b)) throw std::invalid_argument("verify_dual_decomposition: b is not ad-invariant");
  auto binv = inverse(b);
  if (!binv) throw std::invalid_argument("verify_dual_decomposition: b is degenerate");
  if (n % 2 == 0 || !is_contact(L, eta)) throw std::invalid_argument("verify_dual_decomposition: eta is not a contact form");

  DualDecompositionReport rep;
  rep.xbar = *binv * eta;
  const Matrix ad = L.ad(rep.xbar);
  const Subspace ker(n, kernel_basis(ad));
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(ad.column(j));
  const Subspace im(n, cols);
  rep.kernel_is_line = ker.dim() == 1 && ker.contains(rep.xbar);
  rep.kernel_image_split = ker.dim() + im.dim() == n && ker.intersection(im).is_zero();
  Matrix eta_row(1, n);
  for (std::size_t j = 0; j < n; ++j) eta_row(0, j) = eta[j];
  rep.image_is_kernel_of_eta = im == Subspace(n, kernel_basis(eta_row));
  rep.perfect = derived_ideal(L).is_whole();
  return rep;
}

}  // namespace liegeo
