#include "liegeo/curvature.hpp"

#include "liegeo/structure.hpp"

#include <stdexcept>

namespace liegeo {

Metric::Metric(Matrix g) : g_(std::move(g)) {
  if (!g_.is_symmetric()) throw std::invalid_argument("metric is not symmetric");
  auto inv = liegeo::inverse(g_);
  if (!inv) throw std::invalid_argument("metric is degenerate");
  inv_ = std::move(*inv);
  riemannian_ = symmetric_signature(g_).positive == g_.rows();
}

Matrix Connection::covariant(const Vector& x) const {
  Matrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (sgn(x[i]) != 0) m += x[i] * ops_[i];
  return m;
}

Connection levi_civita(const LieAlgebra& L, const Metric& g) {
  const std::size_t n = L.dim();
  if (g.dim() != n) throw std::invalid_argument("levi_civita: metric dimension mismatch");
  // lowered(i, j, l) = g([e_i, e_j], e_l)
  std::vector<Rational> lowered(n * n * n, Rational(0));
  auto low = [&](std::size_t i, std::size_t j, std::size_t l) -> Rational& { return lowered[(i * n + j) * n + l]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(L.c(i, j, k)) == 0) continue;
        for (std::size_t l = 0; l < n; ++l) low(i, j, l) += L.c(i, j, k) * g.matrix()(k, l);
      }

  const Rational half(1, 2);
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix lowered_ij(n, n);  // (l, j) entry: g(nabla_{e_i} e_j, e_l)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) lowered_ij(l, j) = half * (low(i, j, l) - low(j, l, i) + low(l, i, j));
    ops.push_back(g.inverse() * lowered_ij);
  }
  Connection nabla(std::move(ops));
  if (!is_torsion_free(L, nabla) || !is_metric_compatible(g, nabla))
    throw std::logic_error("levi_civita: Koszul connection failed its own identities");
  return nabla;
}

bool is_torsion_free(const LieAlgebra& L, const Connection& nabla) {
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (nabla.covariant(i).column(j) - nabla.covariant(j).column(i) != L.bracket_basis(i, j)) return false;
  return true;
}

bool is_metric_compatible(const Metric& g, const Connection& nabla) {
  for (std::size_t i = 0; i < nabla.dim(); ++i) {
    const Matrix gn = g.matrix() * nabla.covariant(i);
    if (!(gn + gn.transpose()).is_zero()) return false;
  }
  return true;
}

CurvatureTensor::CurvatureTensor(std::vector<Matrix> ops, Matrix g) : ops_(std::move(ops)), g_(std::move(g)) {}

Matrix CurvatureTensor::op(const Vector& x, const Vector& y) const {
  Matrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (sgn(y[j]) != 0) m += Rational(x[i] * y[j]) * op(i, j);
  }
  return m;
}

Rational CurvatureTensor::value(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
  const Matrix& r = op(i, j);
  Rational s = 0;
  for (std::size_t m = 0; m < dim(); ++m)
    if (sgn(r(m, k)) != 0) s += g_(l, m) * r(m, k);
  return s;
}

bool CurvatureTensor::is_zero() const {
  for (const auto& m : ops_)
    if (!m.is_zero()) return false;
  return true;
}

CurvatureTensor curvature_tensor(const LieAlgebra& L, const Metric& g, const Connection& nabla) {
  const std::size_t n = L.dim();
  std::vector<Matrix> ops(n * n, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix r = commutator(nabla.covariant(i), nabla.covariant(j)) - nabla.covariant(L.bracket_basis(i, j));
      ops[j * n + i] = Rational(-1) * r;
      ops[i * n + j] = std::move(r);
    }
  return CurvatureTensor(std::move(ops), g.matrix());
}

CurvatureTensor curvature_tensor(const LieAlgebra& L, const Metric& g) {
  return curvature_tensor(L, g, levi_civita(L, g));
}

CurvatureSymmetries check_symmetries(const CurvatureTensor& R) {
  CurvatureSymmetries s;
  const std::size_t n = R.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const Rational v = R.value(i, j, k, l);
          if (v != -R.value(j, i, k, l)) s.antisymmetric_first_pair = false;
          if (v != -R.value(i, j, l, k)) s.antisymmetric_second_pair = false;
          if (v != R.value(k, l, i, j)) s.pair_symmetric = false;
          if (sgn(v + R.value(j, k, i, l) + R.value(k, i, j, l)) != 0) s.first_bianchi = false;
        }
  return s;
}

Rational sectional(const CurvatureTensor& R, const Metric& g, const Vector& x, const Vector& y) {
  if (!g.riemannian()) throw std::domain_error("sectional curvature needs a Riemannian metric");
  const Rational area = g(x, x) * g(y, y) - g(x, y) * g(x, y);
  if (sgn(area) == 0) throw std::invalid_argument("sectional curvature of dependent vectors");
  return g(R.op(x, y) * y, x) / area;
}

Rational sectional(const LieAlgebra& L, const Metric& g, const Vector& x, const Vector& y) {
  return sectional(curvature_tensor(L, g), g, x, y);
}

Matrix ricci(const CurvatureTensor& R) {
  const std::size_t n = R.dim();
  Matrix ric(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i) s += R.op(i, j)(i, k);
      ric(j, k) = s;
    }
  return ric;
}

Matrix ricci(const LieAlgebra& L, const Metric& g) { return ricci(curvature_tensor(L, g)); }

Rational scalar_curvature(const LieAlgebra& L, const Metric& g) { return (g.inverse() * ricci(L, g)).trace(); }

bool is_flat(const LieAlgebra& L, const Metric& g) { return curvature_tensor(L, g).is_zero(); }

std::optional<FlatDecomposition> flat_decomposition(const LieAlgebra& L, const Metric& g) {
  const Connection nabla = levi_civita(L, g);
  if (!curvature_tensor(L, g, nabla).is_zero()) return std::nullopt;
  const std::size_t n = L.dim();
  // x -> nabla_x flattened: rows (k, j), column i.
  Matrix rho(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) rho(k * n + j, i) = nabla.covariant(i)(k, j);
  FlatDecomposition dec{Subspace(n, kernel_basis(rho)), Subspace::zero(n)};
  dec.a2 = dec.a1.orthogonal(g.matrix());

  if (!is_ideal(L, dec.a1) || !is_abelian_subspace(L, dec.a1))
    throw std::logic_error("flat_decomposition: ker(nabla) is not an abelian ideal");
  if (!is_abelian_subspace(L, dec.a2)) throw std::logic_error("flat_decomposition: complement is not abelian");
  if (!dec.a1.intersection(dec.a2).is_zero() || dec.a1.dim() + dec.a2.dim() != n)
    throw std::logic_error("flat_decomposition: A1 and A2 do not split the algebra");
  for (const auto& a : dec.a2.basis())
    for (const auto& x : dec.a1.basis())
      for (const auto& y : dec.a1.basis())
        if (sgn(g(L.bracket(a, x), y) + g(x, L.bracket(a, y))) != 0)
          throw std::logic_error("flat_decomposition: A2 does not act skew-adjointly on A1");
  return dec;
}

std::optional<Rational> is_einstein(const LieAlgebra& L, const Metric& g) {
  const Matrix ric = ricci(L, g);
  const std::size_t n = L.dim();
  if (n == 0) return Rational(0);
  std::optional<Rational> lambda;
  for (std::size_t i = 0; i < n && !lambda; ++i)
    for (std::size_t j = 0; j < n && !lambda; ++j)
      if (sgn(g.matrix()(i, j)) != 0) lambda = ric(i, j) / g.matrix()(i, j);
  if ((ric - (*lambda) * g.matrix()).is_zero()) return lambda;
  return std::nullopt;
}

EinsteinFit einstein_fit(const LieAlgebra& L, const Metric& g) {
  const Matrix ric = ricci(L, g);
  EinsteinFit fit;
  fit.lambda = 0;
  if (L.dim() > 0) fit.lambda = (g.inverse() * ric).trace() / Rational(static_cast<long>(L.dim()));
  fit.residual = max_abs(ric - fit.lambda * g.matrix());
  return fit;
}

bool is_standard_einstein(const LieAlgebra& L, const Metric& g, std::optional<double> tolerance) {
  const bool einstein =
      tolerance ? einstein_fit(L, g).residual.get_d() <= *tolerance : is_einstein(L, g).has_value();
  if (!einstein) return false;
  return is_abelian_subspace(L, derived_ideal(L).orthogonal(g.matrix()));
}

HeintzeReport heintze_negative_possible(const LieAlgebra& L, std::size_t budget, std::uint64_t seed) {
  HeintzeReport rep;
  rep.budget = budget;
  rep.solvable = is_solvable(L);
  const Subspace n = derived_ideal(L);
  rep.derived_codim = n.codim();
  if (!rep.solvable) {
    rep.reason = "not solvable";
    return rep;
  }
  if (rep.derived_codim != 1) {
    rep.reason = "derived ideal has codimension " + std::to_string(rep.derived_codim);
    return rep;
  }
  if (L.dim() < 2) {
    rep.reason = "dimension below 2";
    return rep;
  }

  auto try_candidate = [&](const Vector& a) {
    ++rep.samples_tried;
    Polynomial p = characteristic_polynomial(restricted_ad(L, a, n));
    if (!all_roots_positive_real_part(p)) return false;
    rep.passes = true;
    rep.witness = a;
    rep.char_poly = std::move(p);
    return true;
  };

  for (std::size_t i = 0; i < L.dim(); ++i) {
    const Vector e = unit_vector(L.dim(), i);
    if (n.contains(e)) continue;
    if (try_candidate(e)) return rep;
    if (try_candidate(Rational(-1) * e)) return rep;
  }
  RationalSampler sampler(seed);
  for (std::size_t s = 0; s < budget; ++s) {
    const Vector a = sampler.vector(L.dim());
    if (n.contains(a)) continue;
    if (try_candidate(a)) return rep;
  }
  rep.reason = "no witness found (budget " + std::to_string(budget) + ")";
  return rep;
}

bool is_locally_symmetric(const LieAlgebra& L, const Metric& g) {
  const Connection nabla = levi_civita(L, g);
  const CurvatureTensor R = curvature_tensor(L, g, nabla);
  const std::size_t n = L.dim();
  for (std::size_t a = 0; a < n; ++a) {
    const Matrix& na = nabla.covariant(a);
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        const Matrix dr = commutator(na, R.op(b, c)) - R.op(na.column(b), unit_vector(n, c)) -
                          R.op(unit_vector(n, b), na.column(c));
        if (!dr.is_zero()) return false;
      }
  }
  return true;
}

Matrix solve_phi(const LieAlgebra& L, const Metric& g, const Covector& eta) {
  if (!is_contact(L, eta)) throw std::domain_error("solve_phi: covector is not a contact form");
  return g.inverse() * (frac(1, 2) * differential(L, eta));
}

bool contact_metric_check(const LieAlgebra& L, const Metric& g, const Covector& eta, const Matrix& phi) {
  const Matrix d_eta = frac(1, 2) * differential(L, eta);
  if (g.matrix() * phi != d_eta) return false;
  return phi.transpose() * g.matrix() * phi == g.matrix() - outer(eta, eta);
}

bool is_K_contact(const LieAlgebra& L, const Metric& g, const Covector& eta) {
  if (!g.riemannian() || !is_contact(L, eta)) return false;
  if (!contact_metric_check(L, g, eta, solve_phi(L, g, eta))) return false;
  const Matrix ad_xi = L.ad(reeb(L, eta));
  const Matrix gad = g.matrix() * ad_xi;
  return (gad + gad.transpose()).is_zero();
}

std::optional<Covector> bracket_shape_form(const LieAlgebra& L) {
  // c(i,j,k) = l_j delta_ik - l_i delta_jk
  const std::size_t n = L.dim();
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector row = zero_vector(n);
        if (k == i) row[j] += 1;
        if (k == j) row[i] -= 1;
        rows.push_back(std::move(row));
        rhs.push_back(L.c(i, j, k));
      }
  if (rows.empty()) return zero_vector(n);
  auto sol = solve_linear_system(Matrix::from_rows(rows), rhs);
  if (!sol) return std::nullopt;
  return sol->particular;
}

}  // namespace liegeo
