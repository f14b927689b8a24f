#pragma once

// Left-invariant (pseudo-)Riemannian geometry computed from structure
// constants. All quantities are expressed in the input basis.

#include "liegeo/contact.hpp"
#include "liegeo/linalg.hpp"
#include "liegeo/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liegeo {

/// Nondegenerate symmetric inner product on the algebra.
class Metric {
 public:
  /// Throws std::invalid_argument when g is not symmetric or is degenerate.
  explicit Metric(Matrix g);
  static Metric identity(std::size_t n) { return Metric(Matrix::identity(n)); }

  std::size_t dim() const { return g_.rows(); }
  const Matrix& matrix() const { return g_; }
  const Matrix& inverse() const { return inv_; }
  /// Positive definite.
  bool riemannian() const { return riemannian_; }
  Rational operator()(const Vector& x, const Vector& y) const { return dot(x, g_ * y); }

 private:
  Matrix g_;
  Matrix inv_;
  bool riemannian_ = false;
};

/// Levi-Civita connection: covariant(i) is the matrix of nabla_{e_i}, so
/// column j holds the coefficients of nabla_{e_i} e_j.
class Connection {
 public:
  explicit Connection(std::vector<Matrix> ops) : ops_(std::move(ops)) {}
  std::size_t dim() const { return ops_.size(); }
  const Matrix& covariant(std::size_t i) const { return ops_[i]; }
  /// Matrix of nabla_x.
  Matrix covariant(const Vector& x) const;
  Vector apply(const Vector& x, const Vector& y) const { return covariant(x) * y; }
  const Rational& gamma(std::size_t i, std::size_t j, std::size_t k) const { return ops_[i](k, j); }

 private:
  std::vector<Matrix> ops_;
};

/// Koszul formula for left-invariant fields:
/// 2 g(nabla_x y, z) = g([x,y],z) - g([y,z],x) + g([z,x],y).
/// The result is re-checked to be torsion-free and metric-compatible.
Connection levi_civita(const LieAlgebra& L, const Metric& g);

bool is_torsion_free(const LieAlgebra& L, const Connection& nabla);
bool is_metric_compatible(const Metric& g, const Connection& nabla);

/// R(x,y) = nabla_x nabla_y - nabla_y nabla_x - nabla_[x,y].
class CurvatureTensor {
 public:
  CurvatureTensor(std::vector<Matrix> ops, Matrix g);
  std::size_t dim() const { return g_.rows(); }
  /// Endomorphism R(e_i, e_j).
  const Matrix& op(std::size_t i, std::size_t j) const { return ops_[i * dim() + j]; }
  /// Endomorphism R(x, y).
  Matrix op(const Vector& x, const Vector& y) const;
  /// g(R(e_i,e_j) e_k, e_l)
  Rational value(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const;
  bool is_zero() const;

 private:
  std::vector<Matrix> ops_;
  Matrix g_;
};

CurvatureTensor curvature_tensor(const LieAlgebra& L, const Metric& g);
CurvatureTensor curvature_tensor(const LieAlgebra& L, const Metric& g, const Connection& nabla);

struct CurvatureSymmetries {
  bool antisymmetric_first_pair = true;
  bool antisymmetric_second_pair = true;
  bool pair_symmetric = true;
  bool first_bianchi = true;
  bool all() const { return antisymmetric_first_pair && antisymmetric_second_pair && pair_symmetric && first_bianchi; }
};

CurvatureSymmetries check_symmetries(const CurvatureTensor& R);

/// K(x,y) = g(R(x,y)y, x) / (|x|^2 |y|^2 - g(x,y)^2). Requires a
/// Riemannian metric (std::domain_error otherwise) and independent x, y
/// (std::invalid_argument otherwise).
Rational sectional(const LieAlgebra& L, const Metric& g, const Vector& x, const Vector& y);
Rational sectional(const CurvatureTensor& R, const Metric& g, const Vector& x, const Vector& y);

/// Ric(y, z) = tr(x -> R(x, y) z)
Matrix ricci(const LieAlgebra& L, const Metric& g);
Matrix ricci(const CurvatureTensor& R);
Rational scalar_curvature(const LieAlgebra& L, const Metric& g);

bool is_flat(const LieAlgebra& L, const Metric& g);

struct FlatDecomposition {
  Subspace a1;  ///< ker(x -> nabla_x), abelian ideal
  Subspace a2;  ///< g-orthogonal complement, abelian subalgebra
};

/// For a flat metric, splits the algebra as A1 + A2 and re-verifies the
/// decomposition (throws std::logic_error if a check fails). nullopt when
/// the metric is not flat.
std::optional<FlatDecomposition> flat_decomposition(const LieAlgebra& L, const Metric& g);

/// Exact test Ric = lambda g; returns lambda.
std::optional<Rational> is_einstein(const LieAlgebra& L, const Metric& g);

struct EinsteinFit {
  Rational lambda;    ///< scal / dim
  Rational residual;  ///< max |Ric - lambda g|
};
EinsteinFit einstein_fit(const LieAlgebra& L, const Metric& g);

/// Einstein, and the g-orthogonal complement of [L, L] is an abelian
/// subalgebra. With a tolerance the Einstein condition is residual <= tol.
bool is_standard_einstein(const LieAlgebra& L, const Metric& g, std::optional<double> tolerance = std::nullopt);

struct HeintzeReport {
  bool solvable = false;
  std::size_t derived_codim = 0;
  bool passes = false;
  std::optional<Vector> witness;
  std::optional<Polynomial> char_poly;  ///< of ad(witness) on [L, L]
  std::size_t samples_tried = 0;
  std::size_t budget = 0;
  std::string reason;
};

/// Solvable, codimension-1 derived ideal, and some A whose ad restricted to
/// [L, L] has all eigenvalues with positive real part (Routh-Hurwitz).
/// Candidates: basis vectors outside [L, L], then `budget` seeded random
/// combinations. A failed search is not a nonexistence certificate.
HeintzeReport heintze_negative_possible(const LieAlgebra& L, std::size_t budget = 256,
                                        std::uint64_t seed = kDefaultSeed);

/// nabla R = 0 for the left-invariant curvature tensor.
bool is_locally_symmetric(const LieAlgebra& L, const Metric& g);

// Contact metric structures, with d eta(X, Y) = 1/2 (d-eta matrix) so that
// a K-contact metric has Ric(xi, xi) = 2n.

/// phi = g^{-1} (1/2 d eta); satisfies d eta(X, Y) = g(X, phi Y).
/// Throws std::domain_error when eta is not contact.
Matrix solve_phi(const LieAlgebra& L, const Metric& g, const Covector& eta);

/// d eta(X,Y) = g(X, phi Y) and g(phi X, phi Y) = g(X,Y) - eta(X) eta(Y).
bool contact_metric_check(const LieAlgebra& L, const Metric& g, const Covector& eta, const Matrix& phi);

/// Contact metric structure whose Reeb vector has ad(xi) skew-adjoint.
bool is_K_contact(const LieAlgebra& L, const Metric& g, const Covector& eta);

/// l with [x, y] = l(y) x - l(x) y for all x, y, if such l exists.
std::optional<Covector> bracket_shape_form(const LieAlgebra& L);

}  // namespace liegeo
