#pragma once

#include "liegeo/matrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace liegeo {

/// One structure constant: [e_i, e_j] has coefficient `coeff` on e_k.
/// Indices are 0-based with i < j.
struct BracketEntry {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  Rational coeff;
};

/// Dense table c(i, j, k) of a bilinear bracket [e_i, e_j] = sum_k c(i,j,k) e_k.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : dim_(dim), c_(dim * dim * dim, Rational(0)) {}

  /// Antisymmetric completion of entries with i < j. Repeated (i, j, k)
  /// triples are summed; reject duplicates before calling if that matters.
  static StructureConstants from_entries(std::size_t dim, const std::vector<BracketEntry>& entries);

  std::size_t dim() const { return dim_; }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> c_;
};

struct IdentityViolation {
  enum class Kind { Antisymmetry, Jacobi };
  Kind kind;
  std::size_t i, j, k;
  std::string describe() const;
};

/// Antisymmetry on all pairs and Jacobi on all basis triples i < j < k.
std::vector<IdentityViolation> validate(const StructureConstants& c);

class InvalidAlgebra : public std::invalid_argument {
 public:
  explicit InvalidAlgebra(std::vector<IdentityViolation> violations);
  const std::vector<IdentityViolation>& violations() const { return violations_; }

 private:
  std::vector<IdentityViolation> violations_;
};

/// Finite-dimensional real Lie algebra given by rational structure
/// constants. Always valid: the constructor rejects tables that break
/// antisymmetry or Jacobi.
class LieAlgebra {
 public:
  LieAlgebra(std::string name, std::vector<std::string> basis_names, StructureConstants c);

  static LieAlgebra from_brackets(std::string name, std::vector<std::string> basis_names,
                                  const std::vector<BracketEntry>& entries);
  static LieAlgebra abelian(std::size_t dim, std::string name = {});

  std::size_t dim() const { return c_.dim(); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis_names() const { return basis_; }
  const StructureConstants& constants() const { return c_; }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_(i, j, k); }

  /// Canonical list of nonzero constants, i < j, ordered by (i, j, k).
  std::vector<BracketEntry> entries() const;

  Vector bracket(const Vector& x, const Vector& y) const;
  Vector bracket_basis(std::size_t i, std::size_t j) const;
  /// Matrix of y -> [x, y]; column j is [x, e_j].
  Matrix ad(const Vector& x) const;
  Matrix ad_basis(std::size_t i) const;

  LieAlgebra renamed(std::string name) const;

 private:
  std::string name_;
  std::vector<std::string> basis_;
  StructureConstants c_;
};

/// Linear subspace of the algebra, stored as a reduced row echelon basis so
/// equal subspaces have identical bases.
class Subspace {
 public:
  Subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning);
  static Subspace whole(std::size_t n);
  static Subspace zero(std::size_t n) { return Subspace(n, {}); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t codim() const { return ambient_ - basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  bool is_zero() const { return basis_.empty(); }
  bool is_whole() const { return basis_.size() == ambient_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  Subspace intersection(const Subspace& other) const;
  /// Annihilator-style complement {x : form(x, s) = 0 for all s in this}.
  Subspace orthogonal(const Matrix& form) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
};

}  // namespace liegeo
