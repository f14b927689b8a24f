#include "liegeo/lie_algebra.hpp"

#include "liegeo/linalg.hpp"

#include <utility>

namespace liegeo {

StructureConstants StructureConstants::from_entries(std::size_t dim, const std::vector<BracketEntry>& entries) {
  StructureConstants c(dim);
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim || e.k >= dim) throw std::out_of_range("bracket index out of range");
    if (e.i >= e.j) throw std::invalid_argument("bracket entries must have i < j");
    c(e.i, e.j, e.k) += e.coeff;
    c(e.j, e.i, e.k) -= e.coeff;
  }
  return c;
}

std::string IdentityViolation::describe() const {
  const auto idx = [](std::size_t x) { return std::to_string(x + 1); };
  if (kind == Kind::Antisymmetry)
    return "antisymmetry fails: c(" + idx(i) + "," + idx(j) + "," + idx(k) + ") != -c(" + idx(j) + "," + idx(i) + "," +
           idx(k) + ")";
  return "Jacobi identity fails on (e" + idx(i) + ", e" + idx(j) + ", e" + idx(k) + ")";
}

std::vector<IdentityViolation> validate(const StructureConstants& c) {
  const std::size_t n = c.dim();
  std::vector<IdentityViolation> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (c(i, j, k) != -c(j, i, k)) out.push_back({IdentityViolation::Kind::Antisymmetry, i, j, k});
  if (!out.empty()) return out;

  // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j], component m.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) {
          Rational s = 0;
          for (std::size_t l = 0; l < n; ++l) {
            if (sgn(c(i, j, l)) != 0) s += c(i, j, l) * c(l, k, m);
            if (sgn(c(j, k, l)) != 0) s += c(j, k, l) * c(l, i, m);
            if (sgn(c(k, i, l)) != 0) s += c(k, i, l) * c(l, j, m);
          }
          if (sgn(s) != 0) {
            out.push_back({IdentityViolation::Kind::Jacobi, i, j, k});
            break;
          }
        }
  return out;
}

namespace {
std::string summarize(const std::vector<IdentityViolation>& v) {
  std::string msg = "invalid Lie algebra";
  for (std::size_t i = 0; i < v.size() && i < 5; ++i) msg += (i ? "; " : ": ") + v[i].describe();
  if (v.size() > 5) msg += "; ... (" + std::to_string(v.size()) + " violations)";
  return msg;
}
}  // namespace

InvalidAlgebra::InvalidAlgebra(std::vector<IdentityViolation> violations)
    : std::invalid_argument(summarize(violations)), violations_(std::move(violations)) {}

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_names, StructureConstants c)
    : name_(std::move(name)), basis_(std::move(basis_names)), c_(std::move(c)) {
  if (basis_.size() != c_.dim()) throw std::invalid_argument("basis name count does not match dimension");
  if (auto v = validate(c_); !v.empty()) throw InvalidAlgebra(std::move(v));
}

LieAlgebra LieAlgebra::from_brackets(std::string name, std::vector<std::string> basis_names,
                                     const std::vector<BracketEntry>& entries) {
  const std::size_t dim = basis_names.size();
  return LieAlgebra(std::move(name), std::move(basis_names), StructureConstants::from_entries(dim, entries));
}

LieAlgebra LieAlgebra::abelian(std::size_t dim, std::string name) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= dim; ++i) names.push_back("e" + std::to_string(i));
  if (name.empty()) name = "R" + std::to_string(dim);
  return LieAlgebra(std::move(name), std::move(names), StructureConstants(dim));
}

std::vector<BracketEntry> LieAlgebra::entries() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      for (std::size_t k = 0; k < dim(); ++k)
        if (sgn(c_(i, j, k)) != 0) out.push_back({i, j, k, c_(i, j, k)});
  return out;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw std::invalid_argument("bracket: vector length mismatch");
  Vector r = zero_vector(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (sgn(y[j]) == 0) continue;
      const Rational w = x[i] * y[j];
      for (std::size_t k = 0; k < dim(); ++k)
        if (sgn(c_(i, j, k)) != 0) r[k] += w * c_(i, j, k);
    }
  }
  return r;
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vector r(dim());
  for (std::size_t k = 0; k < dim(); ++k) r[k] = c_(i, j, k);
  return r;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  if (x.size() != dim()) throw std::invalid_argument("ad: vector length mismatch");
  Matrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      for (std::size_t k = 0; k < dim(); ++k)
        if (sgn(c_(i, j, k)) != 0) m(k, j) += x[i] * c_(i, j, k);
  }
  return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const { return ad(unit_vector(dim(), i)); }

LieAlgebra LieAlgebra::renamed(std::string name) const {
  LieAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

Subspace::Subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning)
    : ambient_(ambient_dim), basis_(span_basis(spanning, ambient_dim)) {}

Subspace Subspace::whole(std::size_t n) {
  std::vector<Vector> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(unit_vector(n, i));
  return Subspace(n, b);
}

bool Subspace::contains(const Vector& v) const {
  std::vector<Vector> all = basis_;
  all.push_back(v);
  return span_basis(all, ambient_).size() == basis_.size();
}

bool Subspace::contains(const Subspace& other) const { return sum(other).dim() == dim(); }

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<Vector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return Subspace(ambient_, all);
}

Subspace Subspace::intersection(const Subspace& other) const {
  // Solve sum a_i u_i = sum b_j w_j.
  if (is_zero() || other.is_zero()) return zero(ambient_);
  Matrix m(ambient_, dim() + other.dim());
  for (std::size_t r = 0; r < ambient_; ++r) {
    for (std::size_t i = 0; i < dim(); ++i) m(r, i) = basis_[i][r];
    for (std::size_t j = 0; j < other.dim(); ++j) m(r, dim() + j) = -other.basis_[j][r];
  }
  std::vector<Vector> vecs;
  for (const auto& k : kernel_basis(m)) {
    Vector v = zero_vector(ambient_);
    for (std::size_t i = 0; i < dim(); ++i) v = v + k[i] * basis_[i];
    vecs.push_back(std::move(v));
  }
  return Subspace(ambient_, vecs);
}

Subspace Subspace::orthogonal(const Matrix& form) const {
  if (is_zero()) return whole(ambient_);
  Matrix m(dim(), ambient_);
  for (std::size_t r = 0; r < dim(); ++r) {
    const Vector row = form * basis_[r];  // form(x, s) = x^T form s
    for (std::size_t c = 0; c < ambient_; ++c) m(r, c) = row[c];
  }
  return Subspace(ambient_, kernel_basis(m));
}

}  // namespace liegeo
