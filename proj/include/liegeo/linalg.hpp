#pragma once

#include "liegeo/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace liegeo {

/// Reduced row echelon form. Pivots are chosen as the first nonzero entry
/// in column order, so the output is deterministic.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

RowEchelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}; one vector per free column, with a 1 in that
/// column.
std::vector<Vector> kernel_basis(const Matrix& m);

Rational determinant(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

struct LinearSolution {
  Vector particular;
  std::vector<Vector> kernel;
};

/// Exact solve of a x = b. Returns std::nullopt when the system is
/// inconsistent. Throws std::invalid_argument on a shape mismatch.
std::optional<LinearSolution> solve_linear_system(const Matrix& a, const Vector& b);

/// Reduced basis of span(vectors) (the nonzero RREF rows).
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t ambient_dim);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of a symmetric matrix via congruence diagonalization.
/// Throws std::invalid_argument for non-symmetric input.
Signature symmetric_signature(const Matrix& s);

}  // namespace liegeo
