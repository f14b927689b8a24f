#include "liegeo/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace liegeo {

RowEchelon row_reduce(Matrix m) {
  RowEchelon out;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t r = pivot_row;
    while (r < m.rows() && sgn(m(r, col)) == 0) ++r;
    if (r == m.rows()) continue;
    m.swap_rows(r, pivot_row);
    const Rational inv = 1 / m(pivot_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || sgn(m(i, col)) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (sgn(m(pivot_row, j)) != 0) m(i, j) -= f * m(pivot_row, j);
    }
    out.pivot_columns.push_back(col);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivot_columns.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  const RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) v[e.pivot_columns[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(const Matrix& input) {
  if (!input.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix m = input;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t r = col;
    while (r < n && sgn(m(r, col)) == 0) ++r;
    if (r == n) return 0;
    if (r != col) {
      m.swap_rows(r, col);
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (sgn(m(i, col)) == 0) continue;
      const Rational f = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RowEchelon e = row_reduce(std::move(aug));
  if (e.pivot_columns.size() < n || (n > 0 && e.pivot_columns[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::optional<LinearSolution> solve_linear_system(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size())
    throw std::invalid_argument("solve_linear_system: " + std::to_string(a.rows()) + " equations but rhs of length " +
                                std::to_string(b.size()));
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const RowEchelon e = row_reduce(std::move(aug));
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == a.cols()) return std::nullopt;
  LinearSolution sol;
  sol.particular = zero_vector(a.cols());
  for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) sol.particular[e.pivot_columns[r]] = e.reduced(r, a.cols());
  sol.kernel = kernel_basis(a);
  return sol;
}

std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
  if (vectors.empty()) return {};
  Matrix m(vectors.size(), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient_dim) throw std::invalid_argument("span_basis: vector length mismatch");
    for (std::size_t j = 0; j < ambient_dim; ++j) m(i, j) = vectors[i][j];
  }
  const RowEchelon e = row_reduce(std::move(m));
  std::vector<Vector> basis;
  for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) basis.push_back(e.reduced.row(r));
  return basis;
}

Signature symmetric_signature(const Matrix& input) {
  if (!input.is_symmetric()) throw std::invalid_argument("symmetric_signature: matrix is not symmetric");
  Matrix s = input;
  const std::size_t n = s.rows();
  Signature sig;
  // Symmetric elimination: every step is a congruence s -> E s E^T.
  auto add_multiple = [&](std::size_t target, std::size_t source, const Rational& f) {
    for (std::size_t j = 0; j < n; ++j) s(target, j) += f * s(source, j);
    for (std::size_t i = 0; i < n; ++i) s(i, target) += f * s(i, source);
  };
  auto swap_both = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    s.swap_rows(a, b);
    for (std::size_t i = 0; i < n; ++i) std::swap(s(i, a), s(i, b));
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(s(p, p)) == 0) ++p;
    if (p == n) {
      // No usable diagonal entry; fold an off-diagonal one onto the diagonal.
      std::size_t oi = n, oj = n;
      for (std::size_t i = k; i < n && oi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (sgn(s(i, j)) != 0) {
            oi = i;
            oj = j;
            break;
          }
      if (oi == n) {
        sig.zero += n - k;
        return sig;
      }
      add_multiple(oi, oj, Rational(1));
      p = oi;
    }
    swap_both(k, p);
    const Rational pivot = s(k, k);
    for (std::size_t i = k + 1; i < n; ++i)
      if (sgn(s(i, k)) != 0) add_multiple(i, k, -s(i, k) / pivot);
    if (sgn(pivot) > 0)
      ++sig.positive;
    else
      ++sig.negative;
  }
  return sig;
}

}  // namespace liegeo
