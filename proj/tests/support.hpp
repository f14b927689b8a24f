#pragma once

// Fixtures and brute-force oracles shared by the unit tests. The oracles
// deliberately avoid the library's elimination and expansion code.

#include "liegeo/construct.hpp"
#include "liegeo/io.hpp"

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <string>
#include <vector>

namespace liegeo::testing {

inline std::filesystem::path catalog_dir() { return LIEGEO_CATALOG_DIR; }

struct Fixture {
  std::string file;
  LieAlgebra algebra;
};

inline std::vector<Fixture> catalog_fixtures() {
  std::vector<Fixture> out;
  for (const auto& entry : std::filesystem::directory_iterator(catalog_dir()))
    if (entry.path().extension() == ".lie") out.push_back({entry.path().stem().string(), load_algebra(entry.path())});
  std::sort(out.begin(), out.end(), [](const Fixture& a, const Fixture& b) { return a.file < b.file; });
  return out;
}

inline int permutation_sign(const std::vector<std::size_t>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

inline Rational factorial(std::size_t n) {
  Rational f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<long>(k);
  return f;
}

/// Leibniz formula.
inline Rational leibniz_det(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    Rational term = permutation_sign(p);
    for (std::size_t i = 0; i < n && sgn(term) != 0; ++i) term *= a(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// Pf(A) = 1/(2^n n!) sum_sigma sgn(sigma) prod a(sigma(2m-1), sigma(2m)).
inline Rational permutation_pfaffian(const Matrix& a) {
  const std::size_t size = a.rows();
  if (size % 2 == 1) return 0;
  std::vector<std::size_t> p(size);
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    Rational term = permutation_sign(p);
    for (std::size_t m = 0; m + 1 < size && sgn(term) != 0; m += 2) term *= a(p[m], p[m + 1]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  Rational norm = factorial(size / 2);
  for (std::size_t m = 0; m < size / 2; ++m) norm *= 2;
  return total / norm;
}

/// Coefficient of e1^ ... ^e_{2n+1} in (omega)^n ^ eta for the 2-form
/// omega = 1/2 sum w_ij e_i^ e_j, written out as a sum over permutations.
inline Rational permutation_wedge(const Matrix& w, const Vector& eta) {
  const std::size_t size = w.rows();
  std::vector<std::size_t> p(size);
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    Rational term = permutation_sign(p) * eta[p[size - 1]];
    for (std::size_t m = 0; m + 1 < size && sgn(term) != 0; m += 2) term *= w(p[m], p[m + 1]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  for (std::size_t m = 0; m < size / 2; ++m) total /= 2;
  return total;
}

/// Rank by fraction-free elimination over the integers after clearing
/// denominators row by row.
inline std::size_t bareiss_rank(const Matrix& m) {
  std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).get_den());
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

/// Lagrange interpolation.
inline Polynomial interpolate(const Vector& xs, const Vector& ys) {
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

}  // namespace liegeo::testing
