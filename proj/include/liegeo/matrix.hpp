#pragma once

#include "liegeo/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace liegeo {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
bool is_zero(std::span<const Rational> v);
std::string to_string(const Vector& v);

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& diag);
  static Matrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t height);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  void swap_rows(std::size_t a, std::size_t b);

  Matrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_skew() const;

  /// Matrix with row i and column i removed.
  Matrix principal_minor_without(std::size_t i) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rational& s, Matrix m) { return m *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::span<const Rational> data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// a b^T
Matrix outer(const Vector& a, const Vector& b);
/// Largest absolute entry, 0 for an empty matrix.
Rational max_abs(const Matrix& m);
Matrix commutator(const Matrix& a, const Matrix& b);

}  // namespace liegeo
