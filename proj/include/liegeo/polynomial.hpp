#pragma once

#include "liegeo/matrix.hpp"

#include <string>
#include <vector>

namespace liegeo {

/// Univariate polynomial over Q, coefficients in ascending degree.
/// Trailing zero coefficients are stripped, so the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Vector ascending);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  /// prod (t - r) over the given roots.
  static Polynomial from_roots(const Vector& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Vector& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const Rational& leading() const;

  Rational operator()(const Rational& t) const;
  /// Horner evaluation at a square matrix.
  Matrix operator()(const Matrix& a) const;

  /// P(-t)
  Polynomial reflected() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  Vector coeffs_;
};

/// Quotient and remainder of a / b. Throws std::domain_error when b is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// det(t I - A) by Faddeev-LeVerrier, exact over Q.
Polynomial characteristic_polynomial(const Matrix& a);

/// Routh-Hurwitz: true iff every root has strictly negative real part.
/// A zero or purely imaginary root gives false.
bool is_hurwitz_stable(const Polynomial& p);

/// True iff every complex root of p has strictly positive real part,
/// decided as Hurwitz stability of p(-t). Throws std::invalid_argument for
/// the zero polynomial; a nonzero constant has no roots and gives true.
bool all_roots_positive_real_part(const Polynomial& p);

}  // namespace liegeo
