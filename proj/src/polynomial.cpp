#include "liegeo/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace liegeo {

Polynomial::Polynomial(Vector ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  Vector v = zero_vector(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(const Vector& roots) {
  Polynomial p({Rational(1)});
  for (const auto& r : roots) p = p * Polynomial({Rational(-r), Rational(1)});
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Matrix Polynomial::operator()(const Matrix& a) const {
  if (!a.is_square()) throw std::invalid_argument("polynomial evaluated at a non-square matrix");
  Matrix acc(a.rows(), a.cols());
  const Matrix id = Matrix::identity(a.rows());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * a + (*it) * id;
  return acc;
}

Polynomial Polynomial::reflected() const {
  Vector v = coeffs_;
  for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return (1 / leading()) * (*this);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Vector v = zero_vector(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Rational(-1) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Vector v = zero_vector(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  Vector v = p.coeffs_;
  for (auto& c : v) c *= s;
  return Polynomial(std::move(v));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    const Rational mag = liegeo::abs(c);
    if (out.empty())
      out += sgn(c) < 0 ? "-" : "";
    else
      out += sgn(c) < 0 ? " - " : " + ";
    const bool show_coeff = k == 0 || mag != 1;
    if (show_coeff) out += liegeo::to_string(mag);
    if (k > 0) {
      if (show_coeff) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Polynomial rem = a;
  Polynomial quot;
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
    const Polynomial term = Polynomial::monomial(rem.leading() / b.leading(), shift);
    quot = quot + term;
    rem = rem - term * b;
  }
  return {quot, rem};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial characteristic_polynomial(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k.
  Vector c = zero_vector(n + 1);
  c[n] = 1;
  Matrix m(n, n);
  const Matrix id = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    c[n - k] = -(a * m).trace() / Rational(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

bool is_hurwitz_stable(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("Hurwitz test of the zero polynomial");
  const auto n = static_cast<std::size_t>(p.degree());
  // Descending coefficients, normalized to a positive leading term.
  Vector a(n + 1);
  for (std::size_t i = 0; i <= n; ++i) a[i] = p.coefficient(n - i);
  if (sgn(a[0]) < 0)
    for (auto& x : a) x = -x;
  for (const auto& x : a)
    if (sgn(x) <= 0) return false;
  if (n == 0) return true;

  const std::size_t width = n / 2 + 1;
  std::vector<Vector> rows(n + 1, zero_vector(width + 1));
  for (std::size_t i = 0; i <= n; ++i) rows[i % 2][i / 2] = a[i];
  for (std::size_t r = 2; r <= n; ++r) {
    const Rational& lead = rows[r - 1][0];
    for (std::size_t j = 0; j < width; ++j)
      rows[r][j] = (lead * rows[r - 2][j + 1] - rows[r - 2][0] * rows[r - 1][j + 1]) / lead;
    if (sgn(rows[r][0]) <= 0) return false;
  }
  return sgn(rows[1][0]) > 0;
}

bool all_roots_positive_real_part(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("root location of the zero polynomial");
  return is_hurwitz_stable(p.reflected());
}

}  // namespace liegeo
