#pragma once

// Named algebras and the constructions that combine them.

#include "liegeo/curvature.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liegeo {

/// Skew form satisfying w([x,y],z) + w([y,z],x) + w([z,x],y) = 0.
class TwoCocycle {
 public:
  /// Throws std::invalid_argument when w is not skew or breaks the
  /// cocycle identity on some basis triple.
  TwoCocycle(const LieAlgebra& L, Matrix w);
  const Matrix& matrix() const { return w_; }

 private:
  Matrix w_;
};

/// Basis (e1..e2n, e0) with [e_i, e_{n+i}] = e0. Throws for n = 0.
LieAlgebra heisenberg(std::size_t n);

/// L + R xi with [x,y] = [x,y]_L + w(x,y) xi. The new element is last.
LieAlgebra central_extension(const LieAlgebra& L, const TwoCocycle& w, std::string central_name = "xi");

/// H + R e with [e, x] = D x. The new generator is last.
/// Throws std::invalid_argument when D is not a derivation.
LieAlgebra semidirect_by_derivation(const LieAlgebra& H, const Matrix& d, std::string generator_name = "e");

/// Block sum; clashing basis names of the second summand get a "'" suffix.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// [e3,e1] = e2, [e3,e2] = -e1
LieAlgebra e2();
/// [e3,e1] = 2e1, [e3,e2] = -2e2, [e1,e2] = e3
LieAlgebra sl2();
/// [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2
LieAlgebra so3();
/// Basis (h, p, q, z): [h,p] = q, [h,q] = -p, [p,q] = z.
LieAlgebra oscillator();
/// [e1,e2] = e2
LieAlgebra aff1();
/// Basis (e0, e1..en) with [e0, x] = x.
LieAlgebra hyperbolic(std::size_t n);
/// e(2) + R^2, flat for the identity metric.
LieAlgebra flat5();

/// Basis (e1..e2n, e0, e_{2n+1}, e_{2n+2}). Heisenberg brackets plus
/// [e_{2n+2}, e_i] = p_i e_i, [e_{2n+2}, e_{n+i}] = (p - p_i) e_{n+i},
/// [e_{2n+2}, e0] = p e0, [e_{2n+2}, e_{2n+1}] = q e_{2n+1}.
LieAlgebra gn_family(std::size_t n, const Rational& p, const std::vector<Rational>& p_list, const Rational& q);
/// n = 1, p = 2, p1 = 1, q = 3
LieAlgebra gn_default();

/// R^4 with the spin representation of so(3) = span(e1,e2,e3). The signs
/// of the 1/2 coefficients are the first assignment, in the order of
/// r4_so3_sign_mask, that satisfies Jacobi and keeps e4*..e7* contact.
LieAlgebra r4_so3();
/// Bit b set means base entry b enters with a minus sign.
unsigned r4_so3_sign_mask();
LieAlgebra r4_so3_with_signs(unsigned mask);

/// A violated precondition of einstein_contact_extension.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(std::string name, const std::string& detail)
      : std::invalid_argument(name + ": " + detail), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

struct EinsteinContactResult {
  EinsteinContactResult(LieAlgebra a, Metric g) : algebra(std::move(a)), metric(std::move(g)) {}

  LieAlgebra algebra;
  Metric metric;  ///< at the chosen t (t = 1 when none was found)
  bool einstein_found = false;
  /// "exact" when t is rational, "tolerance" for a rational approximation
  /// of an irrational root, empty when no scale exists.
  std::string mode;
  std::optional<Rational> t;
  std::optional<Rational> lambda;
  Rational residual;        ///< max |Ric - lambda g| at t
  double residual_approx = 0;
  std::optional<Covector> witness;  ///< contact form restricting to alpha on H
  std::optional<Rational> witness_value;
  std::string reason;
  /// Entries of Ric - lambda g as polynomials in t share this gcd.
  Polynomial scale_polynomial;
};

/// G = H + R e with [e, x] = t D x, metric g_H + e*^2, scale t solved from
/// the Einstein condition. Throws PreconditionError naming the failed
/// hypothesis. `tolerance` is used both for checking g_H and for the
/// bisection target when the root is irrational.
EinsteinContactResult einstein_contact_extension(const LieAlgebra& H, const Covector& alpha, const Metric& g_h,
                                                 const Matrix& d, double tolerance = 1e-12);

/// Solvable part of complex hyperbolic plane: basis (x, y, z, a) with
/// [x,y] = z, [a,x] = x/2, [a,y] = y/2, [a,z] = z. Einstein for the identity metric.
LieAlgebra ch2_solvable();

}  // namespace liegeo
