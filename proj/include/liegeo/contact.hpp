#pragma once

// Left-invariant contact and exact symplectic forms on a Lie algebra.
//
// A covector eta is a vector of coefficients on the dual basis e_i^*.
// Its differential is the skew matrix d(i, j) = -eta([e_i, e_j]).

#include "liegeo/grid.hpp"
#include "liegeo/lie_algebra.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace liegeo {

using Covector = Vector;
/// Skew matrix, entry (i, j) is the value on (e_i, e_j).
using TwoForm = Matrix;

TwoForm differential(const LieAlgebra& L, const Covector& eta);

/// Pfaffian by recursive expansion along the first row. Odd size gives 0,
/// the empty matrix gives 1. Throws std::invalid_argument if not skew.
Rational pfaffian(const Matrix& skew);

/// Coefficient of e_1^* ^ ... ^ e_{2n+1}^* in (d eta)^n ^ eta, in input
/// basis order. Nonzero exactly when eta is a contact form.
/// Throws std::invalid_argument on even dimension.
Rational contact_scalar(const LieAlgebra& L, const Covector& eta);

/// Pfaffian of d(alpha) on an even-dimensional algebra.
Rational symplectic_scalar(const LieAlgebra& L, const Covector& alpha);

bool is_contact(const LieAlgebra& L, const Covector& eta);

/// The unique xi with d(eta)(xi, .) = 0 and eta(xi) = 1.
/// Throws std::domain_error when eta is not contact.
Vector reeb(const LieAlgebra& L, const Covector& eta);

Subspace two_form_radical(const TwoForm& omega);

/// True iff ker(eta) is not closed under the bracket.
/// Throws std::invalid_argument for eta = 0.
bool kernel_not_subalgebra(const LieAlgebra& L, const Covector& eta);

enum class Verdict { Exists, None };

/// Product-grid certificate: the scalar polynomial has per-variable degree
/// at most `degree_bound`, and vanished on all `evaluations` points of the
/// grid with `points_per_coordinate` = degree_bound + 1 values per coordinate.
struct GridCertificate {
  std::size_t coordinates = 0;
  std::size_t points_per_coordinate = 0;
  std::size_t degree_bound = 0;
  std::uint64_t evaluations = 0;
};

struct DecisionOutcome {
  Verdict verdict = Verdict::None;
  std::optional<Covector> witness;
  std::optional<Rational> witness_value;
  /// "basis_dual", "random" or "grid".
  std::string witness_source;
  std::optional<GridCertificate> certificate;
  /// Set when the verdict follows from the dimension alone.
  std::string note;
};

struct SearchOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t random_attempts = 32;
  unsigned threads = 0;
};

/// Witness search (basis duals, seeded random covectors, grid sweep);
/// NONE only after the full grid {0..n+1}^{2n+1} vanished.
DecisionOutcome decide_contact_exists(const LieAlgebra& L, const SearchOptions& opts = {});

/// Same scheme for Pf(d alpha) on dimension 2m with grid {0..m}^{2m}.
/// Throws std::invalid_argument on odd dimension.
DecisionOutcome decide_exact_symplectic_exists(const LieAlgebra& L, const SearchOptions& opts = {});

}  // namespace liegeo
