#pragma once

// Structural invariants of a Lie algebra: series, Killing form, center,
// radical, derivations.

#include "liegeo/lie_algebra.hpp"

#include <vector>

namespace liegeo {

/// span{[a, b] : a in A, b in B}
Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b);

Subspace derived_ideal(const LieAlgebra& L);
/// L, [L,L], [[L,L],[L,L]], ... up to and including the first repeated term.
std::vector<Subspace> derived_series(const LieAlgebra& L);
/// L, [L,L], [L,[L,L]], ... up to and including the first repeated term.
std::vector<Subspace> lower_central_series(const LieAlgebra& L);

bool is_abelian(const LieAlgebra& L);
bool is_solvable(const LieAlgebra& L);
bool is_nilpotent(const LieAlgebra& L);
/// Cartan criterion: the Killing form is nondegenerate.
bool is_semisimple(const LieAlgebra& L);
bool is_unimodular(const LieAlgebra& L);

bool is_subalgebra(const LieAlgebra& L, const Subspace& s);
bool is_ideal(const LieAlgebra& L, const Subspace& s);
/// The bracket restricted to s is identically zero.
bool is_abelian_subspace(const LieAlgebra& L, const Subspace& s);
/// Solvability of the subalgebra s (derived series computed inside L).
bool is_solvable_subalgebra(const LieAlgebra& L, const Subspace& s);

/// B(x, y) = tr(ad x ad y)
Matrix killing_form(const LieAlgebra& L);

Subspace center(const LieAlgebra& L);
/// {x : [x, y] = 0 for all y in J}
Subspace centralizer(const LieAlgebra& L, const Subspace& j);

/// Maximal solvable ideal, computed as the Killing-orthogonal of [L, L].
/// Throws std::logic_error if the result is not a solvable ideal.
Subspace radical(const LieAlgebra& L);

/// Matrix of ad(x) restricted to an ad(x)-invariant subspace, in the
/// subspace's basis. Throws std::invalid_argument if s is not invariant.
Matrix restricted_ad(const LieAlgebra& L, const Vector& x, const Subspace& s);

bool is_derivation(const LieAlgebra& L, const Matrix& d);
/// Derivation with g(Dx, y) = g(x, Dy).
bool is_symmetric_derivation(const LieAlgebra& L, const Matrix& d, const Matrix& g);

}  // namespace liegeo
