#pragma once

// Ad-invariant symmetric bilinear forms b([x,y],z) + b(y,[x,z]) = 0, i.e.
// algebra-level bi-invariant (pseudo-)Riemannian metrics.

#include "liegeo/contact.hpp"
#include "liegeo/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liegeo {

using SymmetricBilinearForm = Matrix;

bool is_ad_invariant(const LieAlgebra& L, const SymmetricBilinearForm& b);

/// Basis of the space of ad-invariant symmetric forms, from the kernel of
/// the linear system in the dim(dim+1)/2 upper-triangular unknowns.
std::vector<SymmetricBilinearForm> ad_invariant_forms(const LieAlgebra& L);

/// Why every invariant form is degenerate.
struct DegeneracyCertificate {
  /// A nonzero vector in the radical of every basis form, if one exists.
  std::optional<Vector> common_radical_vector;
  /// Otherwise det(sum t_i b_i) vanished on a product grid with
  /// rank(b_i) + 1 points in coordinate i.
  std::optional<GridCertificate> grid;
};

struct BiinvariantReport {
  std::size_t invariant_space_dim = 0;
  std::vector<SymmetricBilinearForm> basis;
  std::optional<SymmetricBilinearForm> nondegenerate_witness;
  std::optional<Signature> signature;
  std::optional<DegeneracyCertificate> certificate;

  bool found() const { return nondegenerate_witness.has_value(); }
};

BiinvariantReport find_biinvariant_metric(const LieAlgebra& L, const SearchOptions& opts = {});

bool is_orthogonal(const LieAlgebra& L);

/// <theta(x), y> = b(x, y)
Covector theta(const SymmetricBilinearForm& b, const Vector& x);

struct DualDecompositionReport {
  Vector xbar;                  ///< theta(xbar) = eta
  bool kernel_is_line = false;  ///< ker ad(xbar) = R xbar
  bool kernel_image_split = false;  ///< ker ad(xbar) + im ad(xbar) = L, direct
  bool image_is_kernel_of_eta = false;  ///< im ad(xbar) = ker eta
  bool perfect = false;         ///< [L, L] = L

  bool all() const { return kernel_is_line && kernel_image_split && image_is_kernel_of_eta && perfect; }
};

/// Decomposition checks for a contact form on an orthogonal algebra.
/// Throws std::invalid_argument when b is degenerate or not ad-invariant,
/// or when eta is not a contact form.
DualDecompositionReport verify_dual_decomposition(const LieAlgebra& L, const SymmetricBilinearForm& b, const Covector& eta);

}  // namespace liegeo
