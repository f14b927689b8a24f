#include <gtest/gtest.h>

#include "liegeo/structure.hpp"
#include "support.hpp"

using namespace liegeo;

namespace {

// [e1,e2] = e3, [e1,e3] = e1 breaks Jacobi on (e1, e2, e3).
std::vector<BracketEntry> broken_entries() { return {{0, 1, 2, 1}, {0, 2, 0, 1}}; }

Subspace span(std::size_t n, std::vector<std::size_t> idx) {
  std::vector<Vector> v;
  for (auto i : idx) v.push_back(unit_vector(n, i));
  return Subspace(n, v);
}

}  // namespace

TEST(Validate, RejectsJacobiFailureWithTriple) {
  const auto c = StructureConstants::from_entries(3, broken_entries());
  const auto v = validate(c);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, IdentityViolation::Kind::Jacobi);
  EXPECT_EQ(v[0].i, 0u);
  EXPECT_EQ(v[0].j, 1u);
  EXPECT_EQ(v[0].k, 2u);
  EXPECT_THROW(LieAlgebra::from_brackets("bad", {"a", "b", "c"}, broken_entries()), InvalidAlgebra);
}

TEST(Validate, RejectsNonAntisymmetricTable) {
  StructureConstants c(2);
  c(0, 1, 0) = 1;  // c(1,0,0) left at zero
  const auto v = validate(c);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].kind, IdentityViolation::Kind::Antisymmetry);
}

TEST(Validate, FromEntriesRejectsBadIndices) {
  EXPECT_THROW(StructureConstants::from_entries(3, {{1, 0, 2, 1}}), std::invalid_argument);
  EXPECT_THROW(StructureConstants::from_entries(3, {{0, 1, 3, 1}}), std::out_of_range);
}

TEST(Validate, EveryCatalogEntryIsValid) {
  for (const auto& f : liegeo::testing::catalog_fixtures()) {
    SCOPED_TRACE(f.file);
    EXPECT_TRUE(validate(f.algebra.constants()).empty());
  }
}

TEST(LieAlgebra, BracketAndAd) {
  const LieAlgebra L = so3();
  EXPECT_EQ(L.bracket_basis(0, 1), unit_vector(3, 2));
  EXPECT_EQ(L.bracket_basis(1, 0), Rational(-1) * unit_vector(3, 2));
  const Vector x{1, 2, 3}, y{0, 1, -1};
  EXPECT_EQ(L.ad(x) * y, L.bracket(x, y));
  EXPECT_EQ(L.bracket(x, y), Rational(-1) * L.bracket(y, x));
}

TEST(Subspace, Operations) {
  const Subspace a = span(4, {0, 1}), b = span(4, {1, 2});
  EXPECT_EQ(a.sum(b).dim(), 3u);
  EXPECT_EQ(a.intersection(b), span(4, {1}));
  EXPECT_TRUE(a.sum(b).contains(b));
  EXPECT_FALSE(a.contains(unit_vector(4, 3)));
  EXPECT_EQ(a.orthogonal(Matrix::identity(4)), span(4, {2, 3}));
  EXPECT_EQ(Subspace(3, {{1, 1, 0}, {2, 2, 0}}).dim(), 1u);
}

TEST(Structure, Heisenberg) {
  const LieAlgebra h5 = heisenberg(2);
  EXPECT_EQ(h5.dim(), 5u);
  EXPECT_TRUE(is_nilpotent(h5));
  EXPECT_TRUE(is_unimodular(h5));
  EXPECT_FALSE(is_semisimple(h5));
  EXPECT_EQ(center(h5), span(5, {4}));
  EXPECT_EQ(derived_ideal(h5), span(5, {4}));
  EXPECT_THROW(heisenberg(0), std::invalid_argument);
}

TEST(Structure, SumOfHeisenbergsHasCenterInDerivedIdeal) {
  const LieAlgebra n = direct_sum(heisenberg(1), heisenberg(1));
  const Subspace z = center(n);
  EXPECT_EQ(z.dim(), 2u);
  EXPECT_TRUE(derived_ideal(n).contains(z));
}

TEST(Structure, Semisimple) {
  for (const auto& L : {sl2(), so3()}) {
    EXPECT_TRUE(is_semisimple(L));
    EXPECT_FALSE(is_solvable(L));
    EXPECT_TRUE(derived_ideal(L).is_whole());
    EXPECT_TRUE(radical(L).is_zero());
    EXPECT_TRUE(center(L).is_zero());
  }
  // so(3) with cyclic brackets has Killing form -2 I.
  EXPECT_EQ(killing_form(so3()), Rational(-2) * Matrix::identity(3));
  EXPECT_EQ(symmetric_signature(killing_form(sl2())), (Signature{2, 1, 0}));
}

TEST(Structure, SolvableExamples) {
  EXPECT_TRUE(is_solvable(aff1()));
  EXPECT_FALSE(is_nilpotent(aff1()));
  EXPECT_FALSE(is_unimodular(aff1()));
  EXPECT_TRUE(is_unimodular(e2()));
  EXPECT_TRUE(is_solvable(oscillator()));
  EXPECT_EQ(center(oscillator()).dim(), 1u);
  const LieAlgebra hyp = hyperbolic(3);
  EXPECT_EQ(derived_ideal(hyp).codim(), 1u);
  EXPECT_TRUE(is_abelian_subspace(hyp, derived_ideal(hyp)));
  EXPECT_EQ(derived_series(hyp).back().dim(), 0u);
}

TEST(Structure, RadicalOfMixedSum) {
  const LieAlgebra L = direct_sum(sl2(), aff1());
  EXPECT_EQ(radical(L), span(5, {3, 4}));
  EXPECT_TRUE(is_ideal(L, radical(L)));
  EXPECT_TRUE(is_solvable_subalgebra(L, radical(L)));
}

// Block-sum behaviour of center, derived ideal and Killing form.
TEST(Structure, DirectSumIsBlockwise) {
  const std::vector<LieAlgebra> parts{so3(), heisenberg(1), aff1(), oscillator(), e2()};
  for (const auto& a : parts)
    for (const auto& b : parts) {
      const LieAlgebra s = direct_sum(a, b);
      const std::size_t na = a.dim();
      EXPECT_EQ(center(s).dim(), center(a).dim() + center(b).dim());
      EXPECT_EQ(derived_ideal(s).dim(), derived_ideal(a).dim() + derived_ideal(b).dim());
      const Matrix k = killing_form(s), ka = killing_form(a), kb = killing_form(b);
      for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j) {
          Rational expect = 0;
          if (i < na && j < na) expect = ka(i, j);
          if (i >= na && j >= na) expect = kb(i - na, j - na);
          EXPECT_EQ(k(i, j), expect);
        }
    }
}

TEST(Structure, Derivations) {
  const LieAlgebra h = heisenberg(1);
  EXPECT_TRUE(is_derivation(h, Matrix::diagonal({1, 2, 3})));
  EXPECT_FALSE(is_derivation(h, Matrix::diagonal({1, 2, 4})));
  EXPECT_TRUE(is_derivation(aff1(), Matrix::diagonal({0, 1})));
  EXPECT_TRUE(is_symmetric_derivation(aff1(), Matrix::diagonal({0, 1}), Matrix::identity(2)));
  // Inner derivations are derivations.
  for (const auto& f : liegeo::testing::catalog_fixtures())
    for (std::size_t i = 0; i < f.algebra.dim(); ++i) EXPECT_TRUE(is_derivation(f.algebra, f.algebra.ad_basis(i)));
}

TEST(Structure, RestrictedAd) {
  const LieAlgebra g = gn_default();
  const Subspace n = derived_ideal(g);
  EXPECT_EQ(restricted_ad(g, unit_vector(5, 4), n), Matrix::diagonal({1, 1, 2, 3}));
  EXPECT_THROW(restricted_ad(g, unit_vector(5, 0), span(5, {1})), std::invalid_argument);
}
