#include <gtest/gtest.h>

#include "liegeo/structure.hpp"
#include "support.hpp"

using namespace liegeo;
using liegeo::testing::bareiss_rank;
using liegeo::testing::leibniz_det;
using liegeo::testing::permutation_pfaffian;
using liegeo::testing::permutation_wedge;

namespace {

Matrix random_skew(RationalSampler& s, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = s.next();
      m(j, i) = -m(i, j);
    }
  return m;
}

// Geometric characterization: d(eta) has rank 2n and eta does not vanish
// on its radical.
bool contact_by_rank(const LieAlgebra& L, const Covector& eta) {
  const Matrix d = differential(L, eta);
  if (bareiss_rank(d) != L.dim() - 1) return false;
  const Subspace radical = two_form_radical(d);
  for (const auto& v : radical.basis())
    if (sgn(dot(eta, v)) != 0) return true;
  return false;
}

}  // namespace

TEST(Pfaffian, MatchesPermutationSum) {
  RationalSampler s(101);
  for (std::size_t n : {0u, 2u, 4u, 6u}) {
    for (int trial = 0; trial < 6; ++trial) {
      const Matrix a = random_skew(s, n);
      EXPECT_EQ(pfaffian(a), permutation_pfaffian(a));
    }
  }
}

TEST(Pfaffian, SquaresToDeterminant) {
  RationalSampler s(103);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = random_skew(s, 2 + 2 * (trial % 3));
    const Rational pf = pfaffian(a);
    EXPECT_EQ(pf * pf, leibniz_det(a));
  }
  EXPECT_EQ(pfaffian(random_skew(s, 5)), Rational(0));
  EXPECT_THROW(pfaffian(Matrix::from_rows({{0, 1}, {1, 0}})), std::invalid_argument);
}

TEST(Differential, Convention) {
  // d(e0*)(e1, e2) = -e0*([e1, e2]) = -1 on H3.
  const Matrix d = differential(heisenberg(1), unit_vector(3, 2));
  EXPECT_EQ(d(0, 1), Rational(-1));
  EXPECT_EQ(d(1, 0), Rational(1));
  EXPECT_TRUE(d.is_skew());
}

TEST(ContactScalar, MatchesWedgeOracle) {
  RationalSampler s(107);
  for (const auto& L : {heisenberg(1), heisenberg(2), so3(), sl2(), e2(), gn_default(), hyperbolic(4),
                        direct_sum(sl2(), aff1()), flat5()}) {
    SCOPED_TRACE(L.name());
    for (int trial = 0; trial < 25; ++trial) {
      const Covector eta = trial % 2 ? s.vector(L.dim()) : s.sparse_vector(L.dim());
      EXPECT_EQ(contact_scalar(L, eta), permutation_wedge(differential(L, eta), eta));
    }
  }
}

TEST(ContactScalar, Homogeneous) {
  RationalSampler s(109);
  for (const auto& L : {heisenberg(2), r4_so3(), gn_default()}) {
    const std::size_t n = L.dim() / 2;
    for (int trial = 0; trial < 10; ++trial) {
      const Covector eta = s.vector(L.dim());
      const Rational c = s.next() + 11;  // nonzero
      Rational cn = 1;
      for (std::size_t k = 0; k <= n; ++k) cn *= c;
      EXPECT_EQ(contact_scalar(L, c * eta), cn * contact_scalar(L, eta));
    }
  }
}

TEST(ContactScalar, EvenDimensionThrows) {
  EXPECT_THROW(contact_scalar(aff1(), {0, 1}), std::invalid_argument);
  EXPECT_THROW(symplectic_scalar(so3(), {0, 0, 1}), std::invalid_argument);
}

TEST(ContactScalar, AgreesWithRankCharacterization) {
  for (const auto& f : liegeo::testing::catalog_fixtures()) {
    if (f.algebra.dim() % 2 == 0) continue;
    SCOPED_TRACE(f.file);
    RationalSampler s(113);
    int disagreements = 0;
    for (int trial = 0; trial < 500; ++trial) {
      const Covector eta = trial % 3 == 0 ? s.sparse_vector(f.algebra.dim()) : s.vector(f.algebra.dim());
      if (is_contact(f.algebra, eta) != contact_by_rank(f.algebra, eta)) ++disagreements;
    }
    EXPECT_EQ(disagreements, 0);
  }
}

TEST(Reeb, DefiningProperties) {
  RationalSampler s(127);
  for (const auto& L : {heisenberg(1), heisenberg(3), so3(), sl2(), r4_so3(), gn_default()}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Covector eta = s.vector(L.dim());
      if (!is_contact(L, eta)) continue;
      const Vector xi = reeb(L, eta);
      EXPECT_EQ(dot(eta, xi), Rational(1));
      EXPECT_TRUE(is_zero(differential(L, eta) * xi));
    }
  }
  EXPECT_EQ(reeb(heisenberg(1), unit_vector(3, 2)), unit_vector(3, 2));
  EXPECT_THROW(reeb(heisenberg(1), unit_vector(3, 0)), std::domain_error);
}

TEST(Contact, KernelNotSubalgebra) {
  RationalSampler s(131);
  for (const auto& L : {heisenberg(2), so3(), r4_so3()})
    for (int trial = 0; trial < 10; ++trial) {
      const Covector eta = s.vector(L.dim());
      if (is_contact(L, eta)) EXPECT_TRUE(kernel_not_subalgebra(L, eta));
    }
  EXPECT_FALSE(kernel_not_subalgebra(LieAlgebra::abelian(3), {1, 0, 0}));
  EXPECT_THROW(kernel_not_subalgebra(so3(), {0, 0, 0}), std::invalid_argument);
}

TEST(Decide, ContactExistsWithWitness) {
  for (const auto& L : {sl2(), so3(), heisenberg(1), heisenberg(3), e2(), direct_sum(sl2(), aff1()), r4_so3(),
                        gn_default()}) {
    SCOPED_TRACE(L.name());
    const auto out = decide_contact_exists(L);
    ASSERT_EQ(out.verdict, Verdict::Exists);
    ASSERT_TRUE(out.witness);
    EXPECT_EQ(contact_scalar(L, *out.witness), *out.witness_value);
    EXPECT_NE(sgn(*out.witness_value), 0);
  }
}

TEST(Decide, ContactNoneCertificates) {
  struct Case {
    LieAlgebra L;
    std::uint64_t evaluations;
  };
  const std::vector<Case> cases{{LieAlgebra::abelian(5), 1024},  {LieAlgebra::abelian(7), 78125},
                                {direct_sum(so3(), LieAlgebra::abelian(2)), 1024},
                                {direct_sum(so3(), LieAlgebra::abelian(4)), 78125},
                                {flat5(), 1024},
                                {hyperbolic(4), 1024}};
  for (const auto& c : cases) {
    SCOPED_TRACE(c.L.name());
    const auto out = decide_contact_exists(c.L);
    EXPECT_EQ(out.verdict, Verdict::None);
    ASSERT_TRUE(out.certificate);
    EXPECT_EQ(out.certificate->evaluations, c.evaluations);
    EXPECT_EQ(out.certificate->points_per_coordinate, out.certificate->degree_bound + 1);
  }
  EXPECT_EQ(decide_contact_exists(aff1()).note, "even dimension");
}

TEST(Decide, Symplectic) {
  const auto yes = decide_exact_symplectic_exists(aff1());
  EXPECT_EQ(yes.verdict, Verdict::Exists);
  EXPECT_NE(sgn(symplectic_scalar(aff1(), *yes.witness)), 0);
  const auto none = decide_exact_symplectic_exists(hyperbolic(3));
  EXPECT_EQ(none.verdict, Verdict::None);
  ASSERT_TRUE(none.certificate);
  EXPECT_EQ(none.certificate->evaluations, 81u);
  EXPECT_EQ(decide_exact_symplectic_exists(direct_sum(heisenberg(1), LieAlgebra::abelian(1))).verdict, Verdict::None);
  EXPECT_THROW(decide_exact_symplectic_exists(so3()), std::invalid_argument);
}

TEST(Decide, SeedChangesOnlyTheSearchPath) {
  const LieAlgebra L = direct_sum(sl2(), aff1());
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    SearchOptions o;
    o.seed = seed;
    const auto a = decide_contact_exists(L, o), b = decide_contact_exists(L, o);
    EXPECT_EQ(a.verdict, Verdict::Exists);
    EXPECT_EQ(a.witness, b.witness);
  }
}
