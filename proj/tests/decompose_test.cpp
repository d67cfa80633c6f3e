#include <gtest/gtest.h>

#include "psct/decompose.hpp"
#include "psct/errors.hpp"
#include "psct/random.hpp"

namespace psct {
namespace {

KForm e(int n, std::vector<int> idx, Scalar c = 1) { return KForm::monomial(n, idx, c); }

SubalgebraBasis span_of(int n, std::vector<KForm> forms) {
  SubalgebraBasis b;
  b.dim = n;
  for (auto& f : forms) b.generators.push_back(SkewEndo::from_form(f));
  return b;
}

Subspace coordinate_subspace(int n, std::vector<int> idx) {
  Subspace s;
  s.dim = n;
  for (int i : idx) s.basis.push_back(Vector::unit(n, i - 1));
  return s;
}

void expect_valid_splitting(const SubalgebraBasis& gens, const std::vector<Subspace>& parts) {
  std::size_t total = 0;
  for (std::size_t a = 0; a < parts.size(); ++a) {
    total += parts[a].size();
    EXPECT_TRUE(is_irreducible(gens, parts[a]));
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      for (const auto& u : parts[a].basis) {
        for (const auto& v : parts[b].basis) EXPECT_TRUE(dot(u, v).is_zero());
      }
    }
  }
  EXPECT_EQ(total, static_cast<std::size_t>(gens.dim));
}

TEST(DecomposeTest, SymmetricCommutantExamples) {
  EXPECT_EQ(symmetric_commutant(full_so(3)).size(), 1u);
  EXPECT_EQ(symmetric_commutant(span_of(3, {e(3, {1, 2})})).size(), 2u);
  EXPECT_EQ(symmetric_commutant(span_of(4, {})).size(), 10u);
  for (const auto& A : symmetric_commutant(span_of(3, {e(3, {1, 2})}))) EXPECT_TRUE(A.is_symmetric());
}

TEST(DecomposeTest, IrreducibilityExamples) {
  EXPECT_TRUE(is_irreducible(full_so(3), Subspace::whole(3)));
  EXPECT_FALSE(is_irreducible(span_of(3, {e(3, {1, 2})}), Subspace::whole(3)));
  auto g = generated_algebra(TorsionDatum(e(6, {1, 2, 3}) + e(6, {4, 5, 6})));
  EXPECT_TRUE(is_irreducible(g, coordinate_subspace(6, {1, 2, 3})));
  EXPECT_THROW(is_irreducible(span_of(3, {e(3, {1, 2})}), coordinate_subspace(3, {1, 3})), DomainError);
}

TEST(DecomposeTest, SplittingExamples) {
  auto g = generated_algebra(TorsionDatum(e(6, {1, 2, 3}) + e(6, {4, 5, 6}, 5)));
  auto parts = invariant_splitting(g);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].basis, coordinate_subspace(6, {1, 2, 3}).basis);
  EXPECT_EQ(parts[1].basis, coordinate_subspace(6, {4, 5, 6}).basis);
  expect_valid_splitting(g, parts);

  auto lines = invariant_splitting(span_of(2, {}));
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0].basis.front(), Vector::unit(2, 0));
  EXPECT_EQ(lines[1].basis.front(), Vector::unit(2, 1));

  auto whole = invariant_splitting(full_so(3));
  ASSERT_EQ(whole.size(), 1u);
  EXPECT_EQ(whole[0].size(), 3u);
}

// Two copies of the same irreducible representation: the commutant is gl(2)-like
// and the splitting must still be orthogonal and irreducible.
TEST(DecomposeTest, SplittingOfIsotypicComponent) {
  auto g = span_of(6, {e(6, {1, 2}) + e(6, {4, 5}), e(6, {1, 3}) + e(6, {4, 6}), e(6, {2, 3}) + e(6, {5, 6})});
  g.closed = true;
  auto parts = invariant_splitting(g);
  EXPECT_EQ(parts.size(), 2u);
  expect_valid_splitting(g, parts);
}

TEST(DecomposeTest, SplittingInRotatedCoordinates) {
  Rng rng(3);
  Matrix Q = random_rotation(6, rng);
  KForm tau = pullback(e(6, {1, 2, 3}) + e(6, {4, 5, 6}, 2), Q.transpose());
  auto g = generated_algebra(TorsionDatum(tau));
  auto parts = invariant_splitting(g);
  EXPECT_EQ(parts.size(), 2u);
  expect_valid_splitting(g, parts);
}

TEST(DecomposeTest, FactorizationOfTwoVolumeForms) {
  TorsionDatum t(e(6, {1, 2, 3}) + e(6, {4, 5, 6}, 2));
  auto rep = psct_factorization(t);
  EXPECT_TRUE(rep.kernel_factor.basis.empty());
  ASSERT_EQ(rep.factors.size(), 2u);
  KForm sum(6, 3);
  for (const auto& f : rep.factors) {
    EXPECT_EQ(f.subspace.size(), 3u);
    EXPECT_EQ(f.kind, FactorKind::SimpleCompact);
    ASSERT_EQ(f.also.size(), 1u);
    EXPECT_EQ(f.also[0], FactorKind::ThreeDimVol);
    EXPECT_EQ(f.killing, (Inertia{0, 0, 3}));
    sum += f.tau_restricted;
  }
  EXPECT_EQ(sum, t.tau());
  EXPECT_EQ(rep.factors[1].tau_restricted, e(6, {4, 5, 6}, 2));
}

TEST(DecomposeTest, FactorizationWithKernel) {
  auto rep = psct_factorization(TorsionDatum(KForm(4, 3)));
  EXPECT_EQ(rep.kernel_factor.size(), 4u);
  EXPECT_TRUE(rep.factors.empty());
  auto rep2 = psct_factorization(TorsionDatum(e(5, {2, 3, 5})));
  EXPECT_EQ(rep2.kernel_factor.basis, (std::vector<Vector>{Vector::unit(5, 0), Vector::unit(5, 3)}));
  ASSERT_EQ(rep2.factors.size(), 1u);
  EXPECT_EQ(rep2.factors[0].tau_restricted, e(5, {2, 3, 5}));
}

TEST(DecomposeTest, RejectsNonPsct) {
  EXPECT_THROW(psct_factorization(TorsionDatum(e(5, {1, 2, 3}) + e(5, {1, 4, 5}))), DomainError);
}

TEST(DecomposeTest, TypingIsStableUnderSignedPermutations) {
  Rng rng(8);
  KForm tau = e(7, {1, 2, 3}) + e(7, {4, 5, 6}, 3);
  auto base = psct_factorization(TorsionDatum(tau));
  for (int trial = 0; trial < 5; ++trial) {
    Matrix P = random_signed_permutation(7, rng);
    auto rep = psct_factorization(TorsionDatum(pullback(tau, P)));
    ASSERT_EQ(rep.factors.size(), base.factors.size());
    EXPECT_EQ(rep.kernel_factor.size(), base.kernel_factor.size());
    for (std::size_t i = 0; i < rep.factors.size(); ++i) {
      EXPECT_EQ(rep.factors[i].kind, base.factors[i].kind);
      EXPECT_EQ(rep.factors[i].subspace.size(), base.factors[i].subspace.size());
    }
  }
}

}  // namespace
}  // namespace psct
