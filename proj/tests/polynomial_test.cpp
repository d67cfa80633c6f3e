#include <gtest/gtest.h>

#include "psct/polynomial.hpp"

namespace psct {
namespace {

Polynomial poly(std::initializer_list<long> c) {
  std::vector<mpq_class> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(v);
}

Polynomial product(const std::vector<Polynomial>& fs) {
  Polynomial p = poly({1});
  for (const auto& f : fs) p = p * f;
  return p;
}

TEST(PolynomialTest, DivisionAndGcd) {
  Polynomial a = poly({-1, 0, 1});  // x^2 - 1
  Polynomial b = poly({1, 1});      // x + 1
  auto dm = divmod(a, b);
  EXPECT_EQ(dm.quotient, poly({-1, 1}));
  EXPECT_TRUE(dm.remainder.is_zero());
  EXPECT_EQ(gcd(a, poly({2, 3, 1})), b);
}

TEST(PolynomialTest, FactorsRationalRootsAndQuadratics) {
  // (x - 1/2)(x^2 - 2)(x^2 + x + 1)(x + 3)^2
  Polynomial f = product({poly({-1, 2}), poly({-2, 0, 1}), poly({1, 1, 1}), poly({3, 1}), poly({3, 1})});
  auto fs = irreducible_factors(f);
  ASSERT_EQ(fs.size(), 4u);
  Polynomial sq = product(fs);
  EXPECT_EQ(sq, divmod(f, gcd(f, f.derivative())).quotient.monic());
  for (const auto& g : fs) EXPECT_LE(g.degree(), 2);
}

TEST(PolynomialTest, KroneckerFindsQuarticSplitting) {
  // (x^2 + 1)(x^2 + 2) has no rational roots but splits into quadratics.
  auto fs = irreducible_factors(poly({2, 0, 3, 0, 1}));
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(fs[0].degree(), 2);
  EXPECT_EQ(fs[1].degree(), 2);
  EXPECT_EQ(irreducible_factors(poly({-2, 0, 0, 0, 1})).size(), 1u);
  EXPECT_EQ(irreducible_factors(poly({4, 0, 0, 0, 1})).size(), 2u);  // x^4 + 4 = (x^2+2x+2)(x^2-2x+2)
}

TEST(PolynomialTest, MinimalPolynomialOfMatrix) {
  Matrix a(3, 3);
  a(0, 0) = 2;
  a(1, 1) = 2;
  a(2, 2) = 5;
  auto mp = minimal_polynomial(a);
  ASSERT_TRUE(mp.has_value());
  EXPECT_EQ(*mp, poly({10, -7, 1}));
  EXPECT_TRUE(evaluate(*mp, a).is_zero());
}

}  // namespace
}  // namespace psct
