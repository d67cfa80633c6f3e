#include <gtest/gtest.h>

#include "psct/errors.hpp"
#include "psct/random.hpp"
#include "psct/rootsys.hpp"

namespace psct {
namespace {

// Lexicographically least sign vector (+ before -, first sign +) by full enumeration.
std::optional<std::vector<int>> balanced_by_exhaustion(const std::vector<IntVector>& roots) {
  const std::size_t n = roots.size();
  if (n == 0) return std::vector<int>{};
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n - 1)); ++code) {
    std::vector<int> signs(n, 1);
    for (std::size_t i = 1; i < n; ++i) {
      if ((code >> (n - 1 - i)) & 1) signs[i] = -1;
    }
    IntVector sum(roots[0].size(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += signs[i] * roots[i][c];
    }
    if (std::all_of(sum.begin(), sum.end(), [](long x) { return x == 0; })) return signs;
  }
  return std::nullopt;
}

TEST(RootSysTest, PositiveRootCounts) {
  const std::vector<std::tuple<char, int, std::size_t>> table{
      {'A', 1, 1},  {'A', 2, 3},  {'A', 3, 6},  {'A', 4, 10}, {'B', 2, 4},  {'B', 3, 9},  {'C', 2, 4},
      {'C', 3, 9},  {'D', 4, 12}, {'G', 2, 6},  {'F', 4, 24}, {'E', 6, 36}, {'E', 7, 63}, {'E', 8, 120}};
  for (auto [type, rank, count] : table) {
    EXPECT_EQ(positive_roots(type, rank).size(), count) << type << rank;
  }
  EXPECT_THROW(positive_roots('G', 3), DomainError);
  EXPECT_THROW(positive_roots('A', 16), DomainError);
}

TEST(RootSysTest, ClosedUnderReflections) {
  for (auto [type, rank] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}, {'F', 4}, {'E', 6}}) {
    auto R = positive_roots(type, rank);
    std::vector<IntVector> all = R.positive;
    for (auto v : R.positive) {
      for (auto& x : v) x = -x;
      all.push_back(v);
    }
    for (const auto& a : R.positive) {
      long aa = 0;
      for (long x : a) aa += x * x;
      for (const auto& b : all) {
        long ab = 0;
        for (std::size_t c = 0; c < a.size(); ++c) ab += a[c] * b[c];
        ASSERT_EQ((2 * ab) % aa, 0) << type << rank;
        IntVector r = b;
        for (std::size_t c = 0; c < a.size(); ++c) r[c] -= (2 * ab / aa) * a[c];
        EXPECT_TRUE(R.is_root(r)) << type << rank;
      }
    }
  }
}

TEST(RootSysTest, A2AndB2Ordering) {
  auto A2 = positive_roots('A', 2);
  EXPECT_EQ(A2.positive, (std::vector<IntVector>{{1, -1, 0}, {0, 1, -1}, {1, 0, -1}}));
  auto B2 = positive_roots('B', 2);
  EXPECT_EQ(B2.positive, (std::vector<IntVector>{{1, -1}, {0, 1}, {1, 0}, {1, 1}}));
}

TEST(RootSysTest, BalancedExamples) {
  auto A2 = positive_roots('A', 2);
  EXPECT_EQ(is_balanced(A2.positive), (std::vector<int>{1, 1, -1}));
  EXPECT_FALSE(is_balanced({{1, 0}}).has_value());
  EXPECT_FALSE(is_balanced(positive_roots('B', 2).positive).has_value());
  EXPECT_EQ(is_balanced({}), std::vector<int>{});
  for (int k = 1; k <= 3; ++k) EXPECT_TRUE(is_balanced(positive_roots('A', 2 * k).positive).has_value()) << k;
}

TEST(RootSysTest, BalancedAgreesWithExhaustionOnAllSubsets) {
  for (char type : {'A', 'B'}) {
    auto R = positive_roots(type, 2);
    for (std::uint32_t m = 0; m < (1u << R.size()); ++m) {
      std::vector<IntVector> subset;
      for (std::size_t i = 0; i < R.size(); ++i) {
        if ((m >> i) & 1) subset.push_back(R.positive[i]);
      }
      EXPECT_EQ(is_balanced(subset), balanced_by_exhaustion(subset)) << type << " mask " << m;
    }
  }
}

TEST(RootSysTest, BalancedAgreesWithExhaustionOnRandomSubsets) {
  Rng rng(17);
  for (auto [type, rank] : std::vector<std::pair<char, int>>{{'A', 4}, {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}, {'F', 4}}) {
    auto R = positive_roots(type, rank);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<IntVector> subset;
      for (const auto& r : R.positive) {
        if (subset.size() < 12 && rng.below(2)) subset.push_back(r);
      }
      EXPECT_EQ(is_balanced(subset), balanced_by_exhaustion(subset)) << type << rank;
    }
  }
}

TEST(RootSysTest, StrongOrthogonality) {
  auto B2 = positive_roots('B', 2);  // e1-e2, e2, e1, e1+e2
  EXPECT_TRUE(is_strongly_orthogonal({3, 0}, B2));
  EXPECT_FALSE(is_strongly_orthogonal({1, 2}, B2));
  EXPECT_TRUE(is_strongly_orthogonal({}, B2));
}

TEST(RootSysTest, WellBalancedExamples) {
  auto a2 = well_balanced_search(positive_roots('A', 2));
  ASSERT_FALSE(a2.empty());
  EXPECT_TRUE(a2.front().complement.empty());
  EXPECT_EQ(a2.front().S, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_TRUE(well_balanced_search(positive_roots('B', 2)).empty());
  EXPECT_TRUE(well_balanced_search(positive_roots('A', 1)).empty());

  WellBalancedOptions loose;
  loose.forbid_singleton_complement = false;
  auto b2 = well_balanced_search(positive_roots('B', 2), loose);
  // e2 + e1 - (e1+e2) = 0 and e1 - e2 - (e1-e2) = 0: both singleton complements work.
  ASSERT_EQ(b2.size(), 2u);
  EXPECT_EQ(b2[0].complement, (std::vector<std::size_t>{0}));
  EXPECT_EQ(b2[1].complement, (std::vector<std::size_t>{3}));
  for (const auto& w : b2) EXPECT_TRUE(verify_well_balanced(positive_roots('B', 2), w, false));
}

TEST(RootSysTest, WellBalancedOnProducts) {
  auto A1 = positive_roots('A', 1);
  auto R = product(A1, A1);
  auto res = well_balanced_search(R);
  ASSERT_EQ(res.size(), 1u);
  EXPECT_TRUE(res.front().S.empty());
  EXPECT_EQ(res.front().complement, (std::vector<std::size_t>{0, 1}));

  auto mixed = product(positive_roots('A', 2), positive_roots('B', 2));
  for (const auto& w : well_balanced_search(mixed)) EXPECT_TRUE(verify_well_balanced(mixed, w, true));
  for (auto [type, rank] : std::vector<std::pair<char, int>>{{'A', 3}, {'A', 4}, {'C', 3}, {'D', 4}, {'G', 2}}) {
    auto S = positive_roots(type, rank);
    auto found = well_balanced_search(S);
    EXPECT_FALSE(found.empty()) << type << rank;
    for (const auto& w : found) EXPECT_TRUE(verify_well_balanced(S, w, true));
  }
  WellBalancedOptions small;
  small.cap_roots = 10;
  EXPECT_THROW(well_balanced_search(positive_roots('F', 4), small), DomainError);
}

}  // namespace
}  // namespace psct
