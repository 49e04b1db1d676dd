#include <gtest/gtest.h>

#include <set>

#include "choose2/combinatorics.hpp"

using namespace choose2;

namespace {

std::vector<std::vector<int>> parts_of(const std::vector<Composition>& cs) {
  std::vector<std::vector<int>> out;
  for (const auto& c : cs) out.emplace_back(c.parts().begin(), c.parts().end());
  return out;
}

// Every tuple in [0, n]^k, filtered by sum.
std::set<std::vector<int>> brute_force(int k, int n) {
  std::set<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(k), 0);
  for (;;) {
    int sum = 0;
    for (int v : t) sum += v;
    if (sum == n) out.insert(t);
    std::size_t p = 0;
    while (p < t.size() && t[p] == n) t[p++] = 0;
    if (p == t.size()) break;
    ++t[p];
  }
  return out;
}

}  // namespace

TEST(Compositions, SmallCases) {
  EXPECT_EQ(parts_of(enumerate_compositions(2, 2)),
            (std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}}));
  EXPECT_EQ(parts_of(enumerate_compositions(1, 5)), (std::vector<std::vector<int>>{{5}}));
  EXPECT_EQ(enumerate_compositions(3, 4).size(), 15u);
}

TEST(Compositions, KZeroRejected) {
  EXPECT_THROW(enumerate_compositions(0, 3), std::invalid_argument);
  EXPECT_THROW(Composition(std::vector<int>{}), std::invalid_argument);
  EXPECT_THROW(Composition({1, -1}), std::invalid_argument);
}

TEST(Compositions, MatchesBruteForceAndIsSortedDistinct) {
  for (int k = 1; k <= 4; ++k)
    for (int n = 0; n <= 6; ++n) {
      const auto got = parts_of(enumerate_compositions(k, n));
      const auto want = brute_force(k, n);
      EXPECT_EQ(std::set<std::vector<int>>(got.begin(), got.end()), want) << k << ' ' << n;
      EXPECT_EQ(got.size(), want.size());
      EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
    }
}

TEST(Compositions, ZeroPartFilter) {
  for (int k = 1; k <= 4; ++k)
    for (int n = 0; n <= 5; ++n)
      for (int z = 0; z <= k; ++z) {
        std::size_t want = 0;
        for (const auto& t : brute_force(k, n))
          if (std::count(t.begin(), t.end(), 0) <= z) ++want;
        std::size_t got = 0;
        for_each_composition(k, n, z, [&](const Composition& c) {
          EXPECT_LE(c.zero_parts(), z);
          ++got;
        });
        EXPECT_EQ(got, want) << k << ' ' << n << ' ' << z;
      }
}

TEST(PartialSum, Examples) {
  EXPECT_EQ(partial_sum(Composition({2, 2}), 1), 0);
  EXPECT_EQ(partial_sum(Composition({1, 2}), 2), 1);
  EXPECT_EQ(partial_sum(Composition({2, 2}), 3), 4);
  EXPECT_THROW(partial_sum(Composition({2, 2}), 0), std::invalid_argument);
  EXPECT_THROW(partial_sum(Composition({2, 2}), 4), std::invalid_argument);
}

TEST(PartialSum, MonotoneWithTotalAtEnd) {
  for (const auto& c : enumerate_compositions(4, 5)) {
    for (int s = 1; s <= c.length(); ++s) EXPECT_LE(c.partial_sum(s), c.partial_sum(s + 1));
    EXPECT_EQ(c.partial_sum(c.length() + 1), c.total());
  }
}

TEST(BlockOf, AgreesWithLinearScan) {
  for (int k = 1; k <= 4; ++k)
    for (const auto& c : enumerate_compositions(k, 5))
      for (int i = 1; i <= c.total(); ++i) {
        int s = 0, acc = 0;
        while (acc < i) acc += c.part(++s);
        EXPECT_EQ(c.block_of(i), s);
        EXPECT_GT(c.part(s), 0);
      }
}

TEST(IndexDecomposition, Examples) {
  EXPECT_EQ(decompose_index(1, 2).a, 1);
  EXPECT_EQ(decompose_index(1, 2).r, 1);
  EXPECT_EQ(decompose_index(3, 2).a, 2);
  EXPECT_EQ(decompose_index(3, 2).r, 1);
  EXPECT_EQ(decompose_index(6, 2).a, 3);
  EXPECT_EQ(decompose_index(6, 2).r, 2);
  EXPECT_THROW(decompose_index(0, 2), std::invalid_argument);
  EXPECT_THROW(decompose_index(1, 0), std::invalid_argument);
}

TEST(IndexDecomposition, Bijective) {
  for (int m = 1; m <= 4; ++m) {
    std::set<std::pair<int, int>> seen;
    for (int i = 1; i <= 6 * m; ++i) {
      const auto d = decompose_index(i, m);
      EXPECT_GE(d.r, 1);
      EXPECT_LE(d.r, m);
      EXPECT_EQ(compose_index(d.a, d.r, m), i);
      seen.insert({d.a, d.r});
    }
    EXPECT_EQ(seen.size(), static_cast<std::size_t>(6 * m));
  }
}

TEST(Compose, SumsInnerOverOuterBlocks) {
  EXPECT_EQ(compose(Composition({2, 1}), Composition({1, 3, 2})), Composition({4, 2}));
  EXPECT_EQ(compose(Composition({0, 2}), Composition({1, 1})), Composition({0, 2}));
  EXPECT_EQ(restrict_to_block(Composition({1, 3, 2}), Composition({2, 1}), 1),
            (std::vector<int>{1, 3}));
  EXPECT_TRUE(restrict_to_block(Composition({1, 1}), Composition({0, 2}), 1).empty());
  EXPECT_THROW(compose(Composition({2}), Composition({1})), std::invalid_argument);
}

TEST(Compose, AssociativeAndUnital) {
  for (const auto& a : enumerate_compositions(2, 3))
    for (const auto& b : enumerate_compositions(3, 3))
      for (const auto& c : enumerate_compositions(3, 2)) {
        EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
        EXPECT_EQ(compose(Composition::ones(2), a), a);
        EXPECT_EQ(compose(a, Composition::ones(3)), a);
      }
}

TEST(Binomial, PascalRule) {
  for (int n = 1; n <= 20; ++n)
    for (int k = 1; k < n; ++k)
      EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
  EXPECT_EQ(binomial(4, 2), 6u);
  EXPECT_EQ(binomial(3, 5), 0u);
}
