#include <gtest/gtest.h>

#include <map>

#include "choose2/chains.hpp"
#include "choose2/suites.hpp"

using namespace choose2;

namespace {

std::set<Edge> E(std::initializer_list<Edge> es) { return es; }

// All 24 orderings, bucketed by {ordering, its reverse}.
std::set<std::set<std::array<int, 4>>> brute_force_classes() {
  std::set<std::set<std::array<int, 4>>> out;
  std::array<int, 4> p{1, 2, 3, 4};
  do {
    const std::array<int, 4> r{p[3], p[2], p[1], p[0]};
    out.insert({p, r});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

TEST(Permutation4, CycleNotation) {
  const auto c = Permutation4::from_cycles("(1243)");
  EXPECT_EQ(c(1), 2);
  EXPECT_EQ(c(2), 4);
  EXPECT_EQ(c(4), 3);
  EXPECT_EQ(c(3), 1);
  EXPECT_EQ(c.sign(), -1);
  EXPECT_EQ(Permutation4::from_cycles("(12)(34)").sign(), 1);
  EXPECT_THROW(Permutation4::from_cycles("(125)"), std::invalid_argument);
  EXPECT_THROW(Permutation4::from_cycles("(12"), std::invalid_argument);
  EXPECT_THROW(Permutation4({1, 1, 2, 3}), std::invalid_argument);
}

TEST(Chains, TwelveClasses) {
  const auto classes = enumerate_chains({1, 2, 3, 4});
  EXPECT_EQ(classes.size(), 12u);
  EXPECT_EQ(brute_force_classes().size(), 12u);
  std::set<std::set<std::array<int, 4>>> mine;
  for (const auto& ch : classes) {
    EXPECT_LT(ch.rep(1), ch.rep(4));
    mine.insert({ch.rep.one_line(), ch.rep.reversed().one_line()});
  }
  EXPECT_EQ(mine, brute_force_classes());
  EXPECT_EQ(enumerate_chains({9, 2, 7, 4}).size(), 12u);
}

TEST(Chains, IdentityAndReversal) {
  const auto classes = enumerate_chains({1, 2, 3, 4});
  const Chain3Class id{{1, 2, 3, 4}, Permutation4()};
  EXPECT_NE(std::find(classes.begin(), classes.end(), id), classes.end());
  EXPECT_EQ(make_chain({1, 2, 3, 4}, Permutation4({4, 3, 2, 1})), id);
}

TEST(Chains, BadIndexSets) {
  EXPECT_THROW(enumerate_chains({1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(enumerate_chains({1, 2, 3, 4, 5}), std::invalid_argument);
  EXPECT_THROW(enumerate_chains({1, 2, 2, 4}), std::invalid_argument);
}

TEST(Chains, DualOfIdentity) {
  const Chain3Class id{{1, 2, 3, 4}, Permutation4()};
  EXPECT_EQ(dual(id).rep, Permutation4({2, 4, 1, 3}));
  EXPECT_EQ(edges(id), E({{1, 2}, {2, 3}, {3, 4}}));
  EXPECT_EQ(edges(dual(id)), E({{1, 3}, {1, 4}, {2, 4}}));
}

TEST(Chains, DualInvolutionAndComplement) {
  for (const std::vector<int>& T : {std::vector<int>{1, 2, 3, 4}, std::vector<int>{3, 5, 8, 13}})
    for (const auto& ch : enumerate_chains(T)) {
      EXPECT_EQ(dual(dual(ch)), ch);
      const auto a = edges(ch), b = edges(dual(ch));
      std::set<Edge> all(a.begin(), a.end());
      all.insert(b.begin(), b.end());
      EXPECT_EQ(a.size(), 3u);
      EXPECT_EQ(all.size(), 6u);
    }
}

TEST(Chains, HamiltonianPaths) {
  for (const auto& ch : enumerate_chains({1, 2, 3, 4})) {
    std::map<int, int> deg;
    for (const auto& [x, y] : edges(ch)) ++deg[x], ++deg[y];
    std::multiset<int> d;
    for (const auto& [v, n] : deg) d.insert(n);
    EXPECT_EQ(d, (std::multiset<int>{1, 1, 2, 2}));
    EXPECT_EQ(edges(ch), edges(Chain3Class{ch.T, ch.rep.reversed()}));
  }
}

TEST(Chains, ParityReversalInvariant) {
  EXPECT_EQ(Permutation4({4, 3, 2, 1}).sign(), 1);
  for (const auto& ch : enumerate_chains({1, 2, 3, 4})) EXPECT_EQ(ch.rep.sign(), ch.rep.reversed().sign());
}

TEST(Chains, DualCommutesWithReversal) {
  for (const auto& ch : enumerate_chains({1, 2, 3, 4}))
    EXPECT_EQ(dual_permutation(ch.rep.reversed()).canonical(), dual_permutation(ch.rep).canonical());
}

TEST(Chains, SuitePassesAndLeftCompositionFails) {
  const auto good = verify_chains(11, 100);
  for (const auto& c : good) EXPECT_TRUE(c.pass) << c.name;
  const auto bad = verify_chains(11, 10, [](const Permutation4& s) { return dual_cycle() * s; });
  bool any_fail = false;
  for (const auto& c : bad) any_fail |= !c.pass;
  EXPECT_TRUE(any_fail);
}
