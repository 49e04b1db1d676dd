#include <gtest/gtest.h>

#include "choose2/negative_controls.hpp"
#include "choose2/phi_functor.hpp"

using namespace choose2;

namespace {

bool all_pass(const std::vector<CheckResult>& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const auto& c) { return c.pass; });
}

// gamma(g; g_1..g_k) evaluated pair by pair from the wedge decomposition.
std::vector<int> compose_by_hand(const FinitePointedSet& X, const Composition& c,
                                 std::uint64_t g, const std::vector<std::uint64_t>& gs) {
  const PointedMapCodec outer(X.size(), c.length());
  std::vector<int> values;
  for (const auto& e : all_elements(c.total())) {
    if (e.is_basepoint()) continue;
    const WedgeElement w = mu(c, e);
    if (w.slot() == 0) {
      values.push_back(outer.value(g, w.element().ordinal()));
    } else {
      const PointedMapCodec inner(X.size(), c.part(w.slot()));
      values.push_back(inner.value(gs[static_cast<std::size_t>(w.slot() - 1)], w.element().ordinal()));
    }
  }
  return values;
}

}  // namespace

TEST(PointedMaps, Counts) {
  EXPECT_EQ(PointedMapCodec(2, 2).count(), 2u);
  EXPECT_EQ(PointedMapCodec(2, 3).count(), 8u);
  EXPECT_EQ(PointedMapCodec(3, 4).count(), 729u);
  EXPECT_EQ(PointedMapCodec(1, 6).count(), 1u);
  EXPECT_THROW(PointedMapCodec(2, 9), resource_limit_error);
}

TEST(PointedMaps, EncodeDecode) {
  const PointedMapCodec codec(3, 3);
  for (std::uint64_t id = 0; id < codec.count(); ++id) {
    EXPECT_EQ(codec.encode(codec.decode(id)), id);
    EXPECT_EQ(codec.value(id, 0), FinitePointedSet::basepoint);
  }
}

TEST(RealizeOperad, Sizes) {
  const auto trivial = realize_operad(FinitePointedSet(1), 5);
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(trivial.size(n), 1u);
  const auto op = realize_operad(FinitePointedSet(2), 3);
  EXPECT_EQ(op.size(2), 2u);
  EXPECT_EQ(op.size(3), 8u);
  EXPECT_THROW(realize_operad(FinitePointedSet(2), 9, Budget(1000)), resource_limit_error);
}

TEST(RealizeOperad, TablesMatchHandComposition) {
  const FinitePointedSet X(2);
  const int N = 4;
  const auto op = realize_operad(X, N);
  for (int k = 1; k <= N; ++k)
    for (int n = 0; n <= N; ++n)
      for_each_composition(k, n, -1, [&](const Composition& c) {
        const auto r = op.radices(c);
        detail::MixedRadix odo(r);
        const PointedMapCodec target(X.size(), n);
        do {
          std::vector<std::uint64_t> gs(odo.digits.begin() + 1, odo.digits.end());
          std::vector<ElementId> ids(odo.digits.begin() + 1, odo.digits.end());
          const auto want = target.encode(compose_by_hand(X, c, odo.digits[0], gs));
          EXPECT_EQ(op.compose(c, odo.digits[0], ids), want) << c;
        } while (odo.next());
      });
}

TEST(OperadAxioms, RealizationsPass) {
  EXPECT_TRUE(all_pass(verify_operad_axioms(realize_operad(FinitePointedSet(1), 4), 4)));
  EXPECT_TRUE(all_pass(verify_operad_axioms(realize_operad(FinitePointedSet(2), 4), 4)));
  EXPECT_TRUE(all_pass(verify_operad_axioms(realize_operad(FinitePointedSet(3), 3), 3)));
}

TEST(OperadAxioms, PermutedTableFails) {
  auto op = realize_operad(FinitePointedSet(2), 3);
  corrupt::permute_table_entry(op);
  const auto cs = verify_operad_axioms(op, 3);
  EXPECT_FALSE(all_pass(cs));
  for (const auto& c : cs)
    if (!c.pass) EXPECT_TRUE(c.witness.is_object()) << c.name;
}

TEST(RealizeBimodule, GammaOneMatchesOperad) {
  const FinitePointedSet X(2);
  const auto bm = realize_bimodule(X, 1, 3);
  for (int k = 1; k <= 3; ++k)
    for (int n = 0; n <= 3; ++n)
      for_each_composition(k, n, -1, [&](const Composition& c) {
        const PointedMapCodec src(X.size(), k), dst(X.size(), n);
        for (ElementId f = 0; f < bm.size(k); ++f) {
          std::vector<int> want;
          for (const auto& e : all_elements(n)) {
            if (e.is_basepoint()) continue;
            const BElement r = rho_action(c, e);
            want.push_back(src.value(f, r.ordinal()));
          }
          EXPECT_EQ(bm.right(c, f), dst.encode(want)) << c;
        }
      });
}

TEST(RealizeBimodule, HandEvaluationAtMTwo) {
  const FinitePointedSet X(2);
  const auto bm = realize_bimodule(X, 2, 2);
  // A single block of size 2 has no cross-block pairs: rho is constant at
  // the basepoint, so every map goes to the constant map.
  for (ElementId f = 0; f < bm.size(1); ++f) EXPECT_EQ(bm.right(Composition({2}), f), 0u);
  // lambda on one block keeps same-row pairs (1,3), (2,4) and kills the rest.
  const PointedMapCodec codec(2, 4);
  for (ElementId f = 0; f < bm.size(2); ++f) {
    auto v = codec.decode(f);
    for (std::size_t p = 0; p < v.size(); ++p) {
      const BElement e = BElement::from_ordinal(4, p + 1);
      const bool same_row = (e.first() - 1) % 2 == (e.second() - 1) % 2;
      if (!same_row) v[p] = 0;
    }
    const ElementId fs[] = {f};
    EXPECT_EQ(bm.left(Composition({2}), fs), codec.encode(v));
  }
  EXPECT_EQ(bm.right(Composition({1, 1}), 0), 0u);
}

TEST(RealizeBimodule, PhiCommutesWithGamma) {
  for (int m = 1; m <= 4; ++m)
    for (int k = 1; m * k <= 4; ++k) EXPECT_TRUE(check_phi_gamma_commute(FinitePointedSet(2), m, k).pass);
  EXPECT_TRUE(check_phi_gamma_commute(FinitePointedSet(3), 3, 1).pass);
}

TEST(Extension, ConstantBasepoint) {
  const FinitePointedSet X(2);
  const auto P = realize_operad(X, 3);
  const auto ext = extend_point_map(P, X, std::vector<int>(P.size(2), 0));
  for (const auto& comp : ext.components)
    for (auto v : comp) EXPECT_EQ(v, 0u);
}

TEST(Extension, IdentityInArityTwo) {
  const FinitePointedSet X(2);
  const auto P = realize_operad(X, 4);
  const PointedMapCodec codec(2, 2);
  std::vector<int> g;
  for (ElementId e = 0; e < P.size(2); ++e) g.push_back(codec.value(e, 1));
  const auto ext = extend_point_map(P, X, g);
  for (ElementId e = 0; e < P.size(2); ++e) EXPECT_EQ(ext.components[2][e], e);
  EXPECT_TRUE(all_pass(verify_extension(P, P, ext)));
}

TEST(Extension, EveryPointMapIsMultiplicative) {
  const FinitePointedSet X(3);
  const auto P = realize_operad(X, 3);
  const auto phi = realize_operad(X, 3);
  // P(2) has 3 elements, the first is the basepoint.
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const std::vector<int> g{0, a, b};
      const auto ext = extend_point_map(P, X, g);
      EXPECT_TRUE(all_pass(verify_extension(P, phi, ext))) << a << b;
    }
}

TEST(Extension, Preconditions) {
  const FinitePointedSet X(2);
  const auto P = realize_operad(X, 3);
  EXPECT_THROW(extend_point_map(P, X, {1, 1}), precondition_violation);
  EXPECT_THROW(extend_point_map(P, X, {0, 2}), precondition_violation);
  EXPECT_THROW(extend_point_map(P, X, {0}), precondition_violation);
  FinitePointedOperad big({2, 1, 2}, 0);
  EXPECT_THROW(extend_point_map(big, X, {0, 1}), precondition_violation);
}
