#include <gtest/gtest.h>

#include "choose2/cosimplicial.hpp"
#include "choose2/negative_controls.hpp"

using namespace choose2;

namespace {

const CheckResult& named(const std::vector<CheckResult>& cs, const std::string& name) {
  for (const auto& c : cs)
    if (c.name == name) return c;
  throw std::logic_error("no check " + name);
}

bool all_pass(const std::vector<CheckResult>& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const auto& c) { return c.pass; });
}

// Level k+1 point p lands on level k point q(p) under the merge of i, i+1.
int merged(int i, int p) { return p <= i ? p : p - 1; }

// d^i: B(k+1) -> B(k), written out case by case.
BElement coface_by_hand(int k, int i, const BElement& e) {
  if (e.is_basepoint()) return BElement::basepoint(k);
  const int a = e.first(), b = e.second();
  if (i == 0) return a >= 2 ? BElement::pair(k, a - 1, b - 1) : BElement::basepoint(k);
  if (i == k + 1) return b <= k ? BElement::pair(k, a, b) : BElement::basepoint(k);
  const int qa = merged(i, a), qb = merged(i, b);
  return qa == qb ? BElement::basepoint(k) : BElement::pair(k, qa, qb);
}

// s^j: B(k-1) -> B(k), skipping point j+1.
BElement codegeneracy_by_hand(int k, int j, const BElement& e) {
  if (e.is_basepoint()) return BElement::basepoint(k);
  const auto up = [j](int p) { return p <= j ? p : p + 1; };
  return BElement::pair(k, up(e.first()), up(e.second()));
}

// Row-block doubling of an arity k*m map at interior slot i.
SphereMap double_block_by_hand(const SphereMap& f, int m, int k, int i) {
  SphereMap F((k + 1) * m, f.dim(), f.south_pole());
  for (int p = 1; p <= (k + 1) * m; ++p)
    for (int q = p + 1; q <= (k + 1) * m; ++q) {
      const int ap = (p - 1) / m + 1, rp = p - (ap - 1) * m;
      const int aq = (q - 1) / m + 1, rq = q - (aq - 1) * m;
      const int bp = merged(i, ap), bq = merged(i, aq);
      if (rp != rq || bp == bq) continue;
      F.set(p, q, f.stored((bp - 1) * m + rp, (bq - 1) * m + rq));
    }
  return F;
}

}  // namespace

TEST(Compositions, CofaceAndCodegeneracyShapes) {
  EXPECT_EQ(coface_composition(3, 2), Composition({1, 2, 1}));
  EXPECT_EQ(codegeneracy_composition(3, 0), Composition({0, 1, 1}));
  EXPECT_EQ(codegeneracy_composition(3, 2), Composition({1, 1, 0}));
  EXPECT_THROW(coface_composition(3, 0), std::invalid_argument);
  EXPECT_THROW(coface_composition(3, 4), std::invalid_argument);
  EXPECT_THROW(codegeneracy_composition(3, 3), std::invalid_argument);
}

TEST(ExactLadder, MapsMatchHandFormulas) {
  for (int k = 0; k <= 5; ++k) {
    for (int i = 0; i <= k + 1; ++i)
      for (const auto& e : all_elements(k + 1))
        EXPECT_EQ(exact_coface(1, k, i, GammaBElement(1, k + 1, e)).element(), coface_by_hand(k, i, e))
            << k << ' ' << i << ' ' << e;
    for (int j = 0; j + 1 <= k; ++j)
      for (const auto& e : all_elements(k - 1))
        EXPECT_EQ(exact_codegeneracy(1, k, j, GammaBElement(1, k - 1, e)).element(),
                  codegeneracy_by_hand(k, j, e));
  }
}

TEST(ExactLadder, ChooseTwoPassesToLevelFive) {
  const auto cs = verify_cosimplicial_identities(make_exact_ladder(1, 5));
  EXPECT_TRUE(all_pass(cs));
  for (const auto& c : cs) EXPECT_GT(c.instances, 0u) << c.name;
}

TEST(ExactLadder, GammaTwoFacesAndDegeneraciesCompose) {
  const auto cs = verify_cosimplicial_identities(make_exact_ladder(2, 5));
  EXPECT_TRUE(named(cs, "cosimplicial.coface_coface").pass);
  EXPECT_TRUE(named(cs, "cosimplicial.codegeneracy_codegeneracy").pass);
  EXPECT_TRUE(named(cs, "cosimplicial.codegeneracy_coface_shift").pass);
  EXPECT_TRUE(named(cs, "cosimplicial.basepoint").pass);
}

// The unit composition drops pairs whose ones sit in different rows, so
// s^j d^j is not the identity for m = 2.
TEST(ExactLadder, GammaTwoDegeneracyAfterFaceLosesOffRowPairs) {
  const auto cs = verify_cosimplicial_identities(make_exact_ladder(2, 3));
  const auto& c = named(cs, "cosimplicial.codegeneracy_coface_identity");
  EXPECT_FALSE(c.pass);
  EXPECT_TRUE(c.witness.contains("identity"));
  const GammaBElement off = GammaBElement::pair(2, 1, 1, 2);
  EXPECT_TRUE(exact_coface(2, 1, 1, exact_codegeneracy(2, 2, 0, off)).is_basepoint());
}

TEST(ExactLadder, SwappedCofacesFail) {
  auto L = make_exact_ladder(1, 4);
  corrupt::swap_first_cofaces(L, 2);
  const auto cs = verify_cosimplicial_identities(L);
  EXPECT_FALSE(all_pass(cs));
  for (const auto& c : cs)
    if (!c.pass) EXPECT_TRUE(c.witness.contains("level")) << c.name;
}

TEST(ExactLadder, Preconditions) {
  EXPECT_THROW(make_exact_ladder(0, 2), std::invalid_argument);
  EXPECT_THROW(exact_coface(1, 2, 4, GammaBElement::basepoint(1, 3)), std::invalid_argument);
}

TEST(NumericLadder, InteriorCofacesDoubleRowBlocks) {
  for (int m = 1; m <= 2; ++m) {
    const auto L = make_numeric_ladder(m, 3, 4, 3, 5);
    for (int k = 1; k <= 2; ++k)
      for (const auto& f : L.corpus[static_cast<std::size_t>(k)])
        for (int i = 1; i <= k; ++i) EXPECT_EQ(numeric_coface(m, k, i, f), double_block_by_hand(f, m, k, i));
  }
}

TEST(NumericLadder, OuterCofacesAppendThePole) {
  const auto L = make_numeric_ladder(1, 2, 3, 2, 9);
  const auto& f = L.corpus[2][0];
  const SphereMap d0 = numeric_coface(1, 2, 0, f);
  const SphereMap d3 = numeric_coface(1, 2, 3, f);
  for (int q = 2; q <= 3; ++q) EXPECT_EQ(d0.stored(1, q), f.south_pole());
  EXPECT_EQ(d0.stored(2, 3), f.stored(1, 2));
  EXPECT_EQ(d3.stored(1, 2), f.stored(1, 2));
  EXPECT_EQ(d3.stored(1, 3), f.south_pole());
}

TEST(NumericLadder, GammaOnePassesWithZeroResidual) {
  const auto cs = verify_cosimplicial_identities(make_numeric_ladder(1, 3, 4, 20, 1));
  EXPECT_TRUE(all_pass(cs));
  for (const auto& c : cs)
    if (c.residual) EXPECT_EQ(*c.residual, 0.0) << c.name;
}

TEST(NumericLadder, GammaTwoKeepsComposites) {
  const auto cs = verify_cosimplicial_identities(make_numeric_ladder(2, 3, 4, 20, 1));
  EXPECT_TRUE(named(cs, "cosimplicial.coface_coface").pass);
  EXPECT_TRUE(named(cs, "cosimplicial.codegeneracy_codegeneracy").pass);
  EXPECT_TRUE(named(cs, "cosimplicial.codegeneracy_coface_shift").pass);
  EXPECT_FALSE(named(cs, "cosimplicial.codegeneracy_coface_identity").pass);
}

TEST(NumericLadder, SwappedCofacesFail) {
  auto L = make_numeric_ladder(1, 3, 3, 4, 2);
  corrupt::swap_first_cofaces(L, 2);
  EXPECT_FALSE(all_pass(verify_cosimplicial_identities(L)));
}

TEST(NumericLadder, ArityMismatchThrows) {
  EXPECT_THROW(numeric_coface(2, 2, 1, SphereMap(3, 3)), std::invalid_argument);
  EXPECT_THROW(numeric_codegeneracy(1, 2, 0, SphereMap(3, 3)), std::invalid_argument);
}

TEST(RealizedLadder, CommutesWithRealization) {
  for (int L = 1; L <= 4; ++L) EXPECT_TRUE(check_phi_ladder_commutes(FinitePointedSet(2), 1, L).pass) << L;
  EXPECT_TRUE(check_phi_ladder_commutes(FinitePointedSet(1), 1, 4).pass);
  EXPECT_TRUE(check_phi_ladder_commutes(FinitePointedSet(2), 2, 2).pass);
}

TEST(RealizedLadder, IdentitiesHoldForGammaOne) {
  EXPECT_TRUE(all_pass(verify_cosimplicial_identities(make_phi_ladder(FinitePointedSet(2), 1, 4))));
}
