#include <gtest/gtest.h>

#include "choose2/choose_two.hpp"

using namespace choose2;

namespace {

// Direct case split: which blocks hold i and j, found by walking the parts.
struct Located {
  int block;
  int local;
};

Located locate(const Composition& c, int i) {
  int acc = 0;
  for (int s = 1; s <= c.length(); ++s) {
    if (i <= acc + c.part(s)) return {s, i - acc};
    acc += c.part(s);
  }
  throw std::logic_error("index past total");
}

WedgeElement mu_oracle(const Composition& c, const BElement& e) {
  if (e.is_basepoint()) return WedgeElement::basepoint();
  const auto a = locate(c, e.first());
  const auto b = locate(c, e.second());
  if (a.block == b.block) return {a.block, BElement::pair(c.part(a.block), a.local, b.local)};
  return {0, BElement::pair(c.length(), a.block, b.block)};
}

template <class Fn>
void for_small_cases(Fn fn) {
  for (int k = 1; k <= 5; ++k)
    for (int n = 0; n <= 10 - k; ++n)
      for_each_composition(k, n, -1, [&](const Composition& c) {
        for (const auto& e : all_elements(n)) fn(c, e);
      });
}

}  // namespace

TEST(BElement, OrdinalRoundTrip) {
  for (int n = 0; n <= 9; ++n) {
    const auto elems = all_elements(n);
    ASSERT_EQ(elems.size(), element_count(n));
    for (std::size_t p = 0; p < elems.size(); ++p) {
      EXPECT_EQ(elems[p].ordinal(), p);
      EXPECT_EQ(BElement::from_ordinal(n, p), elems[p]);
    }
  }
  EXPECT_THROW(BElement::pair(3, 2, 2), std::invalid_argument);
  EXPECT_THROW(BElement::pair(3, 1, 4), std::invalid_argument);
}

TEST(Mu, Examples) {
  const Composition c({2, 2});
  EXPECT_EQ(mu(c, BElement::pair(4, 1, 3)), WedgeElement(0, BElement::pair(2, 1, 2)));
  EXPECT_EQ(mu(c, BElement::pair(4, 1, 2)), WedgeElement(1, BElement::pair(2, 1, 2)));
  EXPECT_TRUE(mu(c, BElement::basepoint(4)).is_basepoint());
  EXPECT_THROW(mu(c, BElement::pair(5, 1, 2)), std::invalid_argument);
}

TEST(Lambda, Examples) {
  const Composition c({2, 2});
  EXPECT_EQ(lambda_action(c, BElement::pair(4, 1, 2)), WedgeElement(1, BElement::pair(2, 1, 2)));
  EXPECT_TRUE(lambda_action(c, BElement::pair(4, 1, 3)).is_basepoint());
  EXPECT_EQ(lambda_action(Composition({3}), BElement::pair(3, 1, 3)),
            WedgeElement(1, BElement::pair(3, 1, 3)));
  EXPECT_THROW(lambda_action(c, BElement::pair(3, 1, 2)), std::invalid_argument);
}

TEST(Rho, Examples) {
  const Composition c({2, 2});
  EXPECT_EQ(rho_action(c, BElement::pair(4, 1, 3)), BElement::pair(2, 1, 2));
  EXPECT_TRUE(rho_action(c, BElement::pair(4, 3, 4)).is_basepoint());
  for (int n = 2; n <= 6; ++n)
    for (const auto& e : all_elements(n)) EXPECT_EQ(rho_action(Composition::ones(n), e), e);
  EXPECT_THROW(rho_action(c, BElement::pair(6, 1, 2)), std::invalid_argument);
}

TEST(Mu, MatchesDirectCaseSplit) {
  for_small_cases([](const Composition& c, const BElement& e) {
    EXPECT_EQ(mu(c, e), mu_oracle(c, e)) << c << ' ' << e;
  });
}

TEST(StructureMaps, Pointed) {
  for_small_cases([](const Composition& c, const BElement& e) {
    if (!e.is_basepoint()) return;
    EXPECT_TRUE(mu(c, e).is_basepoint());
    EXPECT_TRUE(lambda_action(c, e).is_basepoint());
    EXPECT_TRUE(rho_action(c, e).is_basepoint());
  });
}

TEST(StructureMaps, LambdaRhoProjectMu) {
  for_small_cases([](const Composition& c, const BElement& e) {
    const WedgeElement w = mu(c, e);
    const WedgeElement l = lambda_action(c, e);
    const BElement r = rho_action(c, e);
    if (w.is_basepoint()) {
      EXPECT_TRUE(l.is_basepoint());
      EXPECT_TRUE(r.is_basepoint());
    } else if (w.slot() == 0) {
      EXPECT_TRUE(l.is_basepoint());
      EXPECT_EQ(r, w.element());
    } else {
      EXPECT_EQ(l, w);
      EXPECT_TRUE(r.is_basepoint());
      EXPECT_GT(c.part(w.slot()), 1);
    }
    EXPECT_EQ(r.arity(), c.length());
  });
}

TEST(StructureMaps, BlockCountSanity) {
  for (int n = 0; n <= 8; ++n)
    for (const auto& e : all_elements(n)) {
      EXPECT_TRUE(rho_action(Composition({n}), e).is_basepoint());
      if (n >= 1) {
        EXPECT_TRUE(lambda_action(Composition::ones(n), e).is_basepoint());
        EXPECT_EQ(rho_action(Composition::ones(n), e), e);
      }
    }
}

TEST(StructureMaps, ZeroPartsAreNeverHit) {
  for_small_cases([](const Composition& c, const BElement& e) {
    const WedgeElement w = mu(c, e);
    if (!w.is_basepoint() && w.slot() > 0) EXPECT_GT(c.part(w.slot()), 0);
    const BElement r = rho_action(c, e);
    if (!r.is_basepoint()) {
      EXPECT_GT(c.part(r.first()), 0);
      EXPECT_GT(c.part(r.second()), 0);
    }
  });
}

TEST(Wedge, SingleBasepoint) {
  EXPECT_EQ(WedgeElement::basepoint(), WedgeElement(2, BElement::basepoint(3)));
  EXPECT_FALSE(WedgeElement(1, BElement::pair(2, 1, 2)) == WedgeElement(2, BElement::pair(2, 1, 2)));
}
