#pragma once

// Deliberately broken structure maps. Each verifier must reject its
// corruption with a witness.

#include <functional>

#include "choose2/choose_two.hpp"
#include "choose2/cosimplicial.hpp"
#include "choose2/divided_powers.hpp"
#include "choose2/phi_functor.hpp"

namespace choose2::corrupt {

// rho^(m) with the output (1, 1+m) redirected to (1, 1+2m) when k >= 3.
inline GammaActions swapped_rho() {
  GammaActions a;
  a.rho = [](const Composition& c, int m, const GammaBElement& e) {
    GammaBElement out = rho_m(c, m, e);
    if (c.length() >= 3 && !out.is_basepoint() && out.element().first() == 1 &&
        out.element().second() == 1 + m)
      return GammaBElement::pair(m, c.length(), 1, 1 + 2 * m);
    return out;
  };
  return a;
}

// lambda^(m) that forgets to restrict to one row: a pair in one block but
// different rows still lands in its slot.
inline GammaActions row_blind_lambda() {
  GammaActions a;
  a.lambda = [](const Composition& c, int m, const GammaBElement& e) {
    if (e.is_basepoint()) return WedgeElement::basepoint();
    const auto di = decompose_index(e.element().first(), m);
    const auto dj = decompose_index(e.element().second(), m);
    const int s = c.block_of(di.a);
    if (di.r != dj.r && s == c.block_of(dj.a)) {
      const int off = c.partial_sum(s);
      const int i = compose_index(di.a - off, di.r, m);
      const int j = compose_index(dj.a - off, dj.r, m);
      if (i < j) return WedgeElement(s, BElement::pair(m * c.part(s), i, j));
    }
    return lambda_m(c, m, e);
  };
  return a;
}

// alpha_m sending the second index to the next row.
inline AlphaEmbedding row_mixing_alpha() {
  return [](int m, int r, const BElement& e) {
    if (e.is_basepoint()) return GammaBElement::basepoint(m, e.arity());
    const int r2 = r % m + 1;
    return GammaBElement::pair(m, e.arity(), compose_index(e.first(), r, m),
                               compose_index(e.second(), r2, m));
  };
}

// Both actions with the outputs (1, 1+m) and (1, 1+2m) exchanged whenever
// the target has at least three blocks. Relabels one edge of a triangle, so
// a Gauss triple loses its nonnegative dependence.
inline GammaActions transposed_pairs() {
  const auto swap = [](const BElement& e, int m) {
    if (e.is_basepoint() || e.arity() < 3 * m || e.first() != 1) return e;
    if (e.second() == 1 + m) return BElement::pair(e.arity(), 1, 1 + 2 * m);
    if (e.second() == 1 + 2 * m) return BElement::pair(e.arity(), 1, 1 + m);
    return e;
  };
  GammaActions a;
  a.rho = [swap](const Composition& c, int m, const GammaBElement& e) {
    const GammaBElement out = rho_m(c, m, e);
    return GammaBElement(m, c.length(), swap(out.element(), m));
  };
  a.lambda = [swap](const Composition& c, int m, const GammaBElement& e) {
    const WedgeElement out = lambda_m(c, m, e);
    if (out.is_basepoint()) return out;
    return WedgeElement(out.slot(), swap(out.element(), m));
  };
  return a;
}

// Right action that never takes the south-pole branch: basepoint outputs
// reuse the last non-basepoint pair seen.
inline GammaActions stale_rho() {
  GammaActions a;
  a.rho = [](const Composition& c, int m, const GammaBElement& e) {
    GammaBElement out = rho_m(c, m, e);
    if (out.is_basepoint() && c.length() * m >= 2) return GammaBElement::pair(m, c.length(), 1, 2);
    return out;
  };
  return a;
}

// Swaps two entries of the composition table of (1, 1) in arity 2.
inline void permute_table_entry(FinitePointedOperad& op) {
  const Composition c({1, 1});
  const auto& t = op.table(c);
  if (t.size() < 2) return;
  const ElementId a = t[0];
  const ElementId b = t[1];
  op.set_entry(c, 0, b);
  op.set_entry(c, 1, a);
}

// d^0 and d^1 exchanged at one level.
template <class T>
void swap_first_cofaces(CosimplicialLadder<T>& L, int level) {
  auto inner = L.coface;
  L.coface = [inner, level](int k, int i, const T& x) {
    if (k == level && (i == 0 || i == 1)) return inner(k, 1 - i, x);
    return inner(k, i, x);
  };
}

}  // namespace choose2::corrupt
