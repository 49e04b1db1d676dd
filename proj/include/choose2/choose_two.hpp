#pragma once

// The choose-two operad B in the opposite category of pointed sets.
//
// B(n) = {(i, j) | 1 <= i < j <= n} plus a disjoint basepoint; B(0) and B(1)
// hold only the basepoint. The operad multiplication and the bimodule
// structure over the associative operad are pointed-set maps out of B(n):
//
//   mu_{k,c}:     B(n) -> B(k) v B(n_1) v ... v B(n_k)
//   lambda_{k,c}: B(n) -> B(n_1) v ... v B(n_k)
//   rho_{k,c}:    B(n) -> B(k)
//
// A pair inside one block s of c goes to the block-local pair in slot s; a
// pair straddling blocks s < t goes to (s, t) in B(k). lambda and rho keep one
// of the two cases each and send the other to the basepoint.

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "choose2/combinatorics.hpp"

namespace choose2 {

class BElement {
 public:
  static BElement basepoint(int arity) {
    if (arity < 0) throw std::invalid_argument("arity must be nonnegative");
    return BElement(arity, 0, 0);
  }

  static BElement pair(int arity, int i, int j) {
    if (!(1 <= i && i < j && j <= arity))
      throw std::invalid_argument("pair (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") is not in B(" + std::to_string(arity) + ")");
    return BElement(arity, i, j);
  }

  int arity() const { return arity_; }
  bool is_basepoint() const { return i_ == 0; }
  int first() const { return i_; }
  int second() const { return j_; }

  // 0 for the basepoint, 1..C(n,2) for pairs in lexicographic order.
  std::size_t ordinal() const {
    if (is_basepoint()) return 0;
    const auto n = static_cast<std::size_t>(arity_);
    const auto i = static_cast<std::size_t>(i_);
    const auto j = static_cast<std::size_t>(j_);
    return (i - 1) * (2 * n - i) / 2 + (j - i - 1) + 1;
  }

  static BElement from_ordinal(int arity, std::size_t ordinal) {
    if (ordinal == 0) return basepoint(arity);
    std::size_t rank = ordinal - 1;
    for (int i = 1; i < arity; ++i) {
      const auto row = static_cast<std::size_t>(arity - i);
      if (rank < row) return pair(arity, i, i + 1 + static_cast<int>(rank));
      rank -= row;
    }
    throw std::invalid_argument("ordinal out of range for B(" + std::to_string(arity) + ")");
  }

  friend bool operator==(const BElement&, const BElement&) = default;

  friend std::ostream& operator<<(std::ostream& os, const BElement& e) {
    if (e.is_basepoint()) return os << "+";
    return os << '(' << e.i_ << ',' << e.j_ << ')';
  }

 private:
  BElement(int arity, int i, int j) : arity_(arity), i_(i), j_(j) {}

  int arity_;
  int i_;
  int j_;
};

// |B(n)| including the basepoint.
inline std::size_t element_count(int arity) { return 1 + binomial(arity, 2); }

inline std::vector<BElement> all_elements(int arity) {
  std::vector<BElement> out;
  out.reserve(element_count(arity));
  out.push_back(BElement::basepoint(arity));
  for (int i = 1; i <= arity; ++i)
    for (int j = i + 1; j <= arity; ++j) out.push_back(BElement::pair(arity, i, j));
  return out;
}

// Element of a wedge X_0 v X_1 v ... v X_k. Slot 0 is the leading factor (B(k)
// for mu), slot s >= 1 the s-th factor. All factor basepoints are one value.
class WedgeElement {
 public:
  static WedgeElement basepoint() { return WedgeElement(); }

  WedgeElement(int slot, BElement element) : slot_(slot), element_(element) {
    if (slot < 0) throw std::invalid_argument("wedge slot must be nonnegative");
    if (element_.is_basepoint()) *this = WedgeElement();
  }

  bool is_basepoint() const { return slot_ < 0; }
  int slot() const { return slot_; }
  const BElement& element() const { return element_; }

  friend bool operator==(const WedgeElement& a, const WedgeElement& b) {
    if (a.is_basepoint() || b.is_basepoint()) return a.is_basepoint() == b.is_basepoint();
    return a.slot_ == b.slot_ && a.element_ == b.element_;
  }

  friend std::ostream& operator<<(std::ostream& os, const WedgeElement& w) {
    if (w.is_basepoint()) return os << "+";
    return os << "slot " << w.slot_ << ':' << w.element_;
  }

 private:
  WedgeElement() : slot_(-1), element_(BElement::basepoint(0)) {}

  int slot_;
  BElement element_;
};

namespace detail {

inline void require_arity(const Composition& c, const BElement& e) {
  if (e.arity() != c.total())
    throw std::invalid_argument("element arity " + std::to_string(e.arity()) +
                                " does not match composition total " +
                                std::to_string(c.total()));
}

}  // namespace detail

inline WedgeElement mu(const Composition& c, const BElement& e) {
  detail::require_arity(c, e);
  if (e.is_basepoint()) return WedgeElement::basepoint();
  const int s = c.block_of(e.first());
  const int t = c.block_of(e.second());
  if (s == t) {
    const int offset = c.partial_sum(s);
    return {s, BElement::pair(c.part(s), e.first() - offset, e.second() - offset)};
  }
  return {0, BElement::pair(c.length(), s, t)};
}

inline WedgeElement lambda_action(const Composition& c, const BElement& e) {
  const WedgeElement w = mu(c, e);
  if (w.is_basepoint() || w.slot() == 0) return WedgeElement::basepoint();
  return w;
}

inline BElement rho_action(const Composition& c, const BElement& e) {
  const WedgeElement w = mu(c, e);
  if (w.is_basepoint() || w.slot() != 0) return BElement::basepoint(c.length());
  return w.element();
}

}  // namespace choose2
