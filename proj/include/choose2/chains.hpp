#pragma once

// Straight 3-chains on a 4-element index set T = {t1 < t2 < t3 < t4}: the
// orderings of T up to reversal. A class is stored by the permutation sigma
// of {1,2,3,4} with sigma(1) < sigma(4); the chain visits t_sigma(1), ...,
// t_sigma(4).
//
// The dual chain reads the positions of sigma in the order (2,4,1,3), i.e.
// sigma*(j) = sigma(c(j)) with c the cycle 1 -> 2 -> 4 -> 3 -> 1. Its three
// edges are exactly the three edges of K4 missing from the chain's path.

#include <algorithm>
#include <array>
#include <cctype>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace choose2 {

class Permutation4 {
 public:
  Permutation4() : p_{1, 2, 3, 4} {}

  explicit Permutation4(std::array<int, 4> one_line) : p_(one_line) {
    std::array<int, 4> sorted = p_;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 4>{1, 2, 3, 4})
      throw std::invalid_argument("not a permutation of {1,2,3,4}");
  }

  // Cycle notation such as "(1243)", "(12)(34)" or "id".
  static Permutation4 from_cycles(const std::string& text) {
    std::array<int, 4> p{1, 2, 3, 4};
    if (text == "id" || text == "()") return Permutation4(p);
    std::vector<int> cycle;
    std::set<int> seen;
    bool open = false;
    for (char ch : text) {
      if (ch == '(') {
        if (open) throw std::invalid_argument("nested cycle in " + text);
        open = true;
        cycle.clear();
      } else if (ch == ')') {
        if (!open) throw std::invalid_argument("unbalanced cycle in " + text);
        open = false;
        for (std::size_t q = 0; q < cycle.size(); ++q)
          p[static_cast<std::size_t>(cycle[q] - 1)] = cycle[(q + 1) % cycle.size()];
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        const int v = ch - '0';
        if (!open || v < 1 || v > 4 || !seen.insert(v).second)
          throw std::invalid_argument("bad cycle notation " + text);
        cycle.push_back(v);
      } else if (ch != ' ') {
        throw std::invalid_argument("bad cycle notation " + text);
      }
    }
    if (open) throw std::invalid_argument("unbalanced cycle in " + text);
    return Permutation4(p);
  }

  int operator()(int j) const {
    if (j < 1 || j > 4) throw std::invalid_argument("permutation argument outside 1..4");
    return p_[static_cast<std::size_t>(j - 1)];
  }

  const std::array<int, 4>& one_line() const { return p_; }

  // (a * b)(j) = a(b(j)).
  friend Permutation4 operator*(const Permutation4& a, const Permutation4& b) {
    std::array<int, 4> out{};
    for (int j = 1; j <= 4; ++j) out[static_cast<std::size_t>(j - 1)] = a(b(j));
    return Permutation4(out);
  }

  int sign() const {
    int inversions = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        if (p_[static_cast<std::size_t>(a)] > p_[static_cast<std::size_t>(b)]) ++inversions;
    return inversions % 2 ? -1 : 1;
  }

  Permutation4 reversed() const { return Permutation4({p_[3], p_[2], p_[1], p_[0]}); }

  Permutation4 canonical() const { return p_[0] < p_[3] ? *this : reversed(); }

  friend bool operator==(const Permutation4&, const Permutation4&) = default;
  friend bool operator<(const Permutation4& a, const Permutation4& b) { return a.p_ < b.p_; }

  friend std::ostream& operator<<(std::ostream& os, const Permutation4& p) {
    return os << '[' << p.p_[0] << p.p_[1] << p.p_[2] << p.p_[3] << ']';
  }

 private:
  std::array<int, 4> p_;
};

inline const Permutation4& dual_cycle() {
  static const Permutation4 c = Permutation4::from_cycles("(1243)");
  return c;
}

// sigma* before canonicalization.
inline Permutation4 dual_permutation(const Permutation4& sigma) { return sigma * dual_cycle(); }

using Edge = std::pair<int, int>;

struct Chain3Class {
  std::array<int, 4> T;
  Permutation4 rep;

  int parity() const { return rep.sign(); }

  // The chain as a sequence of elements of T.
  std::array<int, 4> sequence() const {
    std::array<int, 4> out{};
    for (int j = 1; j <= 4; ++j)
      out[static_cast<std::size_t>(j - 1)] = T[static_cast<std::size_t>(rep(j) - 1)];
    return out;
  }

  friend bool operator==(const Chain3Class& a, const Chain3Class& b) {
    return a.T == b.T && a.rep == b.rep;
  }
};

namespace detail {

inline std::array<int, 4> checked_four_set(const std::vector<int>& T) {
  if (T.size() != 4) throw std::invalid_argument("a straight 3-chain needs exactly 4 indices");
  std::array<int, 4> out{T[0], T[1], T[2], T[3]};
  std::sort(out.begin(), out.end());
  for (int a = 0; a < 3; ++a)
    if (out[static_cast<std::size_t>(a)] == out[static_cast<std::size_t>(a + 1)])
      throw std::invalid_argument("chain indices must be distinct");
  return out;
}

}  // namespace detail

inline Chain3Class make_chain(const std::vector<int>& T, const Permutation4& sigma) {
  return {detail::checked_four_set(T), sigma.canonical()};
}

// The 12 classes, ordered by canonical representative.
inline std::vector<Chain3Class> enumerate_chains(const std::vector<int>& T) {
  const auto t = detail::checked_four_set(T);
  std::set<Permutation4> reps;
  std::array<int, 4> p{1, 2, 3, 4};
  do {
    reps.insert(Permutation4(p).canonical());
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<Chain3Class> out;
  for (const auto& r : reps) out.push_back({t, r});
  return out;
}

inline Chain3Class dual(const Chain3Class& ch) {
  return {ch.T, dual_permutation(ch.rep).canonical()};
}

inline std::set<Edge> edges(const Chain3Class& ch) {
  const auto s = ch.sequence();
  std::set<Edge> out;
  for (std::size_t j = 0; j < 3; ++j)
    out.insert({std::min(s[j], s[j + 1]), std::max(s[j], s[j + 1])});
  return out;
}

}  // namespace choose2
