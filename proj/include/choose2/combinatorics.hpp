#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace choose2 {

// A weak composition n = n_1 + ... + n_k (parts may be zero, k >= 1).
// All positions are 1-based: part(1) is n_1 and partial_sum(s) is the sum of
// the parts strictly before position s.
class Composition {
 public:
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
      throw std::invalid_argument("composition must have at least one part");
    prefix_.resize(parts_.size() + 1, 0);
    for (std::size_t s = 0; s < parts_.size(); ++s) {
      if (parts_[s] < 0)
        throw std::invalid_argument("composition parts must be nonnegative");
      prefix_[s + 1] = prefix_[s] + parts_[s];
    }
  }

  // (1, 1, ..., 1): the unit of the associative operad acting on arity k.
  static Composition ones(int k) {
    if (k < 1) throw std::invalid_argument("composition length must be >= 1");
    return Composition(std::vector<int>(static_cast<std::size_t>(k), 1));
  }

  int length() const { return static_cast<int>(parts_.size()); }
  int total() const { return prefix_.back(); }
  std::span<const int> parts() const { return parts_; }

  int part(int s) const {
    if (s < 1 || s > length()) throw std::invalid_argument("composition slot out of range");
    return parts_[static_cast<std::size_t>(s - 1)];
  }

  int partial_sum(int s) const {
    if (s < 1 || s > length() + 1)
      throw std::invalid_argument("partial_sum position " + std::to_string(s) +
                                  " outside [1, " + std::to_string(length() + 1) + "]");
    return prefix_[static_cast<std::size_t>(s - 1)];
  }

  // The block s with partial_sum(s) < i <= partial_sum(s + 1). Zero parts are
  // empty blocks and are never returned.
  int block_of(int i) const {
    if (i < 1 || i > total()) throw std::invalid_argument("index outside composition total");
    auto it = std::lower_bound(prefix_.begin(), prefix_.end(), i);
    return static_cast<int>(it - prefix_.begin());
  }

  int zero_parts() const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), 0));
  }

  friend bool operator==(const Composition& a, const Composition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator<(const Composition& a, const Composition& b) {
    return a.parts_ < b.parts_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Composition& c) {
    os << '(';
    for (std::size_t s = 0; s < c.parts_.size(); ++s) os << (s ? "," : "") << c.parts_[s];
    return os << ')';
  }

 private:
  std::vector<int> parts_;
  std::vector<int> prefix_;
};

namespace detail {

inline void compositions_rec(int remaining_parts, int remaining_total, int zeros_left,
                             std::vector<int>& prefix,
                             const std::function<void(const Composition&)>& fn) {
  if (remaining_parts == 1) {
    if (remaining_total == 0 && zeros_left == 0) return;
    prefix.push_back(remaining_total);
    fn(Composition(prefix));
    prefix.pop_back();
    return;
  }
  for (int first = 0; first <= remaining_total; ++first) {
    if (first == 0 && zeros_left == 0) continue;
    prefix.push_back(first);
    compositions_rec(remaining_parts - 1, remaining_total - first,
                     zeros_left - (first == 0 ? 1 : 0), prefix, fn);
    prefix.pop_back();
  }
}

}  // namespace detail

// Visits weak compositions of n into k parts with at most max_zero_parts zero
// parts, in lexicographic order. A negative max_zero_parts means unlimited.
inline void for_each_composition(int k, int n, int max_zero_parts,
                                 const std::function<void(const Composition&)>& fn) {
  if (k < 1) throw std::invalid_argument("composition length k must be >= 1");
  if (n < 0) throw std::invalid_argument("composition total n must be >= 0");
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(k));
  detail::compositions_rec(k, n, max_zero_parts < 0 ? k : max_zero_parts, prefix, fn);
}

inline std::vector<Composition> enumerate_compositions(int k, int n) {
  std::vector<Composition> out;
  for_each_composition(k, n, -1, [&](const Composition& c) { out.push_back(c); });
  return out;
}

inline int partial_sum(const Composition& c, int s) { return c.partial_sum(s); }

// Composite in the associative operad: inner has outer.total() parts, and the
// result has one part per block of outer, equal to the sum of the inner parts
// over that block. Acting by outer then by inner equals acting by the result.
inline Composition compose(const Composition& outer, const Composition& inner) {
  if (inner.length() != outer.total())
    throw std::invalid_argument("inner composition length must equal outer total");
  std::vector<int> parts(static_cast<std::size_t>(outer.length()), 0);
  for (int s = 1; s <= outer.length(); ++s)
    for (int t = outer.partial_sum(s) + 1; t <= outer.partial_sum(s + 1); ++t)
      parts[static_cast<std::size_t>(s - 1)] += inner.part(t);
  return Composition(std::move(parts));
}

// The parts of inner lying over block s of outer. Empty when that block is.
inline std::vector<int> restrict_to_block(const Composition& inner, const Composition& outer,
                                          int s) {
  std::vector<int> parts;
  for (int t = outer.partial_sum(s) + 1; t <= outer.partial_sum(s + 1); ++t)
    parts.push_back(inner.part(t));
  return parts;
}

// i = (a - 1) m + r with a >= 1 the block (column) and r in [1, m] the row.
struct IndexDecomposition {
  int i;
  int a;
  int r;

  friend bool operator==(const IndexDecomposition&, const IndexDecomposition&) = default;
};

inline IndexDecomposition decompose_index(int i, int m) {
  if (i < 1 || m < 1) throw std::invalid_argument("decompose_index needs i >= 1 and m >= 1");
  return {i, (i - 1) / m + 1, (i - 1) % m + 1};
}

inline int compose_index(int a, int r, int m) { return (a - 1) * m + r; }

inline std::size_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::size_t result = 1;
  for (int t = 1; t <= k; ++t)
    result = result * static_cast<std::size_t>(n - k + t) / static_cast<std::size_t>(t);
  return result;
}

}  // namespace choose2
