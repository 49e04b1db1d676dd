#pragma once

// Realizations Phi_X for a finite pointed set X = {0 (basepoint), 1, ..., |X|-1}.
//
// Phi_X(B)(k) is the set of pointed maps B(k) -> X. A pointed map is stored
// as an integer whose base-|X| digit p-1 is the value on the pair with
// ordinal p; the basepoint value is implicit. Composition in Phi_X(B) is
// precomposition with mu, and the actions on Phi_X(gamma_m B) are
// precomposition with rho^(m) and lambda^(m).

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "choose2/choose_two.hpp"
#include "choose2/combinatorics.hpp"
#include "choose2/divided_powers.hpp"
#include "choose2/errors.hpp"
#include "choose2/json_io.hpp"
#include "choose2/report.hpp"

namespace choose2 {

using ElementId = std::uint32_t;

class FinitePointedSet {
 public:
  explicit FinitePointedSet(int size) : size_(size) {
    if (size < 1) throw std::invalid_argument("a pointed set has at least its basepoint");
  }
  int size() const { return size_; }
  static constexpr int basepoint = 0;

 private:
  int size_;
};

// Integer codes for pointed maps B(arity) -> X.
class PointedMapCodec {
 public:
  static constexpr std::uint64_t kMaxCount = std::uint64_t{1} << 32;

  PointedMapCodec(int x_size, int arity) : x_(x_size), pairs_(binomial(arity, 2)) {
    if (x_size < 1) throw std::invalid_argument("pointed set size must be >= 1");
    powers_.push_back(1);
    for (std::size_t p = 0; p < pairs_; ++p) {
      if (x_ > 1 && powers_.back() > kMaxCount / static_cast<std::uint64_t>(x_))
        throw resource_limit_error("pointed maps B(" + std::to_string(arity) + ") -> X",
                                   kMaxCount);
      powers_.push_back(powers_.back() * static_cast<std::uint64_t>(x_));
    }
  }

  std::uint64_t count() const { return powers_.back(); }
  std::size_t pairs() const { return pairs_; }

  // Value on the element with the given ordinal (0 is the basepoint).
  int value(std::uint64_t id, std::size_t ordinal) const {
    if (ordinal == 0) return FinitePointedSet::basepoint;
    return static_cast<int>((id / powers_[ordinal - 1]) % static_cast<std::uint64_t>(x_));
  }

  std::uint64_t weight(std::size_t ordinal) const { return powers_[ordinal - 1]; }

  std::uint64_t encode(const std::vector<int>& values) const {
    if (values.size() != pairs_) throw std::invalid_argument("one value per pair expected");
    std::uint64_t id = 0;
    for (std::size_t p = 0; p < pairs_; ++p) {
      if (values[p] < 0 || values[p] >= x_) throw std::invalid_argument("value outside X");
      id += static_cast<std::uint64_t>(values[p]) * powers_[p];
    }
    return id;
  }

  std::vector<int> decode(std::uint64_t id) const {
    if (id >= count()) throw std::invalid_argument("map code out of range");
    std::vector<int> out(pairs_);
    for (std::size_t p = 0; p < pairs_; ++p) out[p] = value(id, p + 1);
    return out;
  }

 private:
  int x_;
  std::size_t pairs_;
  std::vector<std::uint64_t> powers_;
};

namespace detail {

// Odometer over a mixed-radix tuple, first digit fastest.
struct MixedRadix {
  std::vector<std::size_t> radices;
  std::vector<ElementId> digits;

  explicit MixedRadix(std::vector<std::size_t> r) : radices(std::move(r)), digits(radices.size(), 0) {}

  std::size_t count() const {
    std::size_t n = 1;
    for (auto r : radices) n *= r;
    return n;
  }

  bool next() {
    for (std::size_t p = 0; p < digits.size(); ++p) {
      if (++digits[p] < radices[p]) return true;
      digits[p] = 0;
    }
    return false;
  }
};

inline std::size_t mixed_index(std::span<const ElementId> digits,
                               std::span<const std::size_t> radices) {
  std::size_t idx = 0;
  for (std::size_t p = digits.size(); p-- > 0;) idx = idx * radices[p] + digits[p];
  return idx;
}

inline std::vector<int> key_of(const Composition& c) {
  return {c.parts().begin(), c.parts().end()};
}

}  // namespace detail

// A nonsymmetric operad in finite pointed sets, truncated at max_arity, with
// dense composition tables for every composition of k <= max_arity inputs
// into total arity <= max_arity. Element 0 of each arity is the basepoint.
class FinitePointedOperad {
 public:
  FinitePointedOperad(std::vector<std::size_t> sizes, ElementId unit)
      : sizes_(std::move(sizes)), unit_(unit) {
    if (sizes_.size() < 2) throw std::invalid_argument("operad needs arities 0 and 1");
    for (auto s : sizes_)
      if (s < 1) throw std::invalid_argument("arity spaces are pointed, hence nonempty");
    if (unit_ >= sizes_[1]) throw std::invalid_argument("unit outside arity 1");
  }

  int max_arity() const { return static_cast<int>(sizes_.size()) - 1; }
  ElementId unit() const { return unit_; }

  std::size_t size(int k) const {
    if (k < 0 || k > max_arity()) throw std::invalid_argument("arity outside stored range");
    return sizes_[static_cast<std::size_t>(k)];
  }

  std::vector<std::size_t> radices(const Composition& c) const {
    std::vector<std::size_t> r{size(c.length())};
    for (int n : c.parts()) r.push_back(size(n));
    return r;
  }

  bool has_table(const Composition& c) const { return tables_.count(detail::key_of(c)) > 0; }

  const std::vector<ElementId>& table(const Composition& c) const {
    auto it = tables_.find(detail::key_of(c));
    if (it == tables_.end()) {
      std::ostringstream os;
      os << "no composition table for " << c;
      throw std::invalid_argument(os.str());
    }
    return it->second;
  }

  void set_table(const Composition& c, std::vector<ElementId> entries) {
    detail::MixedRadix shape(radices(c));
    if (entries.size() != shape.count())
      throw std::invalid_argument("composition table has the wrong size");
    for (auto v : entries)
      if (v >= size(c.total())) throw std::invalid_argument("table entry outside target arity");
    tables_[detail::key_of(c)] = std::move(entries);
  }

  void set_entry(const Composition& c, std::size_t index, ElementId value) {
    auto it = tables_.find(detail::key_of(c));
    if (it == tables_.end() || index >= it->second.size())
      throw std::invalid_argument("no such table entry");
    if (value >= size(c.total())) throw std::invalid_argument("value outside target arity");
    it->second[index] = value;
  }

  // gamma(g; gs[0], ..., gs[k-1]).
  ElementId compose(const Composition& c, ElementId g, std::span<const ElementId> gs) const {
    if (gs.size() != static_cast<std::size_t>(c.length()))
      throw std::invalid_argument("one input per composition part expected");
    std::vector<ElementId> digits{g};
    digits.insert(digits.end(), gs.begin(), gs.end());
    const auto r = radices(c);
    for (std::size_t p = 0; p < digits.size(); ++p)
      if (digits[p] >= r[p]) throw std::invalid_argument("element id outside its arity");
    return table(c)[detail::mixed_index(digits, r)];
  }

 private:
  std::vector<std::size_t> sizes_;
  ElementId unit_;
  std::map<std::vector<int>, std::vector<ElementId>> tables_;
};

namespace detail {

inline std::vector<std::size_t> phi_sizes(const FinitePointedSet& X, int max_arity,
                                          int rows, Budget& budget) {
  std::vector<std::size_t> sizes;
  for (int k = 0; k <= max_arity; ++k) {
    const PointedMapCodec codec(X.size(), rows * k);
    if (codec.count() > budget.limit())
      throw resource_limit_error("arity " + std::to_string(k) + " space has " +
                                     std::to_string(codec.count()) + " elements",
                                 budget.limit());
    sizes.push_back(static_cast<std::size_t>(codec.count()));
  }
  return sizes;
}

// For each ordinal p of the source, the (slot, ordinal) it is read from;
// slot -1 means the basepoint.
using Pullback = std::vector<std::pair<int, std::size_t>>;

// Fills a dense table whose digit t supplies the pointed map read at slot t.
inline std::vector<ElementId> fill_pullback_table(const std::vector<std::size_t>& radices,
                                                  const std::vector<PointedMapCodec>& codecs,
                                                  const PointedMapCodec& target,
                                                  const Pullback& pull, Budget& budget) {
  MixedRadix odo(radices);
  std::vector<ElementId> out;
  out.reserve(odo.count());
  budget.spend(odo.count());
  do {
    std::uint64_t id = 0;
    for (std::size_t p = 1; p < pull.size(); ++p) {
      const auto [slot, ord] = pull[p];
      if (slot < 0) continue;
      const auto s = static_cast<std::size_t>(slot);
      id += static_cast<std::uint64_t>(codecs[s].value(odo.digits[s], ord)) * target.weight(p);
    }
    out.push_back(static_cast<ElementId>(id));
  } while (odo.next());
  return out;
}

}  // namespace detail

// Phi_X(B) truncated at max_arity. The budget bounds the total number of
// table entries built.
inline FinitePointedOperad realize_operad(const FinitePointedSet& X, int max_arity,
                                          Budget budget = Budget()) {
  if (max_arity < 1) throw std::invalid_argument("max arity must be >= 1");
  FinitePointedOperad op(detail::phi_sizes(X, max_arity, 1, budget), 0);
  for (int k = 1; k <= max_arity; ++k) {
    for (int n = 0; n <= max_arity; ++n) {
      for_each_composition(k, n, -1, [&](const Composition& c) {
        std::vector<PointedMapCodec> codecs{PointedMapCodec(X.size(), k)};
        for (int part : c.parts()) codecs.emplace_back(X.size(), part);
        detail::Pullback pull{{-1, 0}};
        for (const auto& e : all_elements(n)) {
          if (e.is_basepoint()) continue;
          const WedgeElement w = mu(c, e);
          pull.emplace_back(w.slot(), w.element().ordinal());
        }
        op.set_table(c, detail::fill_pullback_table(op.radices(c), codecs,
                                                    PointedMapCodec(X.size(), n), pull,
                                                    budget));
      });
    }
  }
  return op;
}

// Exhaustive associativity and unit laws over all tuples whose arities,
// including intermediate ones, stay within max_arity.
inline std::vector<CheckResult> verify_operad_axioms(const FinitePointedOperad& op,
                                                     int max_arity, Budget budget = Budget()) {
  if (max_arity > op.max_arity())
    throw std::invalid_argument("verification bound exceeds stored arities");
  CheckResult assoc{"operad.associativity"};
  CheckResult left{"operad.left_unit"};
  CheckResult right{"operad.right_unit"};
  const ElementId u = op.unit();

  for (int n = 0; n <= max_arity; ++n) {
    const Composition single({n});
    const auto& t = op.table(single);
    for (ElementId g = 0; g < op.size(n); ++g) {
      budget.spend();
      ++left.instances;
      const ElementId got = t[u + op.size(1) * g];
      if (got != g) left.fail({{"arity", n}, {"element", g}, {"composite", got}});
    }
  }
  for (int k = 1; k <= max_arity; ++k) {
    const Composition ones = Composition::ones(k);
    const auto r = op.radices(ones);
    std::vector<ElementId> digits(static_cast<std::size_t>(k) + 1, u);
    for (ElementId g = 0; g < op.size(k); ++g) {
      budget.spend();
      ++right.instances;
      digits[0] = g;
      const ElementId got = op.table(ones)[detail::mixed_index(digits, r)];
      if (got != g) right.fail({{"arity", k}, {"element", g}, {"composite", got}});
    }
  }

  for (int k = 1; k <= max_arity; ++k) {
    for (int n = 1; n <= max_arity; ++n) {
      for_each_composition(k, n, -1, [&](const Composition& c) {
        const auto& tc = op.table(c);
        const auto rc = op.radices(c);
        for (int l = 0; l <= max_arity; ++l) {
          for_each_composition(n, l, -1, [&](const Composition& d) {
            const auto& td = op.table(d);
            const auto rd = op.radices(d);
            const Composition e = compose(c, d);
            const auto& te = op.table(e);
            const auto re = op.radices(e);
            std::vector<const std::vector<ElementId>*> tds(static_cast<std::size_t>(k), nullptr);
            std::vector<std::vector<std::size_t>> rds(static_cast<std::size_t>(k));
            for (int s = 1; s <= k; ++s) {
              const auto sub = restrict_to_block(d, c, s);
              if (sub.empty()) continue;
              const Composition ds(sub);
              tds[static_cast<std::size_t>(s - 1)] = &op.table(ds);
              rds[static_cast<std::size_t>(s - 1)] = op.radices(ds);
            }

            detail::MixedRadix outer(rc);
            std::vector<std::size_t> hr(rd.begin() + 1, rd.end());
            detail::MixedRadix hs(hr);
            budget.spend(outer.count() * hs.count());
            std::vector<ElementId> dd(static_cast<std::size_t>(n) + 1);
            std::vector<ElementId> ed(static_cast<std::size_t>(k) + 1);
            std::vector<ElementId> sd;
            do {
              const ElementId x = tc[detail::mixed_index(outer.digits, rc)];
              hs = detail::MixedRadix(hr);
              do {
                ++assoc.instances;
                dd[0] = x;
                std::copy(hs.digits.begin(), hs.digits.end(), dd.begin() + 1);
                const ElementId lhs = td[detail::mixed_index(dd, rd)];

                ed[0] = outer.digits[0];
                for (int s = 1; s <= k; ++s) {
                  const auto su = static_cast<std::size_t>(s);
                  const ElementId gs = outer.digits[su];
                  if (!tds[su - 1]) {
                    ed[su] = gs;
                    continue;
                  }
                  sd.assign(1, gs);
                  for (int t = c.partial_sum(s) + 1; t <= c.partial_sum(s + 1); ++t)
                    sd.push_back(hs.digits[static_cast<std::size_t>(t - 1)]);
                  ed[su] = (*tds[su - 1])[detail::mixed_index(sd, rds[su - 1])];
                }
                const ElementId rhs = te[detail::mixed_index(ed, re)];
                if (lhs != rhs)
                  assoc.fail({{"outer", to_json(c)}, {"inner", to_json(d)},
                              {"outer_elements", outer.digits}, {"inner_elements", hs.digits},
                              {"iterated_first", lhs}, {"nested_first", rhs}});
              } while (hs.next());
            } while (outer.next());
          });
        }
      });
    }
  }
  return {assoc, left, right};
}

// Phi_X(gamma_m B) with its right and left actions of the associative operad,
// for block counts up to max_blocks. right(c, f) = f o rho^(m)_c; left(c, fs)
// evaluates f_s on the slot-s output of lambda^(m)_c.
class FiniteBimodule {
 public:
  FiniteBimodule(int rows, std::vector<std::size_t> sizes) : m_(rows), sizes_(std::move(sizes)) {}

  int rows() const { return m_; }
  int max_blocks() const { return static_cast<int>(sizes_.size()) - 1; }
  std::size_t size(int k) const { return sizes_.at(static_cast<std::size_t>(k)); }

  ElementId right(const Composition& c, ElementId f) const {
    return right_.at(detail::key_of(c)).at(f);
  }

  ElementId left(const Composition& c, std::span<const ElementId> fs) const {
    std::vector<std::size_t> r;
    for (int n : c.parts()) r.push_back(size(n));
    return left_.at(detail::key_of(c)).at(detail::mixed_index(fs, r));
  }

  const std::vector<ElementId>& right_table(const Composition& c) const {
    return right_.at(detail::key_of(c));
  }
  const std::vector<ElementId>& left_table(const Composition& c) const {
    return left_.at(detail::key_of(c));
  }

  void set_right_table(const Composition& c, std::vector<ElementId> t) {
    right_[detail::key_of(c)] = std::move(t);
  }
  void set_left_table(const Composition& c, std::vector<ElementId> t) {
    left_[detail::key_of(c)] = std::move(t);
  }

 private:
  int m_;
  std::vector<std::size_t> sizes_;
  std::map<std::vector<int>, std::vector<ElementId>> right_;
  std::map<std::vector<int>, std::vector<ElementId>> left_;
};

inline FiniteBimodule realize_bimodule(const FinitePointedSet& X, int m, int max_blocks,
                                       const GammaActions& actions = {},
                                       Budget budget = Budget()) {
  if (m < 1) throw std::invalid_argument("row count m must be >= 1");
  if (max_blocks < 1) throw std::invalid_argument("max arity must be >= 1");
  FiniteBimodule bm(m, detail::phi_sizes(X, max_blocks, m, budget));
  for (int k = 1; k <= max_blocks; ++k) {
    for (int n = 0; n <= max_blocks; ++n) {
      for_each_composition(k, n, -1, [&](const Composition& c) {
        const PointedMapCodec target(X.size(), m * n);
        detail::Pullback right_pull{{-1, 0}};
        detail::Pullback left_pull{{-1, 0}};
        for (const auto& e : all_elements(m * n)) {
          if (e.is_basepoint()) continue;
          const GammaBElement ge(m, n, e);
          const auto r = actions.rho(c, m, ge);
          right_pull.emplace_back(r.is_basepoint() ? -1 : 0, r.element().ordinal());
          const auto l = actions.lambda(c, m, ge);
          if (l.is_basepoint())
            left_pull.emplace_back(-1, 0);
          else
            left_pull.emplace_back(l.slot() - 1, l.element().ordinal());
        }
        bm.set_right_table(c, detail::fill_pullback_table(
                                  {bm.size(k)}, {PointedMapCodec(X.size(), m * k)}, target,
                                  right_pull, budget));
        std::vector<std::size_t> radices;
        std::vector<PointedMapCodec> codecs;
        for (int part : c.parts()) {
          radices.push_back(bm.size(part));
          codecs.emplace_back(X.size(), m * part);
        }
        bm.set_left_table(c, detail::fill_pullback_table(radices, codecs, target, left_pull,
                                                         budget));
      });
    }
  }
  return bm;
}

// Phi_X(gamma_m B)(k) and gamma_m Phi_X(B)(k) are both the pointed maps
// B(mk) -> X; checks that the two realizations enumerate the same maps.
inline CheckResult check_phi_gamma_commute(const FinitePointedSet& X, int m, int k) {
  CheckResult res{"phi.gamma_commute"};
  const FinitePointedOperad op = realize_operad(X, m * k);
  const FiniteBimodule bm = realize_bimodule(X, m, k);
  const PointedMapCodec codec(X.size(), m * k);
  res.instances = bm.size(k);
  if (bm.size(k) != op.size(m * k) || bm.size(k) != codec.count()) {
    res.fail({{"m", m}, {"k", k}, {"gamma_of_phi", op.size(m * k)},
              {"phi_of_gamma", bm.size(k)}});
    return res;
  }
  return res;
}

// The operad map P -> Phi_X(B) transposed from a pointed map g: P(2) -> X.
struct PointMapExtension {
  int x_size = 1;
  std::vector<ElementId> g;
  std::vector<std::vector<ElementId>> components;  // by arity
};

inline PointMapExtension extend_point_map(const FinitePointedOperad& P, const FinitePointedSet& X,
                                          const std::vector<int>& g) {
  if (P.max_arity() < 2) throw precondition_violation("operad must reach arity 2");
  if (P.size(0) != 1 || P.size(1) != 1)
    throw precondition_violation("arities 0 and 1 must be singletons");
  if (g.size() != P.size(2))
    throw precondition_violation("point map must be defined on all of arity 2");
  if (g[0] != FinitePointedSet::basepoint)
    throw precondition_violation("point map must send the basepoint to the basepoint");
  for (int v : g)
    if (v < 0 || v >= X.size()) throw precondition_violation("point map value outside X");

  PointMapExtension ext;
  ext.x_size = X.size();
  ext.g.assign(g.begin(), g.end());
  for (int n = 0; n <= P.max_arity(); ++n) {
    const PointedMapCodec codec(X.size(), n);
    std::vector<ElementId> comp;
    comp.reserve(P.size(n));
    const std::vector<ElementId> nullary_and_units(static_cast<std::size_t>(n), 0);
    for (ElementId p = 0; p < P.size(n); ++p) {
      std::vector<int> values;
      for (const auto& e : all_elements(n)) {
        if (e.is_basepoint()) continue;
        std::vector<int> parts(static_cast<std::size_t>(n), 0);
        parts[static_cast<std::size_t>(e.first() - 1)] = 1;
        parts[static_cast<std::size_t>(e.second() - 1)] = 1;
        // Units in arity 1 and the nullary element are both id 0.
        values.push_back(g[P.compose(Composition(parts), p, nullary_and_units)]);
      }
      comp.push_back(static_cast<ElementId>(codec.encode(values)));
    }
    ext.components.push_back(std::move(comp));
  }
  return ext;
}

inline std::vector<CheckResult> verify_extension(const FinitePointedOperad& P,
                                                 const FinitePointedOperad& phi,
                                                 const PointMapExtension& ext,
                                                 Budget budget = Budget()) {
  CheckResult mult{"extension.multiplicative"};
  CheckResult restrict{"extension.restricts_to_point_map"};
  const int N = std::min(P.max_arity(), phi.max_arity());

  const PointedMapCodec codec2(ext.x_size, 2);
  for (ElementId p = 0; p < P.size(2); ++p) {
    ++restrict.instances;
    const int got = codec2.value(ext.components[2][p], 1);
    if (got != static_cast<int>(ext.g[p]))
      restrict.fail({{"element", p}, {"expected", ext.g[p]}, {"got", got}});
  }

  for (int k = 1; k <= N; ++k) {
    for (int n = 0; n <= N; ++n) {
      for_each_composition(k, n, -1, [&](const Composition& c) {
        const auto rc = P.radices(c);
        const auto rphi = phi.radices(c);
        const auto& tp = P.table(c);
        const auto& tphi = phi.table(c);
        detail::MixedRadix odo(rc);
        budget.spend(odo.count());
        std::vector<ElementId> mapped(rc.size());
        do {
          ++mult.instances;
          const ElementId image =
              ext.components[static_cast<std::size_t>(n)][tp[detail::mixed_index(odo.digits, rc)]];
          mapped[0] = ext.components[static_cast<std::size_t>(k)][odo.digits[0]];
          for (int s = 1; s <= k; ++s)
            mapped[static_cast<std::size_t>(s)] =
                ext.components[static_cast<std::size_t>(c.part(s))][odo.digits[static_cast<std::size_t>(s)]];
          const ElementId composite = tphi[detail::mixed_index(mapped, rphi)];
          if (image != composite)
            mult.fail({{"composition", to_json(c)}, {"elements", odo.digits},
                       {"map_then_compose", composite}, {"compose_then_map", image}});
        } while (odo.next());
      });
    }
  }
  return {mult, restrict};
}

}  // namespace choose2
