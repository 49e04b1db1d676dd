#pragma once

// Exhaustive checks of the associative-operad bimodule structure on
// gamma_m B, of the alpha_m morphism, and of the row-wise matrix description.
//
// Everything is phrased with the underlying pointed-set maps, which run
// opposite to the bimodule structure maps:
//   right associativity   rho_c o rho_d           = rho_{compose(c, d)}
//   left associativity    lambda_{b_s, c|s} o lambda_{compose(b, c)} = lambda_c
//   commutation           lambda_c o rho_d       = rho_{d|s} o lambda_{compose(c, d)}
//   units                 rho_{(1,...,1)} = id,  lambda_{(n)} = slot 1
//
// Sweeps cover every arity a with m * a <= max_total_arity and every weak
// composition with at most max_zero_parts zero parts.

#include <set>
#include <vector>

#include "choose2/choose_two.hpp"
#include "choose2/combinatorics.hpp"
#include "choose2/divided_powers.hpp"
#include "choose2/errors.hpp"
#include "choose2/json_io.hpp"
#include "choose2/report.hpp"

namespace choose2 {

struct SweepBounds {
  int max_total_arity = 8;
  int max_zero_parts = 1;
};

namespace detail {

inline std::vector<GammaBElement> gamma_elements(int m, int blocks) {
  std::vector<GammaBElement> out;
  for (const auto& e : all_elements(m * blocks)) out.emplace_back(m, blocks, e);
  return out;
}

inline int max_blocks(int m, const SweepBounds& bounds) { return bounds.max_total_arity / m; }

}  // namespace detail

inline CheckResult check_right_associativity(int m, const SweepBounds& bounds,
                                             const GammaActions& actions, Budget& budget) {
  CheckResult res{"bimodule.right_associativity"};
  const int N = detail::max_blocks(m, bounds);
  for (int l = 1; l <= N; ++l) {
    const auto elems = detail::gamma_elements(m, l);
    for (int n = 1; n <= N; ++n) {
      for_each_composition(n, l, bounds.max_zero_parts, [&](const Composition& d) {
        std::vector<GammaBElement> after_d;
        after_d.reserve(elems.size());
        for (const auto& e : elems) after_d.push_back(actions.rho(d, m, e));
        for (int k = 1; k <= N; ++k) {
          for_each_composition(k, n, bounds.max_zero_parts, [&](const Composition& c) {
            const Composition cd = compose(c, d);
            budget.spend(elems.size());
            for (std::size_t p = 0; p < elems.size(); ++p) {
              ++res.instances;
              const auto lhs = actions.rho(c, m, after_d[p]);
              const auto rhs = actions.rho(cd, m, elems[p]);
              if (!(lhs == rhs))
                res.fail({{"m", m}, {"outer", to_json(c)}, {"inner", to_json(d)},
                          {"element", to_json(elems[p])}, {"iterated", to_json(lhs)},
                          {"composite", to_json(rhs)}});
            }
          });
        }
      });
    }
  }
  return res;
}

inline CheckResult check_left_associativity(int m, const SweepBounds& bounds,
                                            const GammaActions& actions, Budget& budget) {
  CheckResult res{"bimodule.left_associativity"};
  const int N = detail::max_blocks(m, bounds);
  for (int n = 1; n <= N; ++n) {
    const auto elems = detail::gamma_elements(m, n);
    for (int j = 1; j <= N; ++j) {
      for_each_composition(j, n, bounds.max_zero_parts, [&](const Composition& c) {
        std::vector<WedgeElement> direct;
        direct.reserve(elems.size());
        for (const auto& e : elems) direct.push_back(actions.lambda(c, m, e));
        for (int k = 1; k <= N; ++k) {
          for_each_composition(k, j, bounds.max_zero_parts, [&](const Composition& b) {
            const Composition coarse = compose(b, c);
            budget.spend(elems.size());
            for (std::size_t p = 0; p < elems.size(); ++p) {
              ++res.instances;
              WedgeElement two_step = WedgeElement::basepoint();
              const WedgeElement y = actions.lambda(coarse, m, elems[p]);
              if (!y.is_basepoint()) {
                const int s = y.slot();
                const auto sub = restrict_to_block(c, b, s);
                if (!sub.empty()) {
                  const Composition local(sub);
                  const WedgeElement z = actions.lambda(
                      local, m, GammaBElement(m, local.total(), y.element()));
                  if (!z.is_basepoint())
                    two_step = WedgeElement(b.partial_sum(s) + z.slot(), z.element());
                }
              }
              if (!(two_step == direct[p]))
                res.fail({{"m", m}, {"outer", to_json(b)}, {"inner", to_json(c)},
                          {"element", to_json(elems[p])}, {"direct", to_json(direct[p])},
                          {"two_step", to_json(two_step)}});
            }
          });
        }
      });
    }
  }
  return res;
}

inline CheckResult check_left_right_commutation(int m, const SweepBounds& bounds,
                                                const GammaActions& actions, Budget& budget) {
  CheckResult res{"bimodule.left_right_commutation"};
  const int N = detail::max_blocks(m, bounds);
  for (int l = 1; l <= N; ++l) {
    const auto elems = detail::gamma_elements(m, l);
    for (int n = 1; n <= N; ++n) {
      for_each_composition(n, l, bounds.max_zero_parts, [&](const Composition& d) {
        std::vector<GammaBElement> after_d;
        after_d.reserve(elems.size());
        for (const auto& e : elems) after_d.push_back(actions.rho(d, m, e));
        for (int k = 1; k <= N; ++k) {
          for_each_composition(k, n, bounds.max_zero_parts, [&](const Composition& c) {
            const Composition cd = compose(c, d);
            budget.spend(elems.size());
            for (std::size_t p = 0; p < elems.size(); ++p) {
              ++res.instances;
              const WedgeElement lhs = actions.lambda(c, m, after_d[p]);
              WedgeElement rhs = WedgeElement::basepoint();
              const WedgeElement y = actions.lambda(cd, m, elems[p]);
              if (!y.is_basepoint()) {
                const int s = y.slot();
                const auto sub = restrict_to_block(d, c, s);
                if (!sub.empty()) {
                  const Composition local(sub);
                  const GammaBElement x = actions.rho(
                      local, m, GammaBElement(m, local.total(), y.element()));
                  rhs = WedgeElement(s, x.element());
                }
              }
              if (!(lhs == rhs))
                res.fail({{"m", m}, {"left", to_json(c)}, {"right", to_json(d)},
                          {"element", to_json(elems[p])}, {"right_then_left", to_json(lhs)},
                          {"left_then_right", to_json(rhs)}});
            }
          });
        }
      });
    }
  }
  return res;
}

// Unit laws on every element, or only on row-diagonal elements (both indices
// in one row, i.e. the image of alpha_m) when row_diagonal_only is set.
inline std::vector<CheckResult> check_unit_laws(int m, const SweepBounds& bounds,
                                                const GammaActions& actions, Budget& budget,
                                                bool row_diagonal_only = false) {
  CheckResult right{row_diagonal_only ? "bimodule.right_unit_row_diagonal"
                                      : "bimodule.right_unit"};
  CheckResult left{row_diagonal_only ? "bimodule.left_unit_row_diagonal"
                                     : "bimodule.left_unit"};
  const int N = detail::max_blocks(m, bounds);
  for (int n = 1; n <= N; ++n) {
    const Composition unit_right = Composition::ones(n);
    const Composition unit_left({n});
    for (const auto& e : detail::gamma_elements(m, n)) {
      if (row_diagonal_only && !e.is_basepoint() &&
          decompose_index(e.element().first(), m).r !=
              decompose_index(e.element().second(), m).r)
        continue;
      budget.spend(2);
      ++right.instances;
      ++left.instances;
      const auto r = actions.rho(unit_right, m, e);
      if (!(r == e))
        right.fail({{"m", m}, {"composition", to_json(unit_right)},
                    {"element", to_json(e)}, {"image", to_json(r)}});
      const auto l = actions.lambda(unit_left, m, e);
      const WedgeElement expected(1, e.element());
      if (!(l == expected))
        left.fail({{"m", m}, {"composition", to_json(unit_left)},
                   {"element", to_json(e)}, {"image", to_json(l)}});
    }
  }
  return {right, left};
}

inline std::vector<CheckResult> verify_bimodule_axioms(int m, const SweepBounds& bounds,
                                                       const GammaActions& actions = {},
                                                       Budget budget = Budget()) {
  if (m < 1) throw std::invalid_argument("row count m must be >= 1");
  std::vector<CheckResult> out;
  out.push_back(check_right_associativity(m, bounds, actions, budget));
  out.push_back(check_left_associativity(m, bounds, actions, budget));
  out.push_back(check_left_right_commutation(m, bounds, actions, budget));
  for (auto& c : check_unit_laws(m, bounds, actions, budget)) out.push_back(c);
  for (auto& c : check_unit_laws(m, bounds, actions, budget, true)) out.push_back(c);
  return out;
}

inline std::vector<CheckResult> verify_alpha_morphism(int m, const SweepBounds& bounds,
                                                      const AlphaEmbedding& alpha = alpha_m_embed,
                                                      const GammaActions& actions = {},
                                                      Budget budget = Budget()) {
  if (m < 1) throw std::invalid_argument("row count m must be >= 1");
  CheckResult injective{"alpha.injectivity"};
  CheckResult right{"alpha.right_intertwining"};
  CheckResult left{"alpha.left_intertwining"};
  const int N = detail::max_blocks(m, bounds);

  for (int n = 0; n <= N; ++n) {
    std::set<std::size_t> seen;
    for (int r = 1; r <= m; ++r) {
      for (const auto& e : all_elements(n)) {
        if (e.is_basepoint()) continue;
        budget.spend();
        ++injective.instances;
        const auto image = alpha(m, r, e);
        if (image.is_basepoint() || !seen.insert(image.element().ordinal()).second)
          injective.fail({{"m", m}, {"row", r}, {"element", to_json(e)},
                          {"image", to_json(image)}});
      }
    }
  }

  for (int n = 1; n <= N; ++n) {
    const auto elems = all_elements(n);
    for (int k = 1; k <= N; ++k) {
      for_each_composition(k, n, bounds.max_zero_parts, [&](const Composition& c) {
        for (int r = 1; r <= m; ++r) {
          budget.spend(2 * elems.size());
          for (const auto& e : elems) {
            ++right.instances;
            ++left.instances;
            const auto act_then_embed = alpha(m, r, rho_action(c, e));
            const auto embed_then_act = actions.rho(c, m, alpha(m, r, e));
            if (!(act_then_embed == embed_then_act))
              right.fail({{"m", m}, {"row", r}, {"composition", to_json(c)},
                          {"element", to_json(e)}, {"act_then_embed", to_json(act_then_embed)},
                          {"embed_then_act", to_json(embed_then_act)}});

            const WedgeElement l = lambda_action(c, e);
            WedgeElement expected = WedgeElement::basepoint();
            if (!l.is_basepoint())
              expected = WedgeElement(l.slot(), alpha(m, r, l.element()).element());
            const WedgeElement got = actions.lambda(c, m, alpha(m, r, e));
            if (!(expected == got))
              left.fail({{"m", m}, {"row", r}, {"composition", to_json(c)},
                         {"element", to_json(e)}, {"act_then_embed", to_json(expected)},
                         {"embed_then_act", to_json(got)}});
          }
        }
      });
    }
  }
  return {injective, right, left};
}

// lambda_m / rho_m against the row-wise matrix oracle, on every element and
// composition within the bounds.
inline CheckResult verify_matrix_oracle(int m, const SweepBounds& bounds,
                                        const GammaActions& actions = {},
                                        Budget budget = Budget()) {
  CheckResult res{"matrix_oracle.equivalence"};
  const int N = detail::max_blocks(m, bounds);
  for (int n = 1; n <= N; ++n) {
    const auto elems = detail::gamma_elements(m, n);
    for (int k = 1; k <= N; ++k) {
      for_each_composition(k, n, bounds.max_zero_parts, [&](const Composition& c) {
        budget.spend(2 * elems.size());
        for (const auto& e : elems) {
          ++res.instances;
          const auto M = ZeroOneMatrix::encode(e);
          const auto right = matrix_oracle(c, m, M, ActionSide::right).matrix.decode();
          const auto direct_right = actions.rho(c, m, e);
          if (!(right == direct_right))
            res.fail({{"side", "right"}, {"m", m}, {"composition", to_json(c)},
                      {"element", to_json(e)}, {"oracle", to_json(right)},
                      {"formula", to_json(direct_right)}});
          const auto left = matrix_oracle(c, m, M, ActionSide::left);
          WedgeElement oracle_left = WedgeElement::basepoint();
          if (!left.matrix.is_zero())
            oracle_left = WedgeElement(left.slot, left.matrix.decode().element());
          const auto direct_left = actions.lambda(c, m, e);
          if (!(oracle_left == direct_left))
            res.fail({{"side", "left"}, {"m", m}, {"composition", to_json(c)},
                      {"element", to_json(e)}, {"oracle", to_json(oracle_left)},
                      {"formula", to_json(direct_left)}});
        }
      });
    }
  }
  return res;
}

// lambda^(1) and rho^(1) against lambda and rho of B, arities n <= max_arity.
inline CheckResult check_gamma1_identity(int max_arity, int max_zero_parts = -1) {
  CheckResult res{"gamma1.identity"};
  for (int n = 0; n <= max_arity; ++n) {
    const auto elems = all_elements(n);
    for (int k = 1; k <= std::max(n, 1); ++k) {
      for_each_composition(k, n, max_zero_parts, [&](const Composition& c) {
        for (const auto& e : elems) {
          ++res.instances;
          const GammaBElement g(1, n, e);
          const auto l1 = lambda_m(c, 1, g);
          const auto l = lambda_action(c, e);
          const auto r1 = rho_m(c, 1, g);
          const auto r = rho_action(c, e);
          if (!(l1 == l) || !(r1.element() == r))
            res.fail({{"composition", to_json(c)}, {"element", to_json(e)}});
        }
      });
    }
  }
  return res;
}

// Non-basepoint outputs keep the row of the input pair.
inline CheckResult check_row_preservation(int m, const SweepBounds& bounds,
                                          const GammaActions& actions = {}) {
  CheckResult res{"bimodule.row_preservation"};
  const int N = detail::max_blocks(m, bounds);
  for (int n = 1; n <= N; ++n) {
    const auto elems = detail::gamma_elements(m, n);
    for (int k = 1; k <= N; ++k) {
      for_each_composition(k, n, bounds.max_zero_parts, [&](const Composition& c) {
        for (const auto& e : elems) {
          if (e.is_basepoint()) continue;
          const int row = decompose_index(e.element().first(), m).r;
          const auto same_row = [&](const BElement& x) {
            return decompose_index(x.first(), m).r == row &&
                   decompose_index(x.second(), m).r == row;
          };
          ++res.instances;
          const auto r = actions.rho(c, m, e);
          const auto l = actions.lambda(c, m, e);
          if ((!r.is_basepoint() && !same_row(r.element())) ||
              (!l.is_basepoint() && !same_row(l.element())))
            res.fail({{"m", m}, {"composition", to_json(c)}, {"element", to_json(e)},
                      {"right", to_json(r)}, {"left", to_json(l)}});
        }
      });
    }
  }
  return res;
}

}  // namespace choose2
