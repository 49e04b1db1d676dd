#pragma once

// Verification suites as run by the command-line tool. Each suite returns a
// report whose checks are independent; a corrupted run swaps in the suite's
// negative control and is expected to fail.

#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "choose2/bimodule_axioms.hpp"
#include "choose2/chains.hpp"
#include "choose2/configuration_ladder.hpp"
#include "choose2/cosimplicial.hpp"
#include "choose2/kontsevich.hpp"
#include "choose2/negative_controls.hpp"
#include "choose2/phi_functor.hpp"
#include "choose2/report.hpp"
#include "choose2/sampling.hpp"

namespace choose2 {

struct SuiteParams {
  int m = 1;
  std::optional<int> max_arity;
  int k = 2;
  int n = 4;
  int samples = 20;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  FourMode mode = FourMode::automatic;
  std::optional<std::vector<double>> u;
  int level = 3;
  int x_size = 2;
  int max_zero_parts = 1;
  std::size_t budget = kDefaultBudget;
  std::string flavor = "all";
  bool corrupt = false;
};

inline const char* mode_name(FourMode m) {
  switch (m) {
    case FourMode::tensor: return "tensor";
    case FourMode::probe: return "probe";
    default: return "auto";
  }
}

// Folds checks with equal names: instances add, residuals take the maximum,
// the first failing witness is kept.
inline void merge_checks(std::vector<CheckResult>& acc, const std::vector<CheckResult>& more,
                         const std::string& prefix = "") {
  for (auto c : more) {
    c.name = prefix + c.name;
    auto it = std::find_if(acc.begin(), acc.end(), [&](const auto& a) { return a.name == c.name; });
    if (it == acc.end()) {
      acc.push_back(std::move(c));
      continue;
    }
    it->instances += c.instances;
    if (c.residual) it->observe_residual(*c.residual);
    if (!c.pass) it->fail(c.witness);
  }
}

// ---------------------------------------------------------------- chains

inline std::vector<CheckResult> verify_chains(
    std::uint64_t seed, int samples,
    const std::function<Permutation4(const Permutation4&)>& dual_fn = dual_permutation) {
  CheckResult count{"chains.count"};
  CheckResult involution{"chains.dual_involution"};
  CheckResult complement{"chains.dual_complements_edges"};
  CheckResult path{"chains.hamiltonian_path"};
  CheckResult parity{"chains.parity_well_defined"};
  CheckResult summand{"chains.summand_representative_independence"};
  const auto dual_of = [&](const Chain3Class& ch) { return Chain3Class{ch.T, dual_fn(ch.rep).canonical()}; };

  for (const std::vector<int>& T : {std::vector<int>{1, 2, 3, 4}, std::vector<int>{2, 5, 7, 11}}) {
    const auto classes = enumerate_chains(T);
    ++count.instances;
    std::set<Permutation4> distinct;
    for (const auto& ch : classes) distinct.insert(ch.rep);
    if (classes.size() != 12 || distinct.size() != 12)
      count.fail({{"T", T}, {"classes", classes.size()}});
    for (const auto& ch : classes) {
      ++involution.instances;
      ++complement.instances;
      ++path.instances;
      ++parity.instances;
      const auto rep = json(ch.rep.one_line());
      if (!(dual_of(dual_of(ch)) == ch)) involution.fail({{"T", T}, {"chain", rep}});
      const auto a = edges(ch);
      const auto b = edges(dual_of(ch));
      std::set<Edge> all(a.begin(), a.end());
      all.insert(b.begin(), b.end());
      if (a.size() != 3 || b.size() != 3 || all.size() != 6)
        complement.fail({{"T", T}, {"chain", rep}});
      std::map<int, int> degree;
      for (const auto& [x, y] : a) ++degree[x], ++degree[y];
      std::multiset<int> degs;
      for (const auto& [v, d] : degree) degs.insert(d);
      if (degs != std::multiset<int>{1, 1, 2, 2}) path.fail({{"T", T}, {"chain", rep}});
      if (ch.rep.sign() != ch.rep.reversed().sign()) parity.fail({{"T", T}, {"chain", rep}});
    }
  }

  summand.observe_residual(0.0);
  for (int t = 0; t < samples; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    SphereMap f(4, 4);
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) f.set(i, j, rng.unit_vector(4));
    const Eigen::VectorXd v = rng.unit_vector(4);
    const Eigen::VectorXd w = rng.unit_vector(4);
    for (const auto& ch : enumerate_chains({1, 2, 3, 4})) {
      ++summand.instances;
      const auto term = [&](const Permutation4& p) {
        // Summand with the dual supplied by dual_fn.
        double x = p.sign();
        for (int j = 1; j <= 3; ++j) x *= f.stored(p(j), p(j + 1)).dot(v);
        const Permutation4 q = dual_fn(p);
        for (int j = 1; j <= 3; ++j) x *= f.stored(q(j), q(j + 1)).dot(w);
        return x;
      };
      const double d = std::abs(term(ch.rep) - term(ch.rep.reversed()));
      summand.observe_residual(d);
      if (d > 1e-12) summand.fail({{"sample", t}, {"chain", ch.rep.one_line()}, {"difference", d}});
    }
  }
  return {count, involution, complement, path, parity, summand};
}

// ---------------------------------------------------------------- numeric alpha

inline std::vector<CheckResult> verify_alpha_numeric(int m, int n, int samples, std::uint64_t seed,
                                                     const GammaActions& actions = {}) {
  CheckResult right{"alpha.numeric_right"};
  CheckResult left{"alpha.numeric_left"};
  CheckResult ladder{"alpha.numeric_ladder"};
  CheckResult selection{"alpha.gauss_selection"};
  const auto record = [](CheckResult& c, bool ok, json w) {
    ++c.instances;
    if (!ok) c.fail(std::move(w));
  };
  for (int t = 0; t < samples; ++t) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(t));
    for (int k = 1; k <= 3; ++k) {
      const Configuration x = sample_configuration(k * m, n, Domain::cube, 1e-3, derive_seed(s, k));
      const SphereMap f = gauss_map(x);
      for (int r = 1; r <= m; ++r) {
        const SphereMap fr = alpha_component(f, m, r);
        Configuration xr{Eigen::MatrixXd(n, k)};
        for (int a = 1; a <= k; ++a) xr.points.col(a - 1) = x.point(compose_index(a, r, m));
        record(selection, fr == gauss_map(xr), {{"sample", t}, {"k", k}, {"row", r}});
        for (int l = 0; l <= 3; ++l)
          for_each_composition(k, l, -1, [&](const Composition& c) {
            record(right,
                   alpha_component(right_action_K(f, c, m, actions), m, r) ==
                       right_action_K(fr, c, 1),
                   {{"sample", t}, {"composition", to_json(c)}, {"row", r}});
            std::vector<SphereMap> fs, frs;
            for (int b = 1; b <= k; ++b) {
              fs.push_back(gauss_map(sample_configuration(c.part(b) * m, n, Domain::cube, 1e-3,
                                                          derive_seed(s, 1000 + b))));
              frs.push_back(alpha_component(fs.back(), m, r));
            }
            record(left,
                   alpha_component(left_action_K(fs, c, m, actions), m, r) ==
                       left_action_K(frs, c, 1),
                   {{"sample", t}, {"composition", to_json(c)}, {"row", r}});
          });
        for (int i = 0; i <= k + 1; ++i)
          record(ladder,
                 alpha_component(numeric_coface(m, k, i, f, actions), m, r) ==
                     numeric_coface(1, k, i, fr),
                 {{"sample", t}, {"map", "d^" + std::to_string(i)}, {"level", k}, {"row", r}});
        for (int j = 0; j < k; ++j)
          record(ladder,
                 alpha_component(numeric_codegeneracy(m, k, j, f, actions), m, r) ==
                     numeric_codegeneracy(1, k, j, fr),
                 {{"sample", t}, {"map", "s^" + std::to_string(j)}, {"level", k}, {"row", r}});
      }
    }
  }
  return {right, left, ladder, selection};
}

// ---------------------------------------------------------------- Gauss-map conditions

inline std::vector<CheckResult> verify_gauss_conditions(int k, int n, int samples,
                                                        std::uint64_t seed, const Tolerances& tol,
                                                        FourMode mode, bool corrupt = false) {
  CheckResult three{"kontsevich.three_dependence"};
  CheckResult distance{"kontsevich.distance_witness"};
  CheckResult four{"kontsevich.four_consistency"};
  CheckResult agree{"kontsevich.probe_tensor_agreement"};
  CheckResult member{"kontsevich.membership"};
  CheckResult normal{"kontsevich.normalization_invariance"};
  CheckResult pole{"kontsevich.south_pole_map"};
  for (auto* c : {&three, &distance, &four, &normal, &pole}) c->observe_residual(0.0);

  struct Sample {
    double three = 0, distance = 0, four = 0, normal = 0;
    bool agree = true, member = true;
    std::array<int, 3> three_at{};
    std::array<int, 4> four_at{};
    json member_witness;
  };
  std::vector<Sample> out(static_cast<std::size_t>(samples));
  parallel_for(out.size(), [&](std::size_t t) {
    const std::uint64_t s = derive_seed(seed, t);
    const Configuration x = sample_configuration(k, n, Domain::cube, 1e-2, s);
    SphereMap f = gauss_map(x);
    if (corrupt && k >= 2) {
      Eigen::VectorXd v = f.stored(1, 2);
      v[0] += 0.1;
      f.set(1, 2, v.normalized());
    }
    auto& r = out[t];
    const auto td = is_three_dependent(f, tol.three_dependence);
    r.three = td.worst_residual;
    if (td.worst) r.three_at = td.worst->triple;
    for (int a = 1; a <= k; ++a)
      for (int b = a + 1; b <= k; ++b)
        for (int c = b + 1; c <= k; ++c) {
          const double d12 = (x.point(a) - x.point(b)).norm();
          const double d23 = (x.point(b) - x.point(c)).norm();
          const double d31 = (x.point(c) - x.point(a)).norm();
          const Eigen::VectorXd sum = d12 * f.at(a, b) + d23 * f.at(b, c) + d31 * f.at(c, a);
          r.distance = std::max(r.distance, sum.norm() / (d12 + d23 + d31));
        }
    const auto fc = is_four_consistent(f, tol.four_consistency, mode, derive_seed(s, 7));
    r.four = fc.residual;
    r.four_at = fc.worst;
    if (n <= kTensorDimensionBound) {
      const auto probe = is_four_consistent(f, tol.four_consistency, FourMode::probe, derive_seed(s, 8));
      const auto tensor = is_four_consistent(f, tol.four_consistency, FourMode::tensor);
      r.agree = probe.pass == tensor.pass;
    }
    for (const auto& c : membership_C({x, f}, tol, mode))
      if (!c.pass && r.member) {
        r.member = false;
        r.member_witness = {{"check", c.name}, {"witness", c.witness}};
      }
    if (k >= 2) {
      const SphereMap g = gauss_map(normalize_configuration(x));
      r.normal = max_difference(f, g);
      if (corrupt) r.normal = max_difference(gauss_map(x), g);
    }
  });

  for (std::size_t t = 0; t < out.size(); ++t) {
    const auto& r = out[t];
    const json where{{"sample", t}, {"k", k}, {"n", n}};
    const auto tally = [&](CheckResult& c, double value, double bound, json extra) {
      ++c.instances;
      c.observe_residual(value);
      if (value > bound) {
        json w = where;
        w["residual"] = value;
        w["at"] = std::move(extra);
        c.fail(std::move(w));
      }
    };
    tally(three, r.three, tol.three_dependence, r.three_at);
    tally(distance, r.distance, 1e-12, nullptr);
    tally(four, r.four, tol.four_consistency, r.four_at);
    tally(normal, r.normal, 1e-12, nullptr);
    ++agree.instances;
    if (!r.agree) agree.fail(where);
    ++member.instances;
    if (!r.member) {
      json w = where;
      w["failure"] = r.member_witness;
      member.fail(std::move(w));
    }
  }

  // Every pair at the south pole: twelve equal magnitudes, alternating signs.
  const SphereMap south(std::max(k, 4), n);
  const auto q = is_four_consistent(south, 0.0, FourMode::tensor);
  const auto d = is_three_dependent(south, tol.three_dependence);
  pole.instances = 1;
  pole.observe_residual(std::max(q.residual, d.worst_residual));
  if (!q.pass || !d.pass) pole.fail({{"four_residual", q.residual}, {"three_residual", d.worst_residual}});
  return {three, distance, four, agree, member, normal, pole};
}

// ---------------------------------------------------------------- closure

inline std::vector<CheckResult> verify_closure_suite(int m, int k, int n, int samples,
                                                     std::uint64_t seed, const Tolerances& tol,
                                                     FourMode mode, const GammaActions& actions,
                                                     int max_total = 3) {
  std::vector<CheckResult> acc;
  for (int l = 0; l <= max_total; ++l)
    for_each_composition(k, l, -1, [&](const Composition& c) {
      ClosureParams p;
      p.m = m;
      p.c = c;
      p.n = n;
      p.samples = samples;
      p.seed = derive_seed(seed, static_cast<std::uint64_t>(l * 1000 + acc.size()));
      p.tol = tol;
      p.mode = mode;
      p.actions = actions;
      merge_checks(acc, verify_action_closure(p));
    });

  // Cancellation pairings on right-action outputs realizing each proof case.
  struct Case {
    CancellationCase which;
    Composition c;
    std::array<int, 4> T;
  };
  std::vector<Case> cases{{CancellationCase::three_blocks_equal, Composition({3, 1}),
                           {1, 1 + m, 1 + 2 * m, 1 + 3 * m}}};
  if (m >= 2)
    cases.push_back({CancellationCase::mixed_rows, Composition({1, 1, 1, 1}),
                     {1, 1 + m, 2 + 2 * m, 2 + 3 * m}});
  for (const auto& cs : cases) {
    for (int t = 0; t < samples; ++t) {
      const std::uint64_t s = derive_seed(seed ^ 0xca11ULL, static_cast<std::uint64_t>(t));
      const SphereMap f = gauss_map(
          sample_configuration(cs.c.length() * m, n, Domain::cube, 1e-3, s));
      const SphereMap F = right_action_K(f, cs.c, m, actions);
      auto rep = verify_cancellation_pairings(F, m, cs.c, cs.T, cs.which, 1e-12, derive_seed(s, 5));
      merge_checks(acc, {rep.check});
    }
  }
  return acc;
}

// ---------------------------------------------------------------- suites

inline Tolerances tolerances_for(const SuiteParams& p) {
  Tolerances t;
  if (p.tol) {
    t.three_dependence = *p.tol;
    t.four_consistency = *p.tol;
  }
  return t;
}

inline json params_json(const std::string& suite, const SuiteParams& p) {
  json j{{"suite", suite},     {"m", p.m},         {"k", p.k},
         {"n", p.n},           {"samples", p.samples}, {"seed", p.seed},
         {"mode", mode_name(p.mode)}, {"level", p.level}, {"xSize", p.x_size},
         {"maxZeroParts", p.max_zero_parts}, {"budget", p.budget}, {"flavor", p.flavor},
         {"corrupt", p.corrupt}};
  j["maxArity"] = p.max_arity ? json(*p.max_arity) : json(nullptr);
  j["tol"] = p.tol ? json(*p.tol) : json(nullptr);
  j["u"] = p.u ? json(*p.u) : json(nullptr);
  const Tolerances t = tolerances_for(p);
  j["tolerances"] = {{"unit", t.unit},
                     {"align", t.align},
                     {"threeDependence", t.three_dependence},
                     {"fourConsistency", t.four_consistency},
                     {"coincide", t.coincide}};
  return j;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"operad", "bimodule",     "alpha",       "chains",
                                              "kontsevich", "closure", "cosimplicial", "config-model"};
  return names;
}

inline BoundaryAnchors anchors_for(const SuiteParams& p) {
  BoundaryAnchors a = default_anchors(p.n);
  if (p.u) {
    if (static_cast<int>(p.u->size()) != p.n)
      throw std::invalid_argument("--u must have n coordinates");
    a.u = Eigen::Map<const Eigen::VectorXd>(p.u->data(), p.n).normalized();
  }
  a.validate();
  return a;
}

inline VerificationReport run_suite(const std::string& suite, const SuiteParams& p) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.suite = suite;
  rep.parameters = params_json(suite, p);
  const Tolerances tol = tolerances_for(p);
  std::vector<CheckResult> checks;

  // Level 1 targets carry no pairs, so ladders are corrupted at level 2.
  if (p.corrupt && p.level < 3 && (suite == "cosimplicial" || suite == "config-model"))
    throw std::invalid_argument("--corrupt needs --level >= 3");

  if (suite == "operad") {
    const int N = p.max_arity.value_or(4);
    FinitePointedOperad op = realize_operad(FinitePointedSet(p.x_size), N, Budget(p.budget));
    if (p.corrupt) corrupt::permute_table_entry(op);
    merge_checks(checks, verify_operad_axioms(op, N, Budget(p.budget)));
    if (N >= 2 && !p.corrupt) {
      const FinitePointedSet X(p.x_size);
      const PointedMapCodec codec(p.x_size, 2);
      std::vector<int> g;
      for (ElementId e = 0; e < op.size(2); ++e) g.push_back(codec.value(e, 1));
      merge_checks(checks, verify_extension(op, op, extend_point_map(op, X, g), Budget(p.budget)));
    }
  } else if (suite == "bimodule") {
    const SweepBounds b{p.max_arity.value_or(8), p.max_zero_parts};
    const GammaActions actions = p.corrupt ? corrupt::swapped_rho() : GammaActions{};
    merge_checks(checks, verify_bimodule_axioms(p.m, b, actions, Budget(p.budget)));
    const GammaActions oracle_actions = p.corrupt ? corrupt::row_blind_lambda() : GammaActions{};
    checks.push_back(verify_matrix_oracle(p.m, b, oracle_actions, Budget(p.budget)));
    checks.push_back(check_row_preservation(p.m, b, oracle_actions));
    checks.push_back(check_gamma1_identity(std::min(b.max_total_arity, 8), b.max_zero_parts));
  } else if (suite == "alpha") {
    const SweepBounds b{p.max_arity.value_or(4 * p.m), p.max_zero_parts};
    const AlphaEmbedding alpha = p.corrupt ? corrupt::row_mixing_alpha() : AlphaEmbedding(alpha_m_embed);
    merge_checks(checks, verify_alpha_morphism(p.m, b, alpha, {}, Budget(p.budget)));
    merge_checks(checks, verify_alpha_numeric(p.m, p.n, p.samples, p.seed,
                                              p.corrupt ? corrupt::stale_rho() : GammaActions{}));
  } else if (suite == "chains") {
    if (p.corrupt)
      merge_checks(checks, verify_chains(p.seed, p.samples, [](const Permutation4& s) {
                     return dual_cycle() * s;
                   }));
    else
      merge_checks(checks, verify_chains(p.seed, p.samples));
  } else if (suite == "kontsevich") {
    merge_checks(checks, verify_gauss_conditions(p.k, p.n, p.samples, p.seed, tol, p.mode, p.corrupt));
  } else if (suite == "closure") {
    merge_checks(checks, verify_closure_suite(p.m, p.k, p.n, p.samples, p.seed, tol, p.mode,
                                              p.corrupt ? corrupt::transposed_pairs() : GammaActions{}));
  } else if (suite == "cosimplicial") {
    const bool all = p.flavor == "all";
    if (all || p.flavor == "exact") {
      auto L = make_exact_ladder(p.m, p.level);
      if (p.corrupt) corrupt::swap_first_cofaces(L, 2);
      merge_checks(checks, verify_cosimplicial_identities(L), "exact.");
    }
    if (all || p.flavor == "numeric") {
      auto L = make_numeric_ladder(p.m, p.level, p.n, p.samples, p.seed);
      if (p.corrupt) corrupt::swap_first_cofaces(L, 2);
      merge_checks(checks, verify_cosimplicial_identities(L), "numeric.");
    }
    if ((all && p.m == 1 && p.level <= 4) || p.flavor == "realized") {
      auto L = make_phi_ladder(FinitePointedSet(p.x_size), p.m, p.level);
      if (p.corrupt) corrupt::swap_first_cofaces(L, 2);
      merge_checks(checks, verify_cosimplicial_identities(L), "realized.");
      if (!p.corrupt)
        checks.push_back(check_phi_ladder_commutes(FinitePointedSet(p.x_size), p.m, p.level));
    }
    if (checks.empty()) throw std::invalid_argument("unknown ladder flavor " + p.flavor);
  } else if (suite == "config-model") {
    const BoundaryAnchors anchors = anchors_for(p);
    auto L = make_config_ladder(p.m, p.level, anchors, p.samples, p.seed);
    if (p.corrupt) corrupt::swap_first_cofaces(L, 2);
    merge_checks(checks, verify_cosimplicial_identities(L), "configuration.");
    merge_checks(checks, verify_projections(L, anchors));
    checks.push_back(verify_coface_membership(L, tol));
    if (p.m == 1) {
      auto S = make_config_ladder(1, p.level, anchors, p.samples, p.seed, true);
      merge_checks(checks, verify_cosimplicial_identities(S), "sinha.");
    }
  } else {
    throw std::invalid_argument("unknown suite " + suite);
  }

  rep.add(checks);
  rep.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace choose2
