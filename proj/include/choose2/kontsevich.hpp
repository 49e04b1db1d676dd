#pragma once

// The two conditions cutting the Kontsevich operad out of sphere maps, the
// divided-powers actions on sphere maps, and the closure checks.
//
// Three-dependence: every triple i1 < i2 < i3 admits b >= 0, sum b = 1 with
// b1 f(i1,i2) + b2 f(i2,i3) + b3 f(i3,i1) = 0.
//
// Four-consistency: for every 4-subset T and all v, w
//   sum over the 12 straight 3-chains sigma of
//   sign(sigma) prod_j (f<e_j> . v) prod_j (f<e*_j> . w) = 0,
// where e_j runs over the path edges of sigma, e*_j over those of its dual,
// and f<a,b> is the value of f on the unordered pair {a, b}.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

#include "choose2/chains.hpp"
#include "choose2/choose_two.hpp"
#include "choose2/combinatorics.hpp"
#include "choose2/divided_powers.hpp"
#include "choose2/errors.hpp"
#include "choose2/json_io.hpp"
#include "choose2/report.hpp"
#include "choose2/sampling.hpp"
#include "choose2/sphere_map.hpp"

namespace choose2 {

inline json to_json(const Eigen::VectorXd& v) {
  return json(std::vector<double>(v.data(), v.data() + v.size()));
}

// ---------------------------------------------------------------- three-dependence

struct ThreeDependenceWitness {
  std::array<int, 3> triple{};
  Eigen::Vector3d b = Eigen::Vector3d::Zero();
  double residual = 0.0;
};

struct ThreeDependenceResult {
  bool pass = true;
  double worst_residual = 0.0;
  std::optional<ThreeDependenceWitness> worst;
  std::vector<ThreeDependenceWitness> witnesses;
};

// Best nonnegative normalized combination of u1, u2, u3 over the seven support
// patterns. Ties keep the earlier (smaller) support.
inline ThreeDependenceWitness solve_three_dependence(const Eigen::VectorXd& u1,
                                                     const Eigen::VectorXd& u2,
                                                     const Eigen::VectorXd& u3) {
  const std::array<const Eigen::VectorXd*, 3> u{&u1, &u2, &u3};
  static const std::vector<std::vector<int>> supports{{0}, {1}, {2},       {0, 1},
                                                      {0, 2}, {1, 2}, {0, 1, 2}};
  ThreeDependenceWitness best;
  best.residual = std::numeric_limits<double>::infinity();
  for (const auto& S : supports) {
    const auto s = static_cast<Eigen::Index>(S.size());
    Eigen::MatrixXd U(u1.size(), s);
    for (Eigen::Index c = 0; c < s; ++c) U.col(c) = *u[static_cast<std::size_t>(S[static_cast<std::size_t>(c)])];
    Eigen::VectorXd coeff(s);
    if (s == 1) {
      coeff[0] = 1.0;
    } else {
      Eigen::MatrixXd K = Eigen::MatrixXd::Zero(s + 1, s + 1);
      K.topLeftCorner(s, s) = 2.0 * U.transpose() * U;
      K.topRightCorner(s, 1).setOnes();
      K.bottomLeftCorner(1, s).setOnes();
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(s + 1);
      rhs[s] = 1.0;
      const Eigen::VectorXd sol = K.completeOrthogonalDecomposition().solve(rhs);
      coeff = sol.head(s);
      if (!coeff.allFinite() || coeff.minCoeff() < -1e-12) continue;
      coeff = coeff.cwiseMax(0.0);
      const double total = coeff.sum();
      if (total <= 0.0) continue;
      coeff /= total;
    }
    const double residual = (U * coeff).norm();
    if (residual < best.residual - 1e-15) {
      best.residual = residual;
      best.b.setZero();
      for (Eigen::Index c = 0; c < s; ++c) best.b[S[static_cast<std::size_t>(c)]] = coeff[c];
    }
  }
  return best;
}

inline ThreeDependenceResult is_three_dependent(const SphereMap& f, double tol,
                                                bool keep_witnesses = false) {
  ThreeDependenceResult res;
  const int k = f.arity();
  for (int a = 1; a <= k; ++a)
    for (int b = a + 1; b <= k; ++b)
      for (int c = b + 1; c <= k; ++c) {
        auto w = solve_three_dependence(f.at(a, b), f.at(b, c), f.at(c, a));
        w.triple = {a, b, c};
        if (!res.worst || w.residual > res.worst_residual) {
          res.worst_residual = w.residual;
          res.worst = w;
        }
        if (keep_witnesses) res.witnesses.push_back(w);
      }
  res.pass = res.worst_residual <= tol;
  return res;
}

// Linear dependence with coefficients of either sign: smallest singular value
// of [u1 u2 u3], worst over triples.
inline std::pair<double, std::array<int, 3>> signed_dependence_residual(const SphereMap& f) {
  double worst = 0.0;
  std::array<int, 3> where{};
  const int k = f.arity();
  if (f.dim() < 3) return {0.0, where};
  for (int a = 1; a <= k; ++a)
    for (int b = a + 1; b <= k; ++b)
      for (int c = b + 1; c <= k; ++c) {
        Eigen::MatrixXd U(f.dim(), 3);
        U << f.at(a, b), f.at(b, c), f.at(c, a);
        const double s = Eigen::JacobiSVD<Eigen::MatrixXd>(U).singularValues()[2];
        if (s > worst) {
          worst = s;
          where = {a, b, c};
        }
      }
  return {worst, where};
}

// ---------------------------------------------------------------- four-consistency

enum class FourMode { automatic, tensor, probe };

inline constexpr int kTensorDimensionBound = 6;

struct FourConsistencyResult {
  bool pass = true;
  double residual = 0.0;
  std::array<int, 4> worst{};
  std::size_t subsets = 0;
};

namespace detail {

struct ChainTerm {
  int sign;
  std::array<Edge, 3> path;  // positions in T (1..4)
  std::array<Edge, 3> dual_path;
};

inline std::array<Edge, 3> path_edges(const Permutation4& p) {
  std::array<Edge, 3> out{};
  for (int j = 1; j <= 3; ++j) out[static_cast<std::size_t>(j - 1)] = {p(j), p(j + 1)};
  return out;
}

inline ChainTerm chain_term(const Permutation4& sigma) {
  return {sigma.sign(), path_edges(sigma), path_edges(dual_permutation(sigma))};
}

inline const std::vector<ChainTerm>& chain_terms() {
  static const std::vector<ChainTerm> terms = [] {
    std::vector<ChainTerm> t;
    for (const auto& ch : enumerate_chains({1, 2, 3, 4})) t.push_back(chain_term(ch.rep));
    return t;
  }();
  return terms;
}

inline Eigen::VectorXd edge_vector(const SphereMap& f, const std::array<int, 4>& T,
                                   const Edge& e) {
  return f.stored(T[static_cast<std::size_t>(e.first - 1)],
                  T[static_cast<std::size_t>(e.second - 1)]);
}

// Coefficients of v -> prod_j (a_j . v) as a symmetric n^3 tensor.
inline Eigen::VectorXd sym3(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                            const Eigen::VectorXd& c) {
  const Eigen::Index n = a.size();
  Eigen::VectorXd out(n * n * n);
  for (Eigen::Index p = 0; p < n; ++p)
    for (Eigen::Index q = 0; q < n; ++q)
      for (Eigen::Index r = 0; r < n; ++r)
        out[(p * n + q) * n + r] =
            (a[p] * b[q] * c[r] + a[p] * c[q] * b[r] + b[p] * a[q] * c[r] +
             b[p] * c[q] * a[r] + c[p] * a[q] * b[r] + c[p] * b[q] * a[r]) /
            6.0;
  return out;
}

inline double term_value(const SphereMap& f, const std::array<int, 4>& T, const ChainTerm& t,
                         const Eigen::VectorXd& v, const Eigen::VectorXd& w) {
  double x = t.sign;
  for (const auto& e : t.path) x *= edge_vector(f, T, e).dot(v);
  for (const auto& e : t.dual_path) x *= edge_vector(f, T, e).dot(w);
  return x;
}

// Relative tensor residual of one 4-subset.
inline double four_tensor_residual(const SphereMap& f, const std::array<int, 4>& T) {
  const auto n = static_cast<Eigen::Index>(f.dim());
  const auto& terms = chain_terms();
  Eigen::MatrixXd A(n * n * n, static_cast<Eigen::Index>(terms.size()));
  Eigen::MatrixXd B(n * n * n, static_cast<Eigen::Index>(terms.size()));
  double scale = 0.0;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto& term = terms[t];
    const Eigen::VectorXd a = sym3(edge_vector(f, T, term.path[0]), edge_vector(f, T, term.path[1]),
                                   edge_vector(f, T, term.path[2]));
    const Eigen::VectorXd b =
        sym3(edge_vector(f, T, term.dual_path[0]), edge_vector(f, T, term.dual_path[1]),
             edge_vector(f, T, term.dual_path[2]));
    scale = std::max(scale, a.cwiseAbs().maxCoeff() * b.cwiseAbs().maxCoeff());
    A.col(static_cast<Eigen::Index>(t)) = term.sign * a;
    B.col(static_cast<Eigen::Index>(t)) = b;
  }
  if (scale == 0.0) return 0.0;
  return (A * B.transpose()).cwiseAbs().maxCoeff() / scale;
}

inline double four_probe_residual(const SphereMap& f, const std::array<int, 4>& T,
                                  const std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>>& probes) {
  double worst_sum = 0.0;
  double biggest = 0.0;
  for (const auto& [v, w] : probes) {
    double sum = 0.0;
    for (const auto& t : chain_terms()) {
      const double x = term_value(f, T, t, v, w);
      biggest = std::max(biggest, std::abs(x));
      sum += x;
    }
    worst_sum = std::max(worst_sum, std::abs(sum));
  }
  return biggest == 0.0 ? 0.0 : worst_sum / biggest;
}

inline std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> make_probes(int n, int random_pairs,
                                                                            std::uint64_t seed) {
  std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> out;
  Rng rng(seed);
  for (int t = 0; t < random_pairs; ++t) {
    Eigen::VectorXd v = rng.unit_vector(n);
    Eigen::VectorXd w = rng.unit_vector(n);
    out.emplace_back(std::move(v), std::move(w));
  }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      out.emplace_back(Eigen::VectorXd::Unit(n, p), Eigen::VectorXd::Unit(n, q));
  return out;
}

}  // namespace detail

// The summand of a chain, given by any permutation representing it.
inline double chain_summand(const SphereMap& f, const std::array<int, 4>& T,
                            const Permutation4& sigma, const Eigen::VectorXd& v,
                            const Eigen::VectorXd& w) {
  return detail::term_value(f, T, detail::chain_term(sigma), v, w);
}

inline FourConsistencyResult is_four_consistent(const SphereMap& f, double tol,
                                                FourMode mode = FourMode::automatic,
                                                std::uint64_t probe_seed = 0,
                                                int probe_pairs = 64) {
  if (mode == FourMode::automatic)
    mode = f.dim() <= kTensorDimensionBound ? FourMode::tensor : FourMode::probe;
  if (mode == FourMode::tensor && f.dim() > kTensorDimensionBound)
    throw resource_limit_error("tensor-mode four-consistency in dimension " +
                                   std::to_string(f.dim()),
                               kTensorDimensionBound);
  FourConsistencyResult res;
  std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> probes;
  if (mode == FourMode::probe) probes = detail::make_probes(f.dim(), probe_pairs, probe_seed);
  const int k = f.arity();
  for (int a = 1; a <= k; ++a)
    for (int b = a + 1; b <= k; ++b)
      for (int c = b + 1; c <= k; ++c)
        for (int d = c + 1; d <= k; ++d) {
          const std::array<int, 4> T{a, b, c, d};
          ++res.subsets;
          const double r = mode == FourMode::tensor ? detail::four_tensor_residual(f, T)
                                                    : detail::four_probe_residual(f, T, probes);
          if (res.subsets == 1 || r > res.residual) {
            res.residual = r;
            res.worst = T;
          }
        }
  res.pass = res.residual <= tol;
  return res;
}

// ---------------------------------------------------------------- actions on sphere maps

// F(i, j) = f(rho^(m)_c (i, j)), or the south pole when that is the basepoint.
inline SphereMap right_action_K(const SphereMap& f, const Composition& c, int m,
                                const GammaActions& actions = {}) {
  if (m < 1) throw std::invalid_argument("row count m must be >= 1");
  if (f.arity() != c.length() * m)
    throw std::invalid_argument("sphere map arity must be m times the composition length");
  const int l = c.total();
  SphereMap F(l * m, f.dim(), f.south_pole());
  for (const auto& e : all_elements(l * m)) {
    if (e.is_basepoint()) continue;
    const GammaBElement image = actions.rho(c, m, GammaBElement(m, l, e));
    F.set(e.first(), e.second(), image.is_basepoint()
                                     ? f.south_pole()
                                     : f.stored(image.element().first(), image.element().second()));
  }
  return F;
}

// G(i, j) = fs[s](pair) when lambda^(m)_c (i, j) lands in slot s, else the
// south pole.
inline SphereMap left_action_K(const std::vector<SphereMap>& fs, const Composition& c, int m,
                               const GammaActions& actions = {}) {
  if (m < 1) throw std::invalid_argument("row count m must be >= 1");
  if (fs.size() != static_cast<std::size_t>(c.length()))
    throw std::invalid_argument("one sphere map per composition part expected");
  for (int s = 1; s <= c.length(); ++s) {
    const auto& g = fs[static_cast<std::size_t>(s - 1)];
    if (g.arity() != c.part(s) * m || g.dim() != fs[0].dim())
      throw std::invalid_argument("sphere map " + std::to_string(s) + " has the wrong shape");
  }
  const int n = c.total();
  SphereMap G(n * m, fs[0].dim(), fs[0].south_pole());
  for (const auto& e : all_elements(n * m)) {
    if (e.is_basepoint()) continue;
    const WedgeElement image = actions.lambda(c, m, GammaBElement(m, n, e));
    if (image.is_basepoint()) {
      G.set(e.first(), e.second(), fs[0].south_pole());
    } else {
      const auto& g = fs[static_cast<std::size_t>(image.slot() - 1)];
      G.set(e.first(), e.second(), g.stored(image.element().first(), image.element().second()));
    }
  }
  return G;
}

// Component r of the divided-powers map: (i, j) -> f((i-1)m + r, (j-1)m + r).
inline SphereMap alpha_component(const SphereMap& f, int m, int r) {
  if (m < 1 || r < 1 || r > m) throw std::invalid_argument("row r outside [1, m]");
  if (f.arity() % m != 0) throw std::invalid_argument("sphere map arity is not a multiple of m");
  const int k = f.arity() / m;
  SphereMap g(k, f.dim(), f.south_pole());
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      g.set(i, j, f.stored(compose_index(i, r, m), compose_index(j, r, m)));
  return g;
}

// ---------------------------------------------------------------- membership

inline std::vector<CheckResult> membership_C(const DecoratedConfiguration& dc,
                                             const Tolerances& tol = {},
                                             FourMode mode = FourMode::automatic) {
  CheckResult unit{"membership.unit"};
  CheckResult align{"membership.alignment"};
  CheckResult three{"membership.three_dependence"};
  CheckResult four{"membership.four_consistency"};
  const auto& f = dc.f;
  if (f.arity() != dc.config.arity() || f.dim() != dc.config.dim())
    throw std::invalid_argument("configuration and sphere map differ in shape");

  unit.instances = f.table().cols();
  unit.observe_residual(f.unit_defect());
  if (f.unit_defect() > tol.unit) unit.fail({{"defect", f.unit_defect()}});

  align.observe_residual(0.0);
  for (int i = 1; i <= f.arity(); ++i)
    for (int j = i + 1; j <= f.arity(); ++j) {
      const Eigen::VectorXd d = dc.config.point(i) - dc.config.point(j);
      if (d.norm() <= tol.coincide) continue;
      ++align.instances;
      const double r = (f.at(i, j) - d.normalized()).cwiseAbs().maxCoeff();
      align.observe_residual(r);
      if (r > tol.align) align.fail({{"pair", {i, j}}, {"residual", r}});
    }

  const auto t = is_three_dependent(f, tol.three_dependence);
  three.instances = binomial(f.arity(), 3);
  three.observe_residual(t.worst_residual);
  if (!t.pass) three.fail({{"triple", t.worst->triple}, {"residual", t.worst_residual}});

  const auto q = is_four_consistent(f, tol.four_consistency, mode);
  four.instances = q.subsets;
  four.observe_residual(q.residual);
  if (!q.pass) four.fail({{"subset", q.worst}, {"residual", q.residual}});
  return {unit, align, three, four};
}

// ---------------------------------------------------------------- closure under the actions

struct ClosureParams {
  int m = 1;
  Composition c = Composition({1});
  int n = 4;
  int samples = 50;
  std::uint64_t seed = 0;
  Tolerances tol{};
  FourMode mode = FourMode::automatic;
  double min_sep = 1e-3;
  GammaActions actions{};
};

namespace detail {

struct ClosureSample {
  double right3 = 0, right3_signed = 0, right4 = 0, left3 = 0, left3_signed = 0, left4 = 0;
  std::array<int, 3> right3_at{}, left3_at{};
  std::array<int, 4> right4_at{}, left4_at{};
};

}  // namespace detail

inline std::vector<CheckResult> verify_action_closure(const ClosureParams& p) {
  const int k = p.c.length();
  std::vector<detail::ClosureSample> out(static_cast<std::size_t>(std::max(p.samples, 0)));
  parallel_for(out.size(), [&](std::size_t t) {
    const std::uint64_t s = derive_seed(p.seed, t);
    auto& r = out[t];
    const SphereMap f = gauss_map(sample_configuration(k * p.m, p.n, Domain::cube, p.min_sep, s));
    const SphereMap F = right_action_K(f, p.c, p.m, p.actions);
    const auto r3 = is_three_dependent(F, p.tol.three_dependence);
    r.right3 = r3.worst_residual;
    if (r3.worst) r.right3_at = r3.worst->triple;
    std::tie(r.right3_signed, std::ignore) = signed_dependence_residual(F);
    const auto r4 = is_four_consistent(F, p.tol.four_consistency, p.mode, derive_seed(s, 99));
    r.right4 = r4.residual;
    r.right4_at = r4.worst;

    std::vector<SphereMap> fs;
    for (int b = 1; b <= k; ++b)
      fs.push_back(gauss_map(sample_configuration(p.c.part(b) * p.m, p.n, Domain::cube,
                                                  p.min_sep, derive_seed(s, static_cast<std::uint64_t>(b)))));
    const SphereMap G = left_action_K(fs, p.c, p.m, p.actions);
    const auto l3 = is_three_dependent(G, p.tol.three_dependence);
    r.left3 = l3.worst_residual;
    if (l3.worst) r.left3_at = l3.worst->triple;
    std::tie(r.left3_signed, std::ignore) = signed_dependence_residual(G);
    const auto l4 = is_four_consistent(G, p.tol.four_consistency, p.mode, derive_seed(s, 98));
    r.left4 = l4.residual;
    r.left4_at = l4.worst;
  });

  CheckResult right3{"closure.right.three_dependence"};
  CheckResult right3s{"closure.right.linear_dependence"};
  CheckResult right4{"closure.right.four_consistency"};
  CheckResult left3{"closure.left.three_dependence"};
  CheckResult left3s{"closure.left.linear_dependence"};
  CheckResult left4{"closure.left.four_consistency"};
  const auto base = [&](std::size_t t) {
    return json{{"sample", t}, {"m", p.m}, {"composition", to_json(p.c)}, {"n", p.n}};
  };
  for (auto* c : {&right3, &right3s, &right4, &left3, &left3s, &left4}) c->observe_residual(0.0);
  for (std::size_t t = 0; t < out.size(); ++t) {
    const auto& r = out[t];
    const auto tally = [&](CheckResult& c, double value, double tol, json where) {
      ++c.instances;
      c.observe_residual(value);
      if (value > tol) {
        json w = base(t);
        w["at"] = std::move(where);
        w["residual"] = value;
        c.fail(std::move(w));
      }
    };
    tally(right3, r.right3, p.tol.three_dependence, r.right3_at);
    tally(right3s, r.right3_signed, p.tol.three_dependence, nullptr);
    tally(right4, r.right4, p.tol.four_consistency, r.right4_at);
    tally(left3, r.left3, p.tol.three_dependence, r.left3_at);
    tally(left3s, r.left3_signed, p.tol.three_dependence, nullptr);
    tally(left4, r.left4, p.tol.four_consistency, r.left4_at);
  }
  return {right3, right3s, right4, left3, left3s, left4};
}

// ---------------------------------------------------------------- cancellation pairings

enum class CancellationCase { mixed_rows, three_blocks_equal };

inline const char* case_name(CancellationCase c) {
  return c == CancellationCase::mixed_rows ? "mixed_rows" : "three_blocks_equal";
}

inline const std::vector<std::pair<std::string, std::string>>& cancellation_pairs(
    CancellationCase c) {
  static const std::vector<std::pair<std::string, std::string>> mixed{
      {"id", "(34)"},      {"(1243)", "(123)"}, {"(23)", "(243)"},
      {"(12)(34)", "(12)"}, {"(234)", "(24)"},   {"(13)", "(132)"}};
  static const std::vector<std::pair<std::string, std::string>> three{
      {"id", "(13)"},       {"(1243)", "(234)"}, {"(34)", "(12)(34)"},
      {"(123)", "(23)"},    {"(243)", "(24)"},   {"(12)", "(132)"}};
  return c == CancellationCase::mixed_rows ? mixed : three;
}

struct CancellationReport {
  CheckResult check;
  double max_summand = 0.0;
};

// F is a map of arity m * c.total() (typically a right action output); T must
// realize the named case for the block/row structure given by (c, m).
inline CancellationReport verify_cancellation_pairings(const SphereMap& F, int m,
                                                       const Composition& c,
                                                       const std::array<int, 4>& T,
                                                       CancellationCase which, double tol,
                                                       std::uint64_t seed = 0, int probes = 16) {
  if (F.arity() != m * c.total())
    throw precondition_violation("sphere map arity does not match m times the composition total");
  if (!(1 <= T[0] && T[0] < T[1] && T[1] < T[2] && T[2] < T[3] && T[3] <= F.arity()))
    throw precondition_violation("T must be an increasing 4-subset of the arity");
  std::array<int, 4> block{}, row{};
  for (std::size_t q = 0; q < 4; ++q) {
    const auto d = decompose_index(T[q], m);
    block[q] = c.block_of(d.a);
    row[q] = d.r;
  }
  bool ok = false;
  if (which == CancellationCase::mixed_rows)
    ok = block[0] < block[1] && block[1] < block[2] && block[2] < block[3] && row[0] == row[1] &&
         row[2] == row[3] && row[1] != row[2];
  else
    ok = block[0] == block[1] && block[1] == block[2] && block[2] < block[3] &&
         row[0] == row[1] && row[1] == row[2] && row[2] == row[3];
  if (!ok)
    throw precondition_violation(std::string("subset does not realize the ") + case_name(which) +
                                 " case");

  CancellationReport rep{CheckResult{std::string("cancellation.") + case_name(which)}};
  rep.check.observe_residual(0.0);
  Rng rng(seed);
  for (int t = 0; t < probes; ++t) {
    const Eigen::VectorXd v = rng.unit_vector(F.dim());
    const Eigen::VectorXd w = rng.unit_vector(F.dim());
    for (const auto& [a, b] : cancellation_pairs(which)) {
      const double x = chain_summand(F, T, Permutation4::from_cycles(a), v, w);
      const double y = chain_summand(F, T, Permutation4::from_cycles(b), v, w);
      rep.max_summand = std::max({rep.max_summand, std::abs(x), std::abs(y)});
      ++rep.check.instances;
      rep.check.observe_residual(std::abs(x + y));
      if (std::abs(x + y) > tol)
        rep.check.fail({{"pair", {a, b}}, {"subset", T}, {"summands", {x, y}},
                        {"v", to_json(v)}, {"w", to_json(w)}});
    }
  }
  return rep;
}

}  // namespace choose2
