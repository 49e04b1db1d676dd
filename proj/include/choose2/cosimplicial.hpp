#pragma once

// Cosimplicial objects built from a bimodule over the associative operad.
//
// Level k carries X(k). Cofaces d^0, ..., d^{k+1}: X(k) -> X(k+1) and
// codegeneracies s^0, ..., s^{k-1}: X(k) -> X(k-1):
//   d^i, 1 <= i <= k   right action by (1,...,2,...,1), the 2 in slot i
//   d^0                left action on (beta_1, x) by (1, k)
//   d^{k+1}            left action on (x, beta_1) by (k, 1)
//   s^j                right action by (1,...,0,...,1), the 0 in slot j+1
// beta_k is the basepoint family. For the choose-two flavors living in the
// opposite category the ladder is a simplicial pointed set: the stored maps
// are the underlying pointed-set maps and run from level k+1 (resp. k-1)
// down (resp. up) to level k.

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "choose2/bimodule_axioms.hpp"
#include "choose2/choose_two.hpp"
#include "choose2/combinatorics.hpp"
#include "choose2/divided_powers.hpp"
#include "choose2/json_io.hpp"
#include "choose2/kontsevich.hpp"
#include "choose2/phi_functor.hpp"
#include "choose2/report.hpp"
#include "choose2/sampling.hpp"
#include "choose2/sphere_map.hpp"

namespace choose2 {

enum class Variance { covariant, contravariant };

template <class T>
struct CosimplicialLadder {
  std::string flavor;
  int m = 1;
  int levels = 0;
  Variance variance = Variance::covariant;
  // Both take the covariant source level k. Covariant: x lives at level k.
  // Contravariant: x lives at the covariant target level.
  std::function<T(int, int, const T&)> coface;
  std::function<T(int, int, const T&)> codegeneracy;
  std::vector<std::vector<T>> corpus;
  std::vector<T> basepoints;  // one per level, or empty
  std::function<double(const T&, const T&)> distance;
};

inline Composition coface_composition(int k, int i) {
  if (k < 1 || i < 1 || i > k) throw std::invalid_argument("interior coface index out of range");
  std::vector<int> parts(static_cast<std::size_t>(k), 1);
  parts[static_cast<std::size_t>(i - 1)] = 2;
  return Composition(parts);
}

inline Composition codegeneracy_composition(int k, int j) {
  if (k < 1 || j < 0 || j > k - 1) throw std::invalid_argument("codegeneracy index out of range");
  std::vector<int> parts(static_cast<std::size_t>(k), 1);
  parts[static_cast<std::size_t>(j)] = 0;
  return Composition(parts);
}

namespace detail {

struct Step {
  bool coface;
  int index;
};

inline std::string word_name(const std::vector<Step>& word) {
  if (word.empty()) return "id";
  std::ostringstream os;
  for (std::size_t p = word.size(); p-- > 0;) {
    os << (word[p].coface ? "d^" : "s^") << word[p].index;
    if (p) os << ' ';
  }
  return os.str();
}

// Covariant source levels of each step of a word applied at level k.
inline std::vector<int> step_levels(const std::vector<Step>& word, int k) {
  std::vector<int> out;
  for (const auto& s : word) {
    out.push_back(k);
    k += s.coface ? 1 : -1;
  }
  return out;
}

inline int end_level(const std::vector<Step>& word, int k) {
  for (const auto& s : word) k += s.coface ? 1 : -1;
  return k;
}

template <class T>
T run_word(const CosimplicialLadder<T>& L, const std::vector<Step>& word, int k, T x) {
  const auto levels = step_levels(word, k);
  const auto apply = [&](std::size_t p, const T& y) {
    return word[p].coface ? L.coface(levels[p], word[p].index, y)
                          : L.codegeneracy(levels[p], word[p].index, y);
  };
  if (L.variance == Variance::covariant) {
    for (std::size_t p = 0; p < word.size(); ++p) x = apply(p, x);
  } else {
    for (std::size_t p = word.size(); p-- > 0;) x = apply(p, x);
  }
  return x;
}

template <class T>
void check_identity(const CosimplicialLadder<T>& L, CheckResult& res, int k,
                    const std::vector<Step>& lhs, const std::vector<Step>& rhs, double tol) {
  const int start = L.variance == Variance::covariant ? k : end_level(lhs, k);
  if (start < 0 || start > L.levels) return;
  const auto& elems = L.corpus[static_cast<std::size_t>(start)];
  for (std::size_t e = 0; e < elems.size(); ++e) {
    ++res.instances;
    const T a = run_word(L, lhs, k, elems[e]);
    const T b = run_word(L, rhs, k, elems[e]);
    const double d = L.distance(a, b);
    res.observe_residual(d);
    if (!(d <= tol))
      res.fail({{"identity", word_name(lhs) + " = " + word_name(rhs)},
                {"level", k},
                {"corpus_level", start},
                {"corpus_index", e},
                {"residual", std::isfinite(d) ? json(d) : json("shape mismatch")}});
  }
}

}  // namespace detail

// Every identity instance whose levels stay within [0, levels], on every
// corpus element.
template <class T>
std::vector<CheckResult> verify_cosimplicial_identities(const CosimplicialLadder<T>& L,
                                                        double tol = 0.0) {
  using detail::Step;
  CheckResult dd{"cosimplicial.coface_coface"};
  CheckResult ss{"cosimplicial.codegeneracy_codegeneracy"};
  CheckResult sd_shift{"cosimplicial.codegeneracy_coface_shift"};
  CheckResult sd_id{"cosimplicial.codegeneracy_coface_identity"};
  CheckResult base{"cosimplicial.basepoint"};
  for (auto* c : {&dd, &ss, &sd_shift, &sd_id}) c->observe_residual(0.0);

  for (int k = 0; k + 2 <= L.levels; ++k)
    for (int j = 1; j <= k + 2; ++j)
      for (int i = 0; i < j; ++i)
        detail::check_identity(L, dd, k, {{true, i}, {true, j}}, {{true, j - 1}, {true, i}}, tol);

  for (int k = 2; k <= L.levels; ++k)
    for (int j = 0; j <= k - 2; ++j)
      for (int i = 0; i <= j; ++i)
        detail::check_identity(L, ss, k, {{false, i}, {false, j}},
                               {{false, j + 1}, {false, i}}, tol);

  for (int k = 0; k + 1 <= L.levels; ++k)
    for (int i = 0; i <= k + 1; ++i)
      for (int j = 0; j <= k; ++j) {
        const std::vector<Step> lhs{{true, i}, {false, j}};
        if (i < j)
          detail::check_identity(L, sd_shift, k, lhs, {{false, j - 1}, {true, i}}, tol);
        else if (i == j || i == j + 1)
          detail::check_identity(L, sd_id, k, lhs, {}, tol);
        else
          detail::check_identity(L, sd_shift, k, lhs, {{false, j}, {true, i - 1}}, tol);
      }

  if (!L.basepoints.empty()) {
    const auto at = [&](int level) -> const T& { return L.basepoints[static_cast<std::size_t>(level)]; };
    for (int k = 0; k <= L.levels; ++k) {
      if (k + 1 <= L.levels) {
        for (int i = 0; i <= k + 1; ++i) {
          ++base.instances;
          const T img = L.variance == Variance::covariant ? L.coface(k, i, at(k))
                                                          : L.coface(k, i, at(k + 1));
          const T& want = L.variance == Variance::covariant ? at(k + 1) : at(k);
          if (L.distance(img, want) > tol) base.fail({{"map", "d^" + std::to_string(i)}, {"level", k}});
        }
      }
      if (k >= 1) {
        for (int j = 0; j <= k - 1; ++j) {
          ++base.instances;
          const T img = L.variance == Variance::covariant ? L.codegeneracy(k, j, at(k))
                                                          : L.codegeneracy(k, j, at(k - 1));
          const T& want = L.variance == Variance::covariant ? at(k - 1) : at(k);
          if (L.distance(img, want) > tol) base.fail({{"map", "s^" + std::to_string(j)}, {"level", k}});
        }
      }
    }
  }
  std::vector<CheckResult> out{dd, ss, sd_shift, sd_id};
  if (!L.basepoints.empty()) out.push_back(base);
  return out;
}

// ---------------------------------------------------------------- exact flavor

// Underlying pointed-set map of d^i: gamma_m B(k+1) -> gamma_m B(k).
inline GammaBElement exact_coface(int m, int k, int i, const GammaBElement& y,
                                  const GammaActions& actions = {}) {
  if (i < 0 || i > k + 1) throw std::invalid_argument("coface index out of range");
  if (i >= 1 && i <= k) return actions.rho(coface_composition(k, i), m, y);
  const bool first = i == 0;
  const Composition c(first ? std::vector<int>{1, k} : std::vector<int>{k, 1});
  const WedgeElement w = actions.lambda(c, m, y);
  if (w.is_basepoint() || w.slot() != (first ? 2 : 1)) return GammaBElement::basepoint(m, k);
  return GammaBElement(m, k, w.element());
}

// Underlying pointed-set map of s^j: gamma_m B(k-1) -> gamma_m B(k).
inline GammaBElement exact_codegeneracy(int m, int k, int j, const GammaBElement& y,
                                        const GammaActions& actions = {}) {
  return actions.rho(codegeneracy_composition(k, j), m, y);
}

inline CosimplicialLadder<GammaBElement> make_exact_ladder(int m, int levels,
                                                           const GammaActions& actions = {}) {
  if (m < 1 || levels < 0) throw std::invalid_argument("bad ladder shape");
  CosimplicialLadder<GammaBElement> L;
  L.flavor = "exact";
  L.m = m;
  L.levels = levels;
  L.variance = Variance::contravariant;
  L.coface = [m, actions](int k, int i, const GammaBElement& y) {
    return exact_coface(m, k, i, y, actions);
  };
  L.codegeneracy = [m, actions](int k, int j, const GammaBElement& y) {
    return exact_codegeneracy(m, k, j, y, actions);
  };
  for (int k = 0; k <= levels; ++k) {
    L.corpus.push_back(detail::gamma_elements(m, k));
    L.basepoints.push_back(GammaBElement::basepoint(m, k));
  }
  L.distance = [](const GammaBElement& a, const GammaBElement& b) { return a == b ? 0.0 : 1.0; };
  return L;
}

// ---------------------------------------------------------------- numeric flavor

inline SphereMap constant_pole_map(int arity, const Eigen::VectorXd& pole) {
  return SphereMap(arity, static_cast<int>(pole.size()), pole);
}

inline SphereMap numeric_coface(int m, int k, int i, const SphereMap& f,
                                const GammaActions& actions = {}) {
  if (i < 0 || i > k + 1) throw std::invalid_argument("coface index out of range");
  if (f.arity() != k * m) throw std::invalid_argument("sphere map arity does not match level");
  if (i >= 1 && i <= k) return right_action_K(f, coface_composition(k, i), m, actions);
  const SphereMap beta = constant_pole_map(m, f.south_pole());
  if (i == 0) return left_action_K({beta, f}, Composition({1, k}), m, actions);
  return left_action_K({f, beta}, Composition({k, 1}), m, actions);
}

inline SphereMap numeric_codegeneracy(int m, int k, int j, const SphereMap& f,
                                      const GammaActions& actions = {}) {
  if (f.arity() != k * m) throw std::invalid_argument("sphere map arity does not match level");
  return right_action_K(f, codegeneracy_composition(k, j), m, actions);
}

inline double sphere_distance(const SphereMap& a, const SphereMap& b) {
  if (a.arity() != b.arity() || a.dim() != b.dim())
    return std::numeric_limits<double>::infinity();
  return std::max(max_difference(a, b), (a.south_pole() - b.south_pole()).cwiseAbs().maxCoeff());
}

// Corpus: per level, corpus_size Gauss maps of k*m points in the cube.
inline CosimplicialLadder<SphereMap> make_numeric_ladder(int m, int levels, int n, int corpus_size,
                                                         std::uint64_t seed,
                                                         const GammaActions& actions = {}) {
  if (m < 1 || levels < 0 || corpus_size < 0) throw std::invalid_argument("bad ladder shape");
  CosimplicialLadder<SphereMap> L;
  L.flavor = "numeric";
  L.m = m;
  L.levels = levels;
  L.coface = [m, actions](int k, int i, const SphereMap& f) {
    return numeric_coface(m, k, i, f, actions);
  };
  L.codegeneracy = [m, actions](int k, int j, const SphereMap& f) {
    return numeric_codegeneracy(m, k, j, f, actions);
  };
  const Eigen::VectorXd pole = default_south_pole(n);
  for (int k = 0; k <= levels; ++k) {
    std::vector<SphereMap> elems;
    for (int t = 0; t < corpus_size; ++t)
      elems.push_back(gauss_map(
          sample_configuration(k * m, n, Domain::cube, 1e-3,
                               derive_seed(seed, static_cast<std::uint64_t>(k * 100000 + t))),
          pole));
    L.corpus.push_back(std::move(elems));
    L.basepoints.push_back(constant_pole_map(k * m, pole));
  }
  L.distance = sphere_distance;
  return L;
}

// ---------------------------------------------------------------- realized flavor

// The ladder of Phi_X(gamma_m B); beta_k is the constant-basepoint map (id 0).
inline CosimplicialLadder<ElementId> make_phi_ladder(const FinitePointedSet& X, int m,
                                                     int levels) {
  auto bm = std::make_shared<FiniteBimodule>(realize_bimodule(X, m, std::max(levels, 2)));
  CosimplicialLadder<ElementId> L;
  L.flavor = "realized";
  L.m = m;
  L.levels = levels;
  L.coface = [bm](int k, int i, const ElementId& x) -> ElementId {
    if (i >= 1 && i <= k) return bm->right(coface_composition(k, i), x);
    const std::vector<ElementId> fs = i == 0 ? std::vector<ElementId>{0, x}
                                             : std::vector<ElementId>{x, 0};
    return bm->left(Composition(i == 0 ? std::vector<int>{1, k} : std::vector<int>{k, 1}), fs);
  };
  L.codegeneracy = [bm](int k, int j, const ElementId& x) -> ElementId {
    return bm->right(codegeneracy_composition(k, j), x);
  };
  for (int k = 0; k <= levels; ++k) {
    std::vector<ElementId> elems(bm->size(k));
    for (std::size_t p = 0; p < elems.size(); ++p) elems[p] = static_cast<ElementId>(p);
    L.corpus.push_back(std::move(elems));
    L.basepoints.push_back(0);
  }
  L.distance = [](const ElementId& a, const ElementId& b) { return a == b ? 0.0 : 1.0; };
  return L;
}

// Building the ladder on gamma_m B and then applying Phi_X levelwise agrees
// with building it on the realization: each realized structure map is
// precomposition with the exact one.
inline CheckResult check_phi_ladder_commutes(const FinitePointedSet& X, int m, int levels) {
  CheckResult res{"cosimplicial.realization_commutes"};
  const auto phi = make_phi_ladder(X, m, levels);
  const auto exact = make_exact_ladder(m, levels);
  const auto compare = [&](const std::string& name, int k, int idx, int target, ElementId x,
                           ElementId image, const std::function<GammaBElement(const GammaBElement&)>& under) {
    const PointedMapCodec in(X.size(), m * k);
    const PointedMapCodec out(X.size(), m * target);
    for (const auto& e : detail::gamma_elements(m, target)) {
      ++res.instances;
      const GammaBElement back = under(e);
      const int want = in.value(x, back.element().ordinal());
      const int got = out.value(image, e.element().ordinal());
      if (want != got)
        res.fail({{"map", name + std::to_string(idx)}, {"level", k}, {"map_code", x},
                  {"element", to_json(e)}});
    }
  };
  for (int k = 0; k <= levels; ++k) {
    for (ElementId x : phi.corpus[static_cast<std::size_t>(k)]) {
      if (k + 1 <= levels)
        for (int i = 0; i <= k + 1; ++i)
          compare("d^", k, i, k + 1, x, phi.coface(k, i, x),
                  [&](const GammaBElement& e) { return exact.coface(k, i, e); });
      if (k >= 1)
        for (int j = 0; j <= k - 1; ++j)
          compare("s^", k, j, k - 1, x, phi.codegeneracy(k, j, x),
                  [&](const GammaBElement& e) { return exact.codegeneracy(k, j, e); });
    }
  }
  return res;
}

}  // namespace choose2
