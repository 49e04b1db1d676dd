#pragma once

// Configuration-space cofaces and codegeneracies with boundary anchors.
//
// A level-k element has k*m interior points plus two anchors: overall
// position 1 is x_-inf, position k*m + 2 is x_+inf, and interior block b
// (1-based) occupies positions 1 + (b-1)m + r, r = 1..m. The coface d^j
// doubles block j; d^0 and d^{k+1} double the anchors m times. A new point
// remembers the old point it copies. Pairs of copies of one point take u;
// every other pair copies the old value of f.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "choose2/cosimplicial.hpp"
#include "choose2/errors.hpp"
#include "choose2/kontsevich.hpp"
#include "choose2/report.hpp"
#include "choose2/sampling.hpp"
#include "choose2/sphere_map.hpp"

namespace choose2 {

struct BoundaryAnchors {
  Eigen::VectorXd minus;
  Eigen::VectorXd plus;
  Eigen::VectorXd u;

  int dim() const { return static_cast<int>(u.size()); }

  void validate() const {
    const auto n = u.size();
    if (n < 2 || minus.size() != n || plus.size() != n)
      throw std::invalid_argument("anchors and u must share a dimension >= 2");
    if (minus[n - 1] != 0.0 || plus[n - 1] != 1.0)
      throw std::invalid_argument("anchors must lie on the bottom and top faces");
    if (std::abs(u.norm() - 1.0) > 1e-12) throw std::invalid_argument("u must be a unit vector");
  }
};

inline BoundaryAnchors default_anchors(int n) {
  BoundaryAnchors a{Eigen::VectorXd::Constant(n, 0.5), Eigen::VectorXd::Constant(n, 0.5),
                    default_up_vector(n)};
  a.minus[n - 1] = 0.0;
  a.plus[n - 1] = 1.0;
  return a;
}

inline int interior_position(int block, int r, int m) { return 1 + (block - 1) * m + r; }

namespace detail {

inline int config_level(const DecoratedConfiguration& dc, int m) {
  if (m < 1) throw std::invalid_argument("block width m must be >= 1");
  const int interior = dc.config.arity() - 2;
  if (interior < 0 || interior % m != 0)
    throw std::invalid_argument("point count is not k*m + 2");
  return interior / m;
}

inline void require_anchors(const DecoratedConfiguration& dc, const BoundaryAnchors& a) {
  const int N = dc.config.arity();
  if (N < 2 || dc.config.dim() != a.dim() || dc.config.point(1) != a.minus ||
      dc.config.point(N) != a.plus)
    throw precondition_violation("first and last points must be the anchors");
}

// New configuration whose point p copies old point origin[p - 1].
inline DecoratedConfiguration pull_back(const DecoratedConfiguration& dc,
                                        const std::vector<int>& origin,
                                        const Eigen::VectorXd& u) {
  const int N = static_cast<int>(origin.size());
  DecoratedConfiguration out{Configuration{Eigen::MatrixXd(dc.config.dim(), N)},
                             SphereMap(N, dc.f.dim(), dc.f.south_pole())};
  for (int p = 1; p <= N; ++p) out.config.points.col(p - 1) = dc.config.point(origin[static_cast<std::size_t>(p - 1)]);
  for (int p = 1; p <= N; ++p)
    for (int q = p + 1; q <= N; ++q) {
      const int a = origin[static_cast<std::size_t>(p - 1)];
      const int b = origin[static_cast<std::size_t>(q - 1)];
      out.f.set(p, q, a == b ? u : dc.f.at(a, b));
    }
  return out;
}

}  // namespace detail

inline DecoratedConfiguration config_coface(const DecoratedConfiguration& dc, int j, int m,
                                            const BoundaryAnchors& anchors) {
  const int k = detail::config_level(dc, m);
  detail::require_anchors(dc, anchors);
  if (j < 0 || j > k + 1) throw std::invalid_argument("coface index out of range");
  const int last = k * m + 2;
  std::vector<int> origin;
  if (j == 0) {
    origin.push_back(1);
    for (int r = 1; r <= m; ++r) origin.push_back(1);
    for (int p = 2; p <= last; ++p) origin.push_back(p);
  } else if (j == k + 1) {
    for (int p = 1; p < last; ++p) origin.push_back(p);
    for (int r = 1; r <= m; ++r) origin.push_back(last);
    origin.push_back(last);
  } else {
    for (int p = 1; p <= interior_position(j, m, m); ++p) origin.push_back(p);
    for (int r = 1; r <= m; ++r) origin.push_back(interior_position(j, r, m));
    for (int p = interior_position(j, m, m) + 1; p <= last; ++p) origin.push_back(p);
  }
  return detail::pull_back(dc, origin, anchors.u);
}

// Point-at-a-time doubling for m = 1: position j + 1 is doubled in place.
inline DecoratedConfiguration sinha_coface(const DecoratedConfiguration& dc, int j,
                                           const BoundaryAnchors& anchors) {
  const int k = detail::config_level(dc, 1);
  detail::require_anchors(dc, anchors);
  if (j < 0 || j > k + 1) throw std::invalid_argument("coface index out of range");
  const int doubled = j + 1;
  std::vector<int> origin;
  for (int p = 1; p <= k + 3; ++p) origin.push_back(p <= doubled ? p : p - 1);
  return detail::pull_back(dc, origin, anchors.u);
}

namespace detail {

inline DecoratedConfiguration restrict_to(const DecoratedConfiguration& dc,
                                          const std::vector<int>& keep) {
  const int N = static_cast<int>(keep.size());
  DecoratedConfiguration out{Configuration{Eigen::MatrixXd(dc.config.dim(), N)},
                             SphereMap(N, dc.f.dim(), dc.f.south_pole())};
  for (int p = 1; p <= N; ++p) out.config.points.col(p - 1) = dc.config.point(keep[static_cast<std::size_t>(p - 1)]);
  for (int p = 1; p <= N; ++p)
    for (int q = p + 1; q <= N; ++q)
      out.f.set(p, q, dc.f.stored(keep[static_cast<std::size_t>(p - 1)], keep[static_cast<std::size_t>(q - 1)]));
  return out;
}

}  // namespace detail

// s^j deletes interior block j + 1, j in [0, k-1].
inline DecoratedConfiguration config_codegeneracy(const DecoratedConfiguration& dc, int j, int m) {
  const int k = detail::config_level(dc, m);
  if (k < 1) throw std::invalid_argument("level 0 has no codegeneracies");
  if (j < 0 || j > k - 1) throw std::invalid_argument("codegeneracy index out of range");
  std::vector<int> keep;
  for (int p = 1; p <= k * m + 2; ++p)
    if (p <= interior_position(j + 1, 0, m) || p > interior_position(j + 1, m, m)) keep.push_back(p);
  return detail::restrict_to(dc, keep);
}

// Keeps the anchors and interior points (a-1)m + r.
inline DecoratedConfiguration projection_p_r(const DecoratedConfiguration& dc, int m, int r) {
  const int k = detail::config_level(dc, m);
  if (r < 1 || r > m) throw std::invalid_argument("row r outside [1, m]");
  std::vector<int> keep{1};
  for (int a = 1; a <= k; ++a) keep.push_back(interior_position(a, r, m));
  keep.push_back(k * m + 2);
  return detail::restrict_to(dc, keep);
}

inline double decorated_distance(const DecoratedConfiguration& a, const DecoratedConfiguration& b) {
  if (a.config.points.rows() != b.config.points.rows() ||
      a.config.points.cols() != b.config.points.cols())
    return std::numeric_limits<double>::infinity();
  const double fd = sphere_distance(a.f, b.f);
  if (a.config.points.size() == 0) return fd;
  return std::max(fd, (a.config.points - b.config.points).cwiseAbs().maxCoeff());
}

// Level k: k*m interior points sampled inside the open cube, decorated with
// the Gauss map of all k*m + 2 points.
inline DecoratedConfiguration sample_decorated(int k, int m, const BoundaryAnchors& anchors,
                                               std::uint64_t seed, double min_sep = 1e-3) {
  const int n = anchors.dim();
  const Configuration inner = sample_configuration(k * m, n, Domain::cube, min_sep, seed);
  Configuration all{Eigen::MatrixXd(n, k * m + 2)};
  all.points.col(0) = anchors.minus;
  for (int p = 0; p < k * m; ++p) {
    Eigen::VectorXd x = inner.points.col(p);
    x[n - 1] = 0.05 + 0.9 * x[n - 1];
    all.points.col(p + 1) = x;
  }
  all.points.col(k * m + 1) = anchors.plus;
  return {all, gauss_map(all)};
}

// sinha = true uses the point-at-a-time cofaces (m must be 1).
inline CosimplicialLadder<DecoratedConfiguration> make_config_ladder(
    int m, int levels, const BoundaryAnchors& anchors, int corpus_size, std::uint64_t seed,
    bool sinha = false) {
  anchors.validate();
  if (sinha && m != 1) throw std::invalid_argument("point-at-a-time cofaces need m = 1");
  CosimplicialLadder<DecoratedConfiguration> L;
  L.flavor = sinha ? "configuration-sinha" : "configuration";
  L.m = m;
  L.levels = levels;
  L.coface = [m, anchors, sinha](int, int j, const DecoratedConfiguration& dc) {
    return sinha ? sinha_coface(dc, j, anchors) : config_coface(dc, j, m, anchors);
  };
  L.codegeneracy = [m](int, int j, const DecoratedConfiguration& dc) {
    return config_codegeneracy(dc, j, m);
  };
  for (int k = 0; k <= levels; ++k) {
    std::vector<DecoratedConfiguration> elems;
    for (int t = 0; t < corpus_size; ++t)
      elems.push_back(sample_decorated(
          k, m, anchors, derive_seed(seed, static_cast<std::uint64_t>(k * 100000 + t))));
    L.corpus.push_back(std::move(elems));
  }
  L.distance = decorated_distance;
  return L;
}

// p_r d^j = d^j p_r and p_r s^j = s^j p_r, where the right-hand maps are the
// m = 1 ones; plus the m = 1 reduction of block cofaces to point doubling.
inline std::vector<CheckResult> verify_projections(
    const CosimplicialLadder<DecoratedConfiguration>& L, const BoundaryAnchors& anchors) {
  CheckResult cof{"projection.coface"};
  CheckResult cod{"projection.codegeneracy"};
  CheckResult sinha{"projection.point_doubling_reduction"};
  for (auto* c : {&cof, &cod, &sinha}) c->observe_residual(0.0);
  const int m = L.m;
  const auto record = [](CheckResult& c, double d, json w) {
    ++c.instances;
    c.observe_residual(d);
    if (d != 0.0) c.fail(std::move(w));
  };
  for (int k = 0; k <= L.levels; ++k) {
    const auto& elems = L.corpus[static_cast<std::size_t>(k)];
    for (std::size_t e = 0; e < elems.size(); ++e) {
      const auto& x = elems[e];
      for (int r = 1; r <= m; ++r) {
        const auto px = projection_p_r(x, m, r);
        if (k + 1 <= L.levels)
          for (int j = 0; j <= k + 1; ++j)
            record(cof,
                   decorated_distance(projection_p_r(config_coface(x, j, m, anchors), m, r),
                                      config_coface(px, j, 1, anchors)),
                   {{"level", k}, {"index", j}, {"row", r}, {"corpus_index", e}});
        for (int j = 0; j + 1 <= k; ++j)
          record(cod,
                 decorated_distance(projection_p_r(config_codegeneracy(x, j, m), m, r),
                                    config_codegeneracy(px, j, 1)),
                 {{"level", k}, {"index", j}, {"row", r}, {"corpus_index", e}});
        if (k + 1 <= L.levels)
          for (int j = 0; j <= k + 1; ++j)
            record(sinha,
                   decorated_distance(config_coface(px, j, 1, anchors),
                                      sinha_coface(px, j, anchors)),
                   {{"level", k}, {"index", j}, {"row", r}, {"corpus_index", e}});
      }
    }
  }
  return {cof, cod, sinha};
}

// Membership of coface images, as a sanity check of the boundary strata.
inline CheckResult verify_coface_membership(const CosimplicialLadder<DecoratedConfiguration>& L,
                                            const Tolerances& tol = {}) {
  CheckResult res{"configuration.coface_membership"};
  res.observe_residual(0.0);
  for (int k = 0; k + 1 <= L.levels; ++k) {
    const auto& elems = L.corpus[static_cast<std::size_t>(k)];
    for (std::size_t e = 0; e < elems.size(); ++e)
      for (int j = 0; j <= k + 1; ++j) {
        const auto y = L.coface(k, j, elems[e]);
        for (const auto& c : membership_C(y, tol)) {
          ++res.instances;
          if (c.residual) res.observe_residual(*c.residual);
          if (!c.pass)
            res.fail({{"level", k}, {"index", j}, {"corpus_index", e}, {"check", c.name},
                      {"witness", c.witness}});
        }
      }
  }
  return res;
}

}  // namespace choose2
