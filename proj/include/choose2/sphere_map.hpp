#pragma once

// Sphere-valued pair maps and configurations.
//
// A SphereMap of arity k in R^n stores one unit vector per pair i < j (column
// ordinal - 1 of an n x C(k,2) matrix). Reading (j, i) with j > i gives the
// negated vector, and the basepoint reads as the south pole.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "choose2/choose_two.hpp"
#include "choose2/errors.hpp"
#include "choose2/sampling.hpp"

namespace choose2 {

inline Eigen::VectorXd default_south_pole(int n) {
  Eigen::VectorXd s = Eigen::VectorXd::Zero(n);
  s[n - 1] = -1.0;
  return s;
}

inline Eigen::VectorXd default_up_vector(int n) {
  Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
  u[n - 1] = 1.0;
  return u;
}

struct Tolerances {
  double unit = 1e-9;
  double align = 1e-9;
  double three_dependence = 1e-9;
  double four_consistency = 1e-8;
  double coincide = 1e-9;
};

class SphereMap {
 public:
  // Every pair starts at the south pole.
  SphereMap(int arity, int dim) : SphereMap(arity, dim, default_south_pole(dim)) {}

  SphereMap(int arity, int dim, Eigen::VectorXd south_pole) : k_(arity), pole_(std::move(south_pole)) {
    if (arity < 0) throw std::invalid_argument("arity must be nonnegative");
    if (dim < 2) throw std::invalid_argument("ambient dimension must be >= 2");
    if (pole_.size() != dim) throw std::invalid_argument("south pole has the wrong dimension");
    table_.resize(dim, static_cast<Eigen::Index>(binomial(arity, 2)));
    for (Eigen::Index c = 0; c < table_.cols(); ++c) table_.col(c) = pole_;
  }

  int arity() const { return k_; }
  int dim() const { return static_cast<int>(pole_.size()); }
  const Eigen::VectorXd& south_pole() const { return pole_; }
  const Eigen::MatrixXd& table() const { return table_; }

  // Stored value on the unordered pair {i, j}.
  Eigen::VectorXd stored(int i, int j) const {
    return table_.col(column(std::min(i, j), std::max(i, j)));
  }

  // Antisymmetric extension.
  Eigen::VectorXd at(int i, int j) const {
    if (i == j) throw std::invalid_argument("diagonal pair has no value");
    return i < j ? Eigen::VectorXd(table_.col(column(i, j)))
                 : Eigen::VectorXd(-table_.col(column(j, i)));
  }

  Eigen::VectorXd at(const BElement& e) const {
    if (e.arity() != k_) throw std::invalid_argument("element arity does not match map");
    return e.is_basepoint() ? pole_ : stored(e.first(), e.second());
  }

  void set(int i, int j, const Eigen::VectorXd& v) {
    if (v.size() != dim()) throw std::invalid_argument("vector has the wrong dimension");
    if (i < j)
      table_.col(column(i, j)) = v;
    else
      table_.col(column(j, i)) = -v;
  }

  // Largest deviation of a stored norm from 1.
  double unit_defect() const {
    double worst = std::abs(pole_.norm() - 1.0);
    for (Eigen::Index c = 0; c < table_.cols(); ++c)
      worst = std::max(worst, std::abs(table_.col(c).norm() - 1.0));
    return worst;
  }

  void require_unit(double tol) const {
    if (unit_defect() > tol)
      throw std::invalid_argument("sphere map has a vector off the unit sphere");
  }

  // Bitwise equality of tables and poles.
  friend bool operator==(const SphereMap& a, const SphereMap& b) {
    return a.k_ == b.k_ && a.pole_.size() == b.pole_.size() && a.pole_ == b.pole_ &&
           a.table_ == b.table_;
  }

 private:
  Eigen::Index column(int i, int j) const {
    if (!(1 <= i && i < j && j <= k_))
      throw std::invalid_argument("pair (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") outside arity " + std::to_string(k_));
    return static_cast<Eigen::Index>(BElement::pair(k_, i, j).ordinal() - 1);
  }

  int k_;
  Eigen::VectorXd pole_;
  Eigen::MatrixXd table_;
};

// Largest entrywise difference between two maps of the same shape.
inline double max_difference(const SphereMap& a, const SphereMap& b) {
  if (a.arity() != b.arity() || a.dim() != b.dim())
    throw std::invalid_argument("sphere maps differ in shape");
  if (a.table().size() == 0) return 0.0;
  return (a.table() - b.table()).cwiseAbs().maxCoeff();
}

// Points as columns of an n x k matrix.
struct Configuration {
  Eigen::MatrixXd points;

  int arity() const { return static_cast<int>(points.cols()); }
  int dim() const { return static_cast<int>(points.rows()); }
  Eigen::VectorXd point(int i) const { return points.col(i - 1); }

  double min_separation() const {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < arity(); ++i)
      for (int j = i + 1; j < arity(); ++j)
        best = std::min(best, (points.col(i) - points.col(j)).norm());
    return best;
  }
};

// f(i, j) = (x_i - x_j) / |x_i - x_j|.
inline SphereMap gauss_map(const Configuration& c,
                           const Eigen::VectorXd& south_pole = Eigen::VectorXd()) {
  SphereMap f(c.arity(), c.dim(),
              south_pole.size() ? south_pole : default_south_pole(c.dim()));
  for (int i = 1; i <= c.arity(); ++i)
    for (int j = i + 1; j <= c.arity(); ++j) {
      const Eigen::VectorXd d = c.point(i) - c.point(j);
      const double len = d.norm();
      if (len == 0.0) throw degenerate_configuration(i, j);
      f.set(i, j, d / len);
    }
  return f;
}

// Centroid at the origin, largest point norm 1.
inline Configuration normalize_configuration(const Configuration& c) {
  if (c.arity() < 2) throw std::invalid_argument("normalization needs at least two points");
  Configuration out{c.points.colwise() - c.points.rowwise().mean()};
  const double radius = out.points.colwise().norm().maxCoeff();
  if (radius == 0.0) throw degenerate_configuration(1, 2);
  out.points /= radius;
  return out;
}

enum class Domain { cube, ball };

inline Configuration sample_configuration(int k, int n, Domain domain, double min_sep,
                                          std::uint64_t seed,
                                          std::size_t max_attempts = 100000) {
  if (k < 0 || n < 1) throw std::invalid_argument("bad configuration shape");
  if (min_sep < 0) throw std::invalid_argument("minimum separation must be nonnegative");
  Rng rng(seed);
  Configuration c{Eigen::MatrixXd(n, k)};
  std::size_t attempts = 0;
  for (int i = 0; i < k; ++i) {
    for (;;) {
      if (++attempts > max_attempts)
        throw sampling_failure("could not place " + std::to_string(k) + " points in dimension " +
                               std::to_string(n) + " with separation " + std::to_string(min_sep) +
                               " within " + std::to_string(max_attempts) + " attempts");
      Eigen::VectorXd x(n);
      if (domain == Domain::cube) {
        for (int p = 0; p < n; ++p) x[p] = rng.uniform();
      } else {
        x = rng.unit_vector(n) * std::pow(rng.uniform(), 1.0 / n);
      }
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        const double d = (c.points.col(j) - x).norm();
        ok = d >= min_sep && d > 0.0;
      }
      if (ok) {
        c.points.col(i) = x;
        break;
      }
    }
  }
  return c;
}

// Points (possibly coincident) together with a sphere map of the same arity.
struct DecoratedConfiguration {
  Configuration config;
  SphereMap f;

  friend bool operator==(const DecoratedConfiguration& a, const DecoratedConfiguration& b) {
    return a.config.points.rows() == b.config.points.rows() &&
           a.config.points.cols() == b.config.points.cols() &&
           a.config.points == b.config.points && a.f == b.f;
  }
};

}  // namespace choose2
