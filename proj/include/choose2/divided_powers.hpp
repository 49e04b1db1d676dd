#pragma once

// Divided powers of the choose-two operad: gamma_m B(n) = B(m n).
//
// An index i in [1, m n] is read as column a_i and row r_i through
// i = (a_i - 1) m + r_i. The bimodule structure acts row by row: a pair whose
// two indices share a row r is acted on through its columns exactly as B acts
// on (a_i, a_j), and re-encoded in row r; every other pair goes to the
// basepoint.

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "choose2/choose_two.hpp"
#include "choose2/combinatorics.hpp"

namespace choose2 {

// An element of gamma_m B(blocks), i.e. of B(m * blocks).
class GammaBElement {
 public:
  GammaBElement(int m, int blocks, BElement element)
      : m_(m), blocks_(blocks), element_(element) {
    if (m < 1) throw std::invalid_argument("row count m must be >= 1");
    if (blocks < 0 || element.arity() != m * blocks)
      throw std::invalid_argument("element arity must equal m * blocks");
  }

  static GammaBElement basepoint(int m, int blocks) {
    return {m, blocks, BElement::basepoint(m * blocks)};
  }
  static GammaBElement pair(int m, int blocks, int i, int j) {
    return {m, blocks, BElement::pair(m * blocks, i, j)};
  }

  int rows() const { return m_; }
  int blocks() const { return blocks_; }
  const BElement& element() const { return element_; }
  bool is_basepoint() const { return element_.is_basepoint(); }

  friend bool operator==(const GammaBElement&, const GammaBElement&) = default;
  friend std::ostream& operator<<(std::ostream& os, const GammaBElement& e) {
    return os << e.element_ << "@gamma" << e.m_ << "B(" << e.blocks_ << ')';
  }

 private:
  int m_;
  int blocks_;
  BElement element_;
};

namespace detail {

inline void require_shape(const Composition& c, int m, const GammaBElement& e) {
  if (m < 1) throw std::invalid_argument("row count m must be >= 1");
  if (e.rows() != m || e.blocks() != c.total())
    throw std::invalid_argument("element of gamma_" + std::to_string(e.rows()) + "B(" +
                                std::to_string(e.blocks()) + ") does not match m = " +
                                std::to_string(m) + " and composition total " +
                                std::to_string(c.total()));
}

}  // namespace detail

// Left action: same row r, both columns in block s -> slot s, re-indexed
// within the block; anything else -> basepoint.
inline WedgeElement lambda_m(const Composition& c, int m, const GammaBElement& e) {
  detail::require_shape(c, m, e);
  if (e.is_basepoint()) return WedgeElement::basepoint();
  const auto di = decompose_index(e.element().first(), m);
  const auto dj = decompose_index(e.element().second(), m);
  if (di.r != dj.r || di.a >= dj.a) return WedgeElement::basepoint();
  const int s = c.block_of(di.a);
  if (c.block_of(dj.a) != s) return WedgeElement::basepoint();
  const int offset = c.partial_sum(s);
  const int r = di.r;
  return {s, BElement::pair(m * c.part(s), (di.a - offset - 1) * m + r,
                            (dj.a - offset - 1) * m + r)};
}

// Right action: same row r, columns in blocks s < t -> ((s-1)m + r, (t-1)m + r)
// in gamma_m B(k); anything else -> basepoint.
inline GammaBElement rho_m(const Composition& c, int m, const GammaBElement& e) {
  detail::require_shape(c, m, e);
  const int k = c.length();
  if (e.is_basepoint()) return GammaBElement::basepoint(m, k);
  const auto di = decompose_index(e.element().first(), m);
  const auto dj = decompose_index(e.element().second(), m);
  if (di.r != dj.r) return GammaBElement::basepoint(m, k);
  const int s = c.block_of(di.a);
  const int t = c.block_of(dj.a);
  if (s >= t) return GammaBElement::basepoint(m, k);
  return GammaBElement::pair(m, k, compose_index(s, di.r, m), compose_index(t, di.r, m));
}

// Underlying pointed-set map of alpha_m in arity n: the injection
// v_r B(n) -> gamma_m B(n), (i, j)_r -> ((i-1)m + r, (j-1)m + r).
// As a bimodule morphism it points the other way (gamma_m B -> v_r B) in the
// opposite category.
inline GammaBElement alpha_m_embed(int m, int r, const BElement& e) {
  if (m < 1 || r < 1 || r > m)
    throw std::invalid_argument("row r = " + std::to_string(r) + " outside [1, " +
                                std::to_string(m) + "]");
  if (e.is_basepoint()) return GammaBElement::basepoint(m, e.arity());
  return GammaBElement::pair(m, e.arity(), compose_index(e.first(), r, m),
                             compose_index(e.second(), r, m));
}

// m x n matrix with two entries equal to one (a pair) or none (the basepoint).
class ZeroOneMatrix {
 public:
  ZeroOneMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 0) throw std::invalid_argument("bad matrix shape");
    cells_.assign(static_cast<std::size_t>(rows * cols), 0);
  }

  // Raw entries in row-major order; validated.
  ZeroOneMatrix(int rows, int cols, std::vector<int> entries) : ZeroOneMatrix(rows, cols) {
    if (entries.size() != cells_.size())
      throw std::invalid_argument("entry count does not match matrix shape");
    int ones = 0;
    for (std::size_t p = 0; p < entries.size(); ++p) {
      if (entries[p] != 0 && entries[p] != 1)
        throw std::invalid_argument("matrix entries must be 0 or 1");
      ones += entries[p];
      cells_[p] = static_cast<std::uint8_t>(entries[p]);
    }
    if (ones != 0 && ones != 2)
      throw std::invalid_argument("matrix must have exactly zero or two ones, found " +
                                  std::to_string(ones));
  }

  static ZeroOneMatrix encode(const GammaBElement& e) {
    ZeroOneMatrix M(e.rows(), e.blocks());
    if (!e.is_basepoint()) {
      for (int idx : {e.element().first(), e.element().second()}) {
        const auto d = decompose_index(idx, e.rows());
        M.set(d.r, d.a);
      }
    }
    return M;
  }

  GammaBElement decode() const {
    std::vector<int> idx;
    for (int a = 1; a <= cols_; ++a)
      for (int r = 1; r <= rows_; ++r)
        if (at(r, a)) idx.push_back(compose_index(a, r, rows_));
    if (idx.empty()) return GammaBElement::basepoint(rows_, cols_);
    return GammaBElement::pair(rows_, cols_, idx[0], idx[1]);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_zero() const {
    for (auto v : cells_)
      if (v) return false;
    return true;
  }
  bool at(int r, int a) const { return cells_[index(r, a)] != 0; }
  void set(int r, int a) { cells_[index(r, a)] = 1; }

  // Positions (row, column) of the ones in column-major reading order.
  std::vector<std::pair<int, int>> ones() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= cols_; ++a)
      for (int r = 1; r <= rows_; ++r)
        if (at(r, a)) out.emplace_back(r, a);
    return out;
  }

  friend bool operator==(const ZeroOneMatrix&, const ZeroOneMatrix&) = default;

 private:
  std::size_t index(int r, int a) const {
    if (r < 1 || r > rows_ || a < 1 || a > cols_)
      throw std::invalid_argument("matrix position out of range");
    return static_cast<std::size_t>((r - 1) * cols_ + (a - 1));
  }

  int rows_;
  int cols_;
  std::vector<std::uint8_t> cells_;
};

enum class ActionSide { left, right };

// Result of the matrix oracle: for the right side slot is 0 and the matrix
// has k columns; for the left side slot is the wedge slot (0 and an empty
// zero matrix for the basepoint).
struct MatrixImage {
  int slot;
  ZeroOneMatrix matrix;

  friend bool operator==(const MatrixImage&, const MatrixImage&) = default;
};

// Row-wise application of the B bimodule structure to a matrix.
inline MatrixImage matrix_oracle(const Composition& c, int m, const ZeroOneMatrix& M,
                                 ActionSide side) {
  if (M.rows() != m || M.cols() != c.total())
    throw std::invalid_argument("matrix shape does not match m and composition total");
  const auto ones = M.ones();
  const auto zero_image = [&] {
    if (side == ActionSide::right) return MatrixImage{0, ZeroOneMatrix(m, c.length())};
    return MatrixImage{0, ZeroOneMatrix(m, 0)};
  };
  if (ones.empty()) return zero_image();
  if (ones.size() != 2) throw std::invalid_argument("malformed matrix");
  const auto [r1, a1] = ones[0];
  const auto [r2, a2] = ones[1];
  if (r1 != r2) return zero_image();
  const BElement columns = BElement::pair(c.total(), a1, a2);
  if (side == ActionSide::right) {
    const BElement image = rho_action(c, columns);
    MatrixImage out{0, ZeroOneMatrix(m, c.length())};
    if (!image.is_basepoint()) {
      out.matrix.set(r1, image.first());
      out.matrix.set(r1, image.second());
    }
    return out;
  }
  const WedgeElement image = lambda_action(c, columns);
  if (image.is_basepoint()) return zero_image();
  MatrixImage out{image.slot(), ZeroOneMatrix(m, c.part(image.slot()))};
  out.matrix.set(r1, image.element().first());
  out.matrix.set(r1, image.element().second());
  return out;
}

// The structure maps used by the verifiers below, swappable so that
// negative controls can inject corrupted versions.
struct GammaActions {
  std::function<GammaBElement(const Composition&, int, const GammaBElement&)> rho = rho_m;
  std::function<WedgeElement(const Composition&, int, const GammaBElement&)> lambda = lambda_m;
};

using AlphaEmbedding = std::function<GammaBElement(int, int, const BElement&)>;

}  // namespace choose2
