#pragma once

#include <stdexcept>
#include <vector>

#include "polynomial.hpp"
#include "rational.hpp"

namespace dunkl {

// Dense matrix of exact rationals. Only what the verification suites need:
// construction, rank (fraction-free), and row access.
class RationalMatrix {
 public:
  RationalMatrix() : RationalMatrix(0, 0) {}
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, Rational(0)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return entries_[static_cast<size_t>(r) * cols_ + c]; }

  // Exact rank via Bareiss fraction-free elimination on the numerators after
  // clearing denominators row by row.
  int rank() const {
    std::vector<std::vector<Integer>> m(rows_, std::vector<Integer>(cols_));
    for (int r = 0; r < rows_; ++r) {
      Integer lcm(1);
      for (int c = 0; c < cols_; ++c) {
        lcm = boost::multiprecision::lcm(lcm, denominator(at(r, c)));
      }
      for (int c = 0; c < cols_; ++c) {
        m[r][c] = numerator(at(r, c)) * (lcm / denominator(at(r, c)));
      }
    }
    int rank = 0;
    Integer prev_pivot(1);
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
      int pivot_row = -1;
      for (int r = rank; r < rows_; ++r) {
        if (m[r][col] != 0) {
          pivot_row = r;
          break;
        }
      }
      if (pivot_row < 0) continue;
      std::swap(m[rank], m[pivot_row]);
      const Integer pivot = m[rank][col];
      for (int r = rank + 1; r < rows_; ++r) {
        for (int c = col + 1; c < cols_; ++c) {
          m[r][c] = (pivot * m[r][c] - m[r][col] * m[rank][c]) / prev_pivot;
        }
        m[r][col] = 0;
      }
      prev_pivot = pivot;
      ++rank;
    }
    return rank;
  }

 private:
  int rows_;
  int cols_;
  std::vector<Rational> entries_;
};

// Writes each polynomial as a row vector over the fixed term basis spanned by
// the union of all occurring (monomial, blade) keys.
inline RationalMatrix coefficient_matrix(const std::vector<SpinorPoly>& polys) {
  std::map<SpinorPoly::Term, int> columns;
  for (const auto& p : polys) {
    for (const auto& [key, coeff] : p.terms()) {
      columns.emplace(key, 0);
    }
  }
  int index = 0;
  for (auto& [key, col] : columns) col = index++;
  RationalMatrix m(static_cast<int>(polys.size()), index == 0 ? 1 : index);
  for (size_t r = 0; r < polys.size(); ++r) {
    for (const auto& [key, coeff] : polys[r].terms()) {
      m.at(static_cast<int>(r), columns.at(key)) = coeff;
    }
  }
  return m;
}

// Exact expansion of polynomials over a fixed linearly independent family.
// The elimination is performed once; each expand() call is a matrix-vector
// product plus back-substitution.
class PolyExpander {
 public:
  explicit PolyExpander(std::vector<SpinorPoly> basis) : basis_(std::move(basis)) {
    for (const auto& p : basis_) {
      for (const auto& [key, coeff] : p.terms()) columns_.emplace(key, 0);
    }
    int index = 0;
    for (auto& [key, col] : columns_) col = index++;
    rows_ = index;
    cols_ = static_cast<int>(basis_.size());

    // reduce [A | I]; transform_ accumulates the row operations
    std::vector<std::vector<Rational>> a(rows_, std::vector<Rational>(cols_, Rational(0)));
    for (int c = 0; c < cols_; ++c) {
      for (const auto& [key, coeff] : basis_[c].terms()) a[columns_.at(key)][c] = coeff;
    }
    transform_.assign(rows_, std::vector<Rational>(rows_, Rational(0)));
    for (int r = 0; r < rows_; ++r) transform_[r][r] = 1;

    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
      int pivot_row = -1;
      for (int r = rank; r < rows_; ++r) {
        if (a[r][c] != 0) {
          pivot_row = r;
          break;
        }
      }
      if (pivot_row < 0) throw std::invalid_argument("basis is linearly dependent");
      std::swap(a[rank], a[pivot_row]);
      std::swap(transform_[rank], transform_[pivot_row]);
      for (int r = 0; r < rows_; ++r) {
        if (r == rank || a[r][c] == 0) continue;
        Rational f = a[r][c] / a[rank][c];
        for (int cc = c; cc < cols_; ++cc) a[r][cc] -= f * a[rank][cc];
        for (int cc = 0; cc < rows_; ++cc) transform_[r][cc] -= f * transform_[rank][cc];
      }
      pivots_.push_back(a[rank][c]);
      ++rank;
    }
    if (rank < cols_) throw std::invalid_argument("basis is linearly dependent");
  }

  // Coefficients c with sum_i c_i basis_i = target, or nullopt if the target
  // is outside the span.
  std::optional<std::vector<Rational>> expand(const SpinorPoly& target) const {
    std::vector<Rational> v(rows_, Rational(0));
    for (const auto& [key, coeff] : target.terms()) {
      auto it = columns_.find(key);
      if (it == columns_.end()) return std::nullopt;
      v[it->second] = coeff;
    }
    std::vector<Rational> out(cols_);
    for (int r = 0; r < rows_; ++r) {
      Rational acc = 0;
      for (int c = 0; c < rows_; ++c) {
        if (transform_[r][c] != 0 && v[c] != 0) acc += transform_[r][c] * v[c];
      }
      if (r < cols_) {
        out[r] = acc / pivots_[r];
      } else if (acc != 0) {
        return std::nullopt;
      }
    }
    return out;
  }

  const std::vector<SpinorPoly>& basis() const { return basis_; }

 private:
  std::vector<SpinorPoly> basis_;
  std::map<SpinorPoly::Term, int> columns_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::vector<Rational>> transform_;
  std::vector<Rational> pivots_;
};

}  // namespace dunkl
