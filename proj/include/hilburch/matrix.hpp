#pragma once

#include <vector>

#include "hilburch/poly.hpp"

namespace hilburch {

/// Dense integer matrix with 1-based accessors.
class IntMatrix {
 public:
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  int& at(int i, int j) { return data_.at((i - 1) * cols_ + (j - 1)); }
  int at(int i, int j) const { return data_.at((i - 1) * cols_ + (j - 1)); }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_, cols_;
  std::vector<int> data_;
};

/// Dense matrix of bivariate polynomials with 1-based accessors.
class PolyMatrix {
 public:
  PolyMatrix(int rows, int cols, const Field& field, int cap = kUnbounded);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }

  BiPoly& at(int i, int j) { return data_.at((i - 1) * cols_ + (j - 1)); }
  const BiPoly& at(int i, int j) const {
    return data_.at((i - 1) * cols_ + (j - 1));
  }

  /// row[target] += factor * row[source]
  void add_row_multiple(int target, int source, const BiPoly& factor, int cap);
  /// col[target] += factor * col[source]
  void add_col_multiple(int target, int source, const BiPoly& factor, int cap);

  /// The square matrix obtained by deleting row r.
  PolyMatrix without_row(int r) const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  int rows_, cols_;
  Field field_;
  std::vector<BiPoly> data_;
};

/// Determinant in R/m^cap by cofactor expansion along the first column,
/// memoised over the set of remaining rows (zero entries are skipped).
BiPoly determinant(const PolyMatrix& m, int cap);

/// f_i = (-1)^(t-i) det of M with row i+1 deleted, i = 0..t, for a
/// (t+1) x t matrix M.
std::vector<BiPoly> signed_maximal_minors(const PolyMatrix& m, int cap);

/// Rank of a scalar matrix given row-major.
int scalar_rank(std::vector<std::vector<Scalar>> rows);

}  // namespace hilburch
