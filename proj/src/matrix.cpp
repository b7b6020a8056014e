#include "hilburch/matrix.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

#include "hilburch/errors.hpp"

namespace hilburch {

PolyMatrix::PolyMatrix(int rows, int cols, const Field& field, int cap)
    : rows_(rows), cols_(cols), field_(field),
      data_(static_cast<std::size_t>(rows * cols), BiPoly(field, cap)) {}

void PolyMatrix::add_row_multiple(int target, int source, const BiPoly& factor,
                                  int cap) {
  if (factor.is_zero()) return;
  for (int j = 1; j <= cols_; ++j)
    if (!at(source, j).is_zero())
      at(target, j) += mul_truncated(factor, at(source, j), cap);
}

void PolyMatrix::add_col_multiple(int target, int source, const BiPoly& factor,
                                  int cap) {
  if (factor.is_zero()) return;
  for (int i = 1; i <= rows_; ++i)
    if (!at(i, source).is_zero())
      at(i, target) += mul_truncated(factor, at(i, source), cap);
}

PolyMatrix PolyMatrix::without_row(int r) const {
  PolyMatrix out(rows_ - 1, cols_, field_);
  for (int i = 1, k = 1; i <= rows_; ++i) {
    if (i == r) continue;
    for (int j = 1; j <= cols_; ++j) out.at(k, j) = at(i, j);
    ++k;
  }
  return out;
}

namespace {

class DeterminantExpansion {
 public:
  DeterminantExpansion(const PolyMatrix& m, int cap) : m_(m), cap_(cap) {}

  BiPoly run() {
    std::uint32_t all = m_.rows() == 32 ? ~0u : (1u << m_.rows()) - 1;
    return det(all);
  }

 private:
  BiPoly det(std::uint32_t rows) {
    int n = m_.cols();
    int remaining = std::popcount(rows);
    if (remaining == 0) return BiPoly::constant(m_.field(), 1, cap_);
    if (auto it = memo_.find(rows); it != memo_.end()) return it->second;

    int col = n - remaining + 1;
    BiPoly acc(m_.field(), cap_);
    int position = 0;
    for (int r = 0; r < m_.rows(); ++r) {
      if (!(rows & (1u << r))) continue;
      const BiPoly& a = m_.at(r + 1, col);
      if (!a.is_zero()) {
        BiPoly minor = det(rows & ~(1u << r));
        if (!minor.is_zero()) {
          BiPoly term = mul_truncated(a, minor, cap_);
          if (position % 2 == 0)
            acc += term;
          else
            acc -= term;
        }
      }
      ++position;
    }
    memo_.emplace(rows, acc);
    return acc;
  }

  const PolyMatrix& m_;
  int cap_;
  std::unordered_map<std::uint32_t, BiPoly> memo_;
};

}  // namespace

BiPoly determinant(const PolyMatrix& m, int cap) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (m.rows() > 31) throw DomainError("matrix too large for determinant");
  return DeterminantExpansion(m, cap).run();
}

std::vector<BiPoly> signed_maximal_minors(const PolyMatrix& m, int cap) {
  int t = m.cols();
  if (m.rows() != t + 1) throw DomainError("expected a (t+1) x t matrix");
  std::vector<BiPoly> out;
  out.reserve(t + 1);
  for (int i = 0; i <= t; ++i) {
    BiPoly f = determinant(m.without_row(i + 1), cap);
    out.push_back((t - i) % 2 == 0 ? f : -f);
  }
  return out;
}

int scalar_rank(std::vector<std::vector<Scalar>> rows) {
  int rank = 0;
  if (rows.empty()) return 0;
  std::size_t cols = rows.front().size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    Scalar inv = rows[rank][c].inverse();
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      Scalar f = rows[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace hilburch
