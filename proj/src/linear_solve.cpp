#include "foliate/linear_solve.hpp"

#include <utility>

#include "foliate/error.hpp"

namespace foliate {

namespace {

// Row-reduces in place; returns pivot columns in row order.
std::vector<std::size_t> row_reduce(Matrix& a, std::vector<GaussianRational>* rhs, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t pick = row;
    while (pick < a.size() && a[pick][col].is_zero()) ++pick;
    if (pick == a.size()) continue;
    std::swap(a[pick], a[row]);
    if (rhs) std::swap((*rhs)[pick], (*rhs)[row]);
    const GaussianRational inv = a[row][col].inverse();
    for (std::size_t c = col; c < cols; ++c) a[row][c] *= inv;
    if (rhs) (*rhs)[row] *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      const GaussianRational f = a[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        if (!a[row][c].is_zero()) a[r][c] -= f * a[row][c];
      }
      if (rhs) (*rhs)[r] -= f * (*rhs)[row];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<GaussianRational>> solve_linear(Matrix a, std::vector<GaussianRational> b,
                                                          std::size_t num_unknowns) {
  if (a.size() != b.size()) throw Error(ErrorCode::InvalidArgument, "row count and right-hand side differ");
  for (const auto& r : a) {
    if (r.size() != num_unknowns) throw Error(ErrorCode::InvalidArgument, "ragged coefficient matrix");
  }
  const auto pivots = row_reduce(a, &b, num_unknowns);
  for (std::size_t r = pivots.size(); r < b.size(); ++r) {
    if (!b[r].is_zero()) return std::nullopt;
  }
  std::vector<GaussianRational> x(num_unknowns);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = b[r];
  return x;
}

std::size_t matrix_rank(Matrix a) {
  if (a.empty()) return 0;
  return row_reduce(a, nullptr, a.front().size()).size();
}

}  // namespace foliate
