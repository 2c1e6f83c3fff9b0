#include "dmod/linsolve.hpp"

#include "dmod/errors.hpp"

namespace dmod {

std::optional<std::vector<Scalar>> solve_exact(ScalarMatrix matrix, std::vector<Scalar> rhs) {
  const std::size_t rows = matrix.size();
  if (rhs.size() != rows) throw PreconditionError("right-hand side length mismatch");
  const std::size_t cols = rows == 0 ? 0 : matrix.front().size();

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && matrix[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(matrix[p], matrix[r]);
    std::swap(rhs[p], rhs[r]);
    const Scalar inv = matrix[r][c].inverse();
    for (std::size_t cc = c; cc < cols; ++cc) matrix[r][cc] *= inv;
    rhs[r] *= inv;
    for (std::size_t other = 0; other < rows; ++other) {
      if (other == r || matrix[other][c].is_zero()) continue;
      const Scalar factor = matrix[other][c];
      for (std::size_t cc = c; cc < cols; ++cc) matrix[other][cc] -= factor * matrix[r][cc];
      rhs[other] -= factor * rhs[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t rest = r; rest < rows; ++rest)
    if (!rhs[rest].is_zero()) return std::nullopt;

  std::vector<Scalar> solution(cols, Scalar(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) solution[pivot_cols[i]] = rhs[i];
  return solution;
}

}  // namespace dmod
