#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace qperm {

// Exact Gaussian elimination over Rational or Cyclotomic. Vectors are dense
// rows of equal length.

template <class F>
using Vec = std::vector<F>;

/// Reduced row echelon form of the span of `rows`; zero rows dropped. The
/// pivot column of each returned row is its first nonzero entry, normalized
/// to one.
template <class F>
std::vector<Vec<F>> row_reduce(std::vector<Vec<F>> rows) {
  std::vector<Vec<F>> basis;
  if (rows.empty()) return basis;
  const std::size_t width = rows.front().size();
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < width && lead_row < rows.size(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[lead_row]);
    const F inv = rows[lead_row][col].inverse();
    for (auto& x : rows[lead_row]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead_row || rows[r][col].is_zero()) continue;
      const F factor = rows[r][col];
      for (std::size_t c = col; c < width; ++c) rows[r][c] -= factor * rows[lead_row][c];
    }
    ++lead_row;
  }
  rows.resize(lead_row);
  return rows;
}

template <class F>
std::size_t rank(std::vector<Vec<F>> rows) {
  return row_reduce(std::move(rows)).size();
}

/// Residue of v after elimination against a row-reduced basis; zero iff v
/// lies in the span.
template <class F>
Vec<F> residue(const std::vector<Vec<F>>& reduced_basis, Vec<F> v) {
  for (const auto& row : reduced_basis) {
    std::size_t col = 0;
    while (row[col].is_zero()) ++col;
    if (v[col].is_zero()) continue;
    const F factor = v[col];
    for (std::size_t c = col; c < v.size(); ++c) v[c] -= factor * row[c];
  }
  return v;
}

template <class F>
bool is_zero_vector(const Vec<F>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

template <class F>
bool in_span(const std::vector<Vec<F>>& vectors, const Vec<F>& v) {
  return is_zero_vector(residue(row_reduce(vectors), v));
}

/// Coefficients a with sum_k a_k * columns[k] == target, or nullopt. When the
/// columns are dependent, one particular solution is returned.
template <class F>
std::optional<Vec<F>> solve_in_span(const std::vector<Vec<F>>& columns, const Vec<F>& target) {
  const std::size_t unknowns = columns.size();
  const std::size_t equations = target.size();
  // Augmented matrix rows: [A | b].
  std::vector<Vec<F>> m(equations, Vec<F>(unknowns + 1));
  for (std::size_t r = 0; r < equations; ++r) {
    for (std::size_t c = 0; c < unknowns; ++c) m[r][c] = columns[c][r];
    m[r][unknowns] = target[r];
  }
  auto reduced = row_reduce(std::move(m));
  Vec<F> solution(unknowns);
  for (const auto& row : reduced) {
    std::size_t col = 0;
    while (row[col].is_zero()) ++col;
    if (col == unknowns) return std::nullopt;  // 0 = nonzero
    solution[col] = row[unknowns];
  }
  return solution;
}

}  // namespace qperm
