#pragma once

#include <cstddef>
#include <map>
#include <numeric>
#include <vector>

#include "symten/errors.hpp"
#include "symten/rational.hpp"

namespace symten {

/// Dense matrix of exact rationals. Rank and nullspace are computed exactly
/// over the rationals; rank does not depend on row/column order.
class ExactMatrix {
public:
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

namespace detail {

// Row-scale a rational matrix to integers (rank is unchanged).
inline std::vector<std::vector<Integer>> to_integer_rows(const ExactMatrix& m) {
  std::vector<std::vector<Integer>> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer lcm = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Integer den = rational_den(m.at(r, c));
      lcm = boost::multiprecision::lcm(lcm, den);
    }
    rows[r].resize(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
      rows[r][c] = rational_num(m.at(r, c)) * (lcm / rational_den(m.at(r, c)));
  }
  return rows;
}

} // namespace detail

/// Rank over the rationals by fraction-free (Bareiss) elimination: all
/// intermediate values stay integral, divisions are exact.
inline std::size_t exact_rank(const ExactMatrix& m) {
  auto a = detail::to_integer_rows(m);
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    const Integer piv = a[rank][col];
    // rows with a zero leading entry still rescale by piv/prev: every entry
    // must stay a minor for the later divisions to be exact
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c)
        a[r][c] = (a[r][c] * piv - a[r][col] * a[rank][c]) / prev;
      a[r][col] = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

/// Basis of the right nullspace, each vector scaled to coprime integers with
/// positive leading entry. Computed by rational Gauss-Jordan reduction.
inline std::vector<std::vector<Rational>> exact_nullspace(const ExactMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m.at(r, c);

  std::vector<std::size_t> pivot_col;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t pivot = lead;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[lead], a[pivot]);
    const Rational inv = Rational(1) / a[lead][col];
    for (std::size_t c = col; c < cols; ++c) a[lead][c] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= factor * a[lead][c];
    }
    pivot_col.push_back(col);
    ++lead;
  }

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t p = 0; p < pivot_col.size(); ++p) v[pivot_col[p]] = -a[p][free];
    // clear denominators, divide out the content, make the leading entry positive
    Integer lcm = 1;
    for (const auto& x : v) lcm = boost::multiprecision::lcm(lcm, rational_den(x));
    Integer gcd = 0;
    for (auto& x : v) {
      x *= Rational(lcm);
      gcd = boost::multiprecision::gcd(gcd, rational_num(x));
    }
    if (gcd > 1)
      for (auto& x : v) x /= Rational(gcd);
    for (const auto& x : v) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : v) y = -y;
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Rank of a family of sparse vectors keyed by an arbitrary ordered type.
/// Indexes the union of keys, densifies, and runs Bareiss elimination.
template <class Key>
std::size_t rank_of_span(const std::vector<std::map<Key, Rational>>& rows,
                         std::size_t max_rows = 0) {
  std::map<Key, std::size_t> column;
  std::size_t nonzero_rows = 0;
  for (const auto& row : rows) {
    if (row.empty()) continue;
    ++nonzero_rows;
    for (const auto& [key, value] : row)
      column.emplace(key, column.size());
  }
  if (max_rows != 0 && nonzero_rows > max_rows)
    throw resource_error("rank computation exceeds row cap (" +
                         std::to_string(nonzero_rows) + " > " +
                         std::to_string(max_rows) + ")");
  if (column.empty()) return 0;
  ExactMatrix m(nonzero_rows, column.size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.empty()) continue;
    for (const auto& [key, value] : row) m.at(r, column.at(key)) = value;
    ++r;
  }
  return exact_rank(m);
}

} // namespace symten
