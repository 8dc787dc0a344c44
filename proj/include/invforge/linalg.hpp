#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "invforge/errors.hpp"
#include "invforge/scalar.hpp"

namespace invforge {

// Dense matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    RationalMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  // J = [[0, I], [-I, 0]] of size 2n.
  static RationalMatrix symplectic_form(std::size_t n) {
    RationalMatrix j(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      j(i, n + i) = 1;
      j(n + i, i) = -1;
    }
    return j;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product dimension mismatch");
    RationalMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t l = 0; l < a.cols_; ++l) {
        if (a(i, l) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, l) * b(l, j);
      }
    }
    return c;
  }

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum dimension mismatch");
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
    return a;
  }

  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference dimension mismatch");
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
    return a;
  }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  // Exact inverse by Gauss-Jordan; empty optional-like flag via `ok`.
  RationalMatrix inverse(bool* ok = nullptr) const {
    if (rows_ != cols_) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = rows_;
    RationalMatrix work = *this;
    RationalMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && work(pivot, col) == 0) ++pivot;
      if (pivot == n) {
        if (ok) {
          *ok = false;
          return {};
        }
        throw DimensionMismatch("matrix is singular");
      }
      if (pivot != col) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(work(pivot, j), work(col, j));
          std::swap(inv(pivot, j), inv(col, j));
        }
      }
      const Rational scale = 1 / work(col, col);
      for (std::size_t j = 0; j < n; ++j) {
        work(col, j) *= scale;
        inv(col, j) *= scale;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col || work(i, col) == 0) continue;
        const Rational factor = work(i, col);
        for (std::size_t j = 0; j < n; ++j) {
          work(i, j) -= factor * work(col, j);
          inv(i, j) -= factor * inv(col, j);
        }
      }
    }
    if (ok) *ok = true;
    return inv;
  }

  Rational determinant() const {
    if (rows_ != cols_) throw DimensionMismatch("determinant of a non-square matrix");
    RationalMatrix work = *this;
    Rational det = 1;
    for (std::size_t col = 0; col < rows_; ++col) {
      std::size_t pivot = col;
      while (pivot < rows_ && work(pivot, col) == 0) ++pivot;
      if (pivot == rows_) return 0;
      if (pivot != col) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(work(pivot, j), work(col, j));
        det = -det;
      }
      det *= work(col, col);
      for (std::size_t i = col + 1; i < rows_; ++i) {
        if (work(i, col) == 0) continue;
        const Rational factor = work(i, col) / work(col, col);
        for (std::size_t j = col; j < cols_; ++j) work(i, j) -= factor * work(col, j);
      }
    }
    return det;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      out += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out += ", ";
        out += invforge::to_string((*this)(i, j));
      }
      out += "]";
    }
    return out + "]";
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

// Rank of an integer matrix by fraction-free (Bareiss) elimination. Every
// division is exact.
inline std::size_t bareiss_rank(std::vector<std::vector<Integer>> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  Integer previous = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const Integer& p = m[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const Integer factor = m[i][col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        Integer value = p * m[i][j];
        if (factor != 0) value -= factor * m[rank][j];
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
        m[i][j] = std::move(value);
      }
      m[i][col] = 0;
    }
    previous = m[rank][col];
    ++rank;
  }
  return rank;
}

// Rank of a sparse integer matrix given as rows of (column, value) entries.
// Rows that share no column (transitively) form independent blocks whose
// ranks add, so each connected block is eliminated separately.
inline std::size_t sparse_rank(const std::vector<std::vector<std::pair<std::size_t, Integer>>>& rows,
                               std::size_t column_count) {
  std::vector<std::size_t> parent(column_count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& row : rows) {
    for (std::size_t e = 1; e < row.size(); ++e) parent[find(row[e].first)] = find(row[0].first);
  }
  std::vector<std::vector<std::size_t>> block_rows(column_count);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].empty()) block_rows[find(rows[r][0].first)].push_back(r);
  }
  std::vector<std::size_t> local(column_count, 0);
  std::vector<std::size_t> width(column_count, 0);
  for (std::size_t c = 0; c < column_count; ++c) local[c] = width[find(c)]++;
  std::size_t rank = 0;
  for (std::size_t root = 0; root < column_count; ++root) {
    if (block_rows[root].empty()) continue;
    std::vector<std::vector<Integer>> dense(block_rows[root].size(), std::vector<Integer>(width[root], 0));
    for (std::size_t i = 0; i < block_rows[root].size(); ++i) {
      for (const auto& [c, v] : rows[block_rows[root][i]]) dense[i][local[c]] = v;
    }
    rank += bareiss_rank(std::move(dense));
  }
  return rank;
}

}  // namespace invforge
