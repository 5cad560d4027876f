#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <utility>

namespace seaweed {

/// Square integer matrix with 1-based (row, col) keys. Zero entries are never stored.
class SparseIntMatrix {
 public:
  using Cell = std::pair<int, int>;

  SparseIntMatrix() = default;
  explicit SparseIntMatrix(int dim);

  static SparseIntMatrix identity(int dim);
  static SparseIntMatrix unit(int dim, int row, int col);  // E_{row,col}

  int dim() const { return dim_; }
  const std::map<Cell, std::int64_t>& entries() const { return entries_; }
  std::int64_t at(int row, int col) const;
  void set(int row, int col, std::int64_t value);
  void add(int row, int col, std::int64_t value);
  bool is_zero() const { return entries_.empty(); }

  SparseIntMatrix& operator+=(const SparseIntMatrix& other);
  SparseIntMatrix& operator-=(const SparseIntMatrix& other);
  SparseIntMatrix& operator*=(std::int64_t scalar);

  friend SparseIntMatrix operator+(SparseIntMatrix a, const SparseIntMatrix& b) { return a += b; }
  friend SparseIntMatrix operator-(SparseIntMatrix a, const SparseIntMatrix& b) { return a -= b; }
  friend SparseIntMatrix operator*(SparseIntMatrix a, std::int64_t s) { return a *= s; }
  friend bool operator==(const SparseIntMatrix&, const SparseIntMatrix&) = default;

 private:
  void check(int row, int col) const;
  int dim_ = 0;
  std::map<Cell, std::int64_t> entries_;
};

/// Throws std::invalid_argument on a dimension mismatch.
SparseIntMatrix multiply(const SparseIntMatrix& x, const SparseIntMatrix& y);

/// xy - yx.
SparseIntMatrix bracket(const SparseIntMatrix& x, const SparseIntMatrix& y);

/// Reflection across the antidiagonal: result(i, j) = m(dim+1-j, dim+1-i).
SparseIntMatrix antitranspose(const SparseIntMatrix& m);

std::ostream& operator<<(std::ostream& os, const SparseIntMatrix& m);

}  // namespace seaweed
