#include "seaweed/sparse_matrix.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace seaweed {

SparseIntMatrix::SparseIntMatrix(int dim) : dim_(dim) {
  if (dim < 0) throw std::invalid_argument("negative matrix dimension");
}

SparseIntMatrix SparseIntMatrix::identity(int dim) {
  SparseIntMatrix m(dim);
  for (int i = 1; i <= dim; ++i) m.set(i, i, 1);
  return m;
}

SparseIntMatrix SparseIntMatrix::unit(int dim, int row, int col) {
  SparseIntMatrix m(dim);
  m.set(row, col, 1);
  return m;
}

void SparseIntMatrix::check(int row, int col) const {
  if (row < 1 || row > dim_ || col < 1 || col > dim_) {
    throw std::out_of_range("cell (" + std::to_string(row) + "," + std::to_string(col) +
                            ") outside a " + std::to_string(dim_) + "x" + std::to_string(dim_) + " matrix");
  }
}

std::int64_t SparseIntMatrix::at(int row, int col) const {
  check(row, col);
  auto it = entries_.find({row, col});
  return it == entries_.end() ? 0 : it->second;
}

void SparseIntMatrix::set(int row, int col, std::int64_t value) {
  check(row, col);
  if (value == 0) {
    entries_.erase({row, col});
  } else {
    entries_[{row, col}] = value;
  }
}

void SparseIntMatrix::add(int row, int col, std::int64_t value) {
  if (value == 0) return;
  check(row, col);
  auto [it, inserted] = entries_.try_emplace({row, col}, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

SparseIntMatrix& SparseIntMatrix::operator+=(const SparseIntMatrix& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
  for (const auto& [cell, v] : other.entries_) add(cell.first, cell.second, v);
  return *this;
}

SparseIntMatrix& SparseIntMatrix::operator-=(const SparseIntMatrix& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
  for (const auto& [cell, v] : other.entries_) add(cell.first, cell.second, -v);
  return *this;
}

SparseIntMatrix& SparseIntMatrix::operator*=(std::int64_t scalar) {
  if (scalar == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& [cell, v] : entries_) v *= scalar;
  return *this;
}

SparseIntMatrix multiply(const SparseIntMatrix& x, const SparseIntMatrix& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("dimension mismatch in multiply");
  SparseIntMatrix out(x.dim());
  // Index y by row so each x entry (i,k) meets the entries of row k.
  std::vector<std::vector<std::pair<int, std::int64_t>>> rows(y.dim() + 1);
  for (const auto& [cell, v] : y.entries()) rows[cell.first].emplace_back(cell.second, v);
  for (const auto& [cell, v] : x.entries()) {
    for (const auto& [col, w] : rows[cell.second]) out.add(cell.first, col, v * w);
  }
  return out;
}

SparseIntMatrix bracket(const SparseIntMatrix& x, const SparseIntMatrix& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("dimension mismatch in bracket");
  return multiply(x, y) - multiply(y, x);
}

SparseIntMatrix antitranspose(const SparseIntMatrix& m) {
  const int d = m.dim();
  SparseIntMatrix out(d);
  for (const auto& [cell, v] : m.entries()) out.set(d + 1 - cell.second, d + 1 - cell.first, v);
  return out;
}

std::ostream& operator<<(std::ostream& os, const SparseIntMatrix& m) {
  os << '{';
  bool first = true;
  for (const auto& [cell, v] : m.entries()) {
    if (!first) os << ", ";
    first = false;
    os << '(' << cell.first << ',' << cell.second << "):" << v;
  }
  return os << '}';
}

}  // namespace seaweed
