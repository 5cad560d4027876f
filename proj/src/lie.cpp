#include "seaweed/lie.hpp"

#include <algorithm>
#include <string>

namespace seaweed {

int AdmissibleMask::count() const {
  int c = 0;
  for (const auto& row : cells)
    for (bool b : row) c += b ? 1 : 0;
  return c;
}

int AdmissibleMask::antidiagonal_count() const {
  int c = 0;
  for (int i = 1; i <= dim; ++i) c += allowed(i, dim + 1 - i) ? 1 : 0;
  return c;
}

int matrix_dim(AlgebraType algebra, int n) {
  switch (algebra) {
    case AlgebraType::GL:
    case AlgebraType::A: return n;
    case AlgebraType::B: return 2 * n + 1;
    case AlgebraType::C:
    case AlgebraType::D: return 2 * n;
  }
  return n;
}

std::vector<int> block_sizes(AlgebraType algebra, int n, const Composition& parts) {
  if (!uses_partial_compositions(algebra)) return parts.parts;
  std::vector<int> sizes = parts.parts;
  const int middle = 2 * (n - parts.sum()) + (algebra == AlgebraType::B ? 1 : 0);
  if (middle > 0) sizes.push_back(middle);
  sizes.insert(sizes.end(), parts.parts.rbegin(), parts.parts.rend());
  return sizes;
}

namespace {

// block_of[i] = index of the diagonal block holding row/column i (1-based).
std::vector<int> block_index(const std::vector<int>& sizes, int dim) {
  std::vector<int> block_of(dim + 1, -1);
  int v = 1;
  for (std::size_t b = 0; b < sizes.size(); ++b)
    for (int k = 0; k < sizes[b]; ++k) block_of[v++] = static_cast<int>(b);
  return block_of;
}

}  // namespace

AdmissibleMask admissible_mask(const SeaweedSpec& spec) {
  require_valid(spec);
  const int dim = matrix_dim(spec.algebra, spec.n);
  const auto top = block_index(block_sizes(spec.algebra, spec.n, spec.top), dim);
  const auto bottom = block_index(block_sizes(spec.algebra, spec.n, spec.bottom), dim);
  AdmissibleMask mask{dim, std::vector<std::vector<bool>>(dim, std::vector<bool>(dim, false))};
  for (int i = 1; i <= dim; ++i) {
    for (int j = 1; j <= dim; ++j) {
      const bool lower = i >= j && top[i] == top[j];
      const bool upper = i <= j && bottom[i] == bottom[j];
      mask.cells[i - 1][j - 1] = lower || upper;
    }
  }
  return mask;
}

bool LieData::integral() const {
  for (const auto& row : brackets)
    for (const auto& vec : row)
      for (const auto& [k, c] : vec)
        if (c.get_den() != 1) return false;
  return true;
}

JacobiError::JacobiError(int i, int j, int k)
    : std::invalid_argument("Jacobi identity fails on basis triple (" + std::to_string(i + 1) + ", " +
                            std::to_string(j + 1) + ", " + std::to_string(k + 1) + ")"),
      triple_{i, j, k} {}

namespace {

struct Candidate {
  SparseIntMatrix matrix;
  SparseIntMatrix::Cell pivot;
};

std::vector<Candidate> ambient_candidates(const SeaweedSpec& spec, const AdmissibleMask& mask) {
  const int dim = mask.dim;
  std::vector<Candidate> out;
  if (!uses_partial_compositions(spec.algebra)) {
    for (int i = 1; i <= dim; ++i) {
      for (int j = 1; j <= dim; ++j) {
        if (!mask.allowed(i, j)) continue;
        auto e = SparseIntMatrix::unit(dim, i, j);
        if (spec.algebra == AlgebraType::A && i == j) {
          if (i == dim) continue;
          e.set(dim, dim, -1);
        }
        out.push_back({std::move(e), {i, j}});
      }
    }
    return out;
  }

  const int n = spec.n;
  auto eps = [n](int i) { return i <= n ? 1 : -1; };
  std::vector<std::vector<bool>> used(dim + 1, std::vector<bool>(dim + 1, false));
  for (int i = 1; i <= dim; ++i) {
    for (int j = 1; j <= dim; ++j) {
      if (used[i][j] || !mask.allowed(i, j)) continue;
      const int pi = dim + 1 - j;
      const int pj = dim + 1 - i;
      used[i][j] = used[pi][pj] = true;
      if (pi == i && pj == j) {
        // Antidiagonal cell: forced to zero in B and D, free in C.
        if (spec.algebra == AlgebraType::C) out.push_back({SparseIntMatrix::unit(dim, i, j), {i, j}});
        continue;
      }
      if (!mask.allowed(pi, pj)) continue;
      const int sign = spec.algebra == AlgebraType::C ? -eps(i) * eps(j) : -1;
      auto e = SparseIntMatrix::unit(dim, i, j);
      e.set(pi, pj, sign);
      out.push_back({std::move(e), {i, j}});
    }
  }
  return out;
}

SparseVector to_sparse(const std::vector<std::pair<int, std::int64_t>>& coords) {
  SparseVector v;
  for (const auto& [k, c] : coords) v.emplace_back(k, mpq_class(c));
  return v;
}

SparseVector negate(const SparseVector& v) {
  SparseVector out = v;
  for (auto& [k, c] : out) c = -c;
  return out;
}

// acc += a * x
void axpy(std::map<int, mpq_class>& acc, const mpq_class& a, const SparseVector& x) {
  for (const auto& [k, c] : x) {
    auto& slot = acc[k];
    slot += a * c;
  }
}

SparseVector from_map(const std::map<int, mpq_class>& m) {
  SparseVector v;
  for (const auto& [k, c] : m)
    if (c != 0) v.emplace_back(k, c);
  return v;
}

// Dense cell -> basis index lookup, -1 when the cell is not a pivot.
std::vector<int> pivot_table(const LieData& lie, int dim) {
  std::vector<int> table((dim + 1) * (dim + 1), -1);
  for (int k = 0; k < lie.dimension; ++k) table[lie.pivots[k].first * (dim + 1) + lie.pivots[k].second] = k;
  return table;
}

std::optional<SparseVector> coordinates_with(const LieData& lie, const std::vector<int>& table,
                                             const SparseIntMatrix& m) {
  const int dim = m.dim();
  std::vector<std::pair<int, std::int64_t>> coords;
  for (const auto& [cell, v] : m.entries()) {
    const int k = table[cell.first * (dim + 1) + cell.second];
    if (k >= 0) coords.emplace_back(k, v);
  }
  std::sort(coords.begin(), coords.end());
  SparseIntMatrix rebuilt(dim);
  for (const auto& [k, c] : coords) rebuilt += lie.basis[k] * c;
  if (!(rebuilt == m)) return std::nullopt;
  return to_sparse(coords);
}

}  // namespace

std::optional<SparseVector> coordinates(const LieData& lie, const SparseIntMatrix& m) {
  if (lie.basis.empty() || m.dim() != lie.basis.front().dim()) return std::nullopt;
  return coordinates_with(lie, pivot_table(lie, m.dim()), m);
}

LieData seaweed_basis(const SeaweedSpec& spec) {
  const auto mask = admissible_mask(spec);
  LieData lie;
  for (auto& c : ambient_candidates(spec, mask)) {
    lie.basis.push_back(std::move(c.matrix));
    lie.pivots.push_back(c.pivot);
  }
  lie.dimension = static_cast<int>(lie.basis.size());
  lie.brackets.assign(lie.dimension, std::vector<SparseVector>(lie.dimension));
  const auto table = pivot_table(lie, mask.dim);
  for (int i = 0; i < lie.dimension; ++i) {
    for (int j = i + 1; j < lie.dimension; ++j) {
      const auto z = bracket(lie.basis[i], lie.basis[j]);
      if (z.is_zero()) continue;
      auto coords = coordinates_with(lie, table, z);
      if (!coords) {
        throw ClosureError("bracket of basis elements " + std::to_string(i + 1) + " and " +
                           std::to_string(j + 1) + " of " + format_spec(spec) + " leaves the span");
      }
      lie.brackets[j][i] = negate(*coords);
      lie.brackets[i][j] = std::move(*coords);
    }
  }
  return lie;
}

int dimension_from_mask(AlgebraType algebra, const AdmissibleMask& mask) {
  const int cells = mask.count();
  switch (algebra) {
    case AlgebraType::GL: return cells;
    case AlgebraType::A: return cells - 1;
    case AlgebraType::C: return (cells + mask.antidiagonal_count()) / 2;
    case AlgebraType::B:
    case AlgebraType::D: return (cells - mask.antidiagonal_count()) / 2;
  }
  return cells;
}

int dimension_from_compositions(const SeaweedSpec& spec) {
  if (uses_partial_compositions(spec.algebra)) throw std::invalid_argument("GL or A expected");
  int d = -spec.n;
  for (int a : spec.top.parts) d += a * (a + 1) / 2;
  for (int b : spec.bottom.parts) d += b * (b + 1) / 2;
  return spec.algebra == AlgebraType::A ? d - 1 : d;
}

LieData lie_from_structure_constants(int dimension, const StructureTable& table) {
  if (dimension < 0) throw std::invalid_argument("negative dimension");
  LieData lie;
  lie.dimension = dimension;
  lie.brackets.assign(dimension, std::vector<SparseVector>(dimension));
  std::vector<std::vector<bool>> given(dimension, std::vector<bool>(dimension, false));
  auto in_range = [dimension](int k) { return k >= 0 && k < dimension; };

  for (const auto& [key, raw] : table) {
    const auto [i, j] = key;
    if (!in_range(i) || !in_range(j)) throw std::invalid_argument("basis index out of range");
    std::map<int, mpq_class> acc;
    for (const auto& [k, c] : raw) {
      if (!in_range(k)) throw std::invalid_argument("basis index out of range");
      acc[k] += c;
    }
    const auto vec = from_map(acc);
    if (i == j) {
      if (!vec.empty()) throw std::invalid_argument("[x_i, x_i] must vanish");
      continue;
    }
    if (given[j][i] && lie.brackets[j][i] != negate(vec)) {
      throw std::invalid_argument("table is not antisymmetric at (" + std::to_string(i + 1) + ", " +
                                  std::to_string(j + 1) + ")");
    }
    lie.brackets[i][j] = vec;
    lie.brackets[j][i] = negate(vec);
    given[i][j] = given[j][i] = true;
  }

  if (auto bad = find_jacobi_violation(lie)) throw JacobiError((*bad)[0], (*bad)[1], (*bad)[2]);
  return lie;
}

namespace {

// [x_i, [x_j, x_k]] as a coefficient map.
void add_double_bracket(std::map<int, mpq_class>& acc, const LieData& lie, int i, int j, int k) {
  for (const auto& [l, c] : lie.brackets[j][k]) axpy(acc, c, lie.brackets[i][l]);
}

}  // namespace

std::optional<std::array<int, 3>> find_jacobi_violation(const LieData& lie) {
  const int m = lie.dimension;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (int k = j + 1; k < m; ++k) {
        std::map<int, mpq_class> acc;
        add_double_bracket(acc, lie, i, j, k);
        add_double_bracket(acc, lie, j, k, i);
        add_double_bracket(acc, lie, k, i, j);
        for (const auto& [l, c] : acc)
          if (c != 0) return std::array<int, 3>{i, j, k};
      }
    }
  }
  return std::nullopt;
}

bool is_antisymmetric(const LieData& lie) {
  for (int i = 0; i < lie.dimension; ++i)
    for (int j = 0; j < lie.dimension; ++j)
      if (lie.brackets[i][j] != negate(lie.brackets[j][i])) return false;
  return true;
}

LieData four_dim_family(const mpq_class& z) {
  StructureTable t;
  t[{0, 3}] = {{0, mpq_class(-1)}};
  t[{1, 2}] = {{0, mpq_class(-1)}};
  t[{1, 3}] = {{2, mpq_class(-1)}};
  SparseVector e34{{2, mpq_class(-1)}};
  if (z != 0) e34.insert(e34.begin(), {1, z});
  t[{2, 3}] = e34;
  return lie_from_structure_constants(4, t);
}

}  // namespace seaweed
