#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "seaweed/sparse_matrix.hpp"
#include "seaweed/spec.hpp"

namespace seaweed {

/// Cells of the standard matrix form allowed to be nonzero.
struct AdmissibleMask {
  int dim = 0;
  std::vector<std::vector<bool>> cells;  // cells[i-1][j-1]

  bool allowed(int row, int col) const { return cells[row - 1][col - 1]; }
  int count() const;
  int antidiagonal_count() const;
};

/// Diagonal block sizes of the ambient matrix for a composition.
/// GL/A: the parts. B/C/D: parts, middle block, parts reversed (middle omitted when 0).
std::vector<int> block_sizes(AlgebraType algebra, int n, const Composition& parts);

/// Matrix size: n for GL/A, 2n for C/D, 2n+1 for B.
int matrix_dim(AlgebraType algebra, int n);

AdmissibleMask admissible_mask(const SeaweedSpec& spec);

/// Sparse coefficient vector over a basis: ascending indices, nonzero values.
using SparseVector = std::vector<std::pair<int, mpq_class>>;

/// A finite-dimensional Lie algebra given by a basis and its structure constants.
/// Indices are 0-based. `basis` is empty for algebras built from a table.
struct LieData {
  int dimension = 0;
  std::vector<SparseIntMatrix> basis;
  std::vector<SparseIntMatrix::Cell> pivots;      // coordinate cell of each basis matrix
  std::vector<std::vector<SparseVector>> brackets;  // brackets[i][j] = [x_i, x_j]

  const SparseVector& bracket(int i, int j) const { return brackets[i][j]; }
  /// True when every structure constant is an integer.
  bool integral() const;
};

class ClosureError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class JacobiError : public std::invalid_argument {
 public:
  JacobiError(int i, int j, int k);
  std::array<int, 3> triple() const { return triple_; }

 private:
  std::array<int, 3> triple_;
};

/// The seaweed as a matrix Lie algebra. Throws ClosureError if some bracket
/// leaves the span of the basis.
LieData seaweed_basis(const SeaweedSpec& spec);

/// Coordinates of a matrix over the basis of `lie`, read from the pivot cells.
/// Returns nullopt when the matrix is not in the span.
std::optional<SparseVector> coordinates(const LieData& lie, const SparseIntMatrix& m);

/// Expected dimension from the mask: GL cells, A cells - 1, C (cells + antidiagonal)/2,
/// B and D (cells - antidiagonal)/2.
int dimension_from_mask(AlgebraType algebra, const AdmissibleMask& mask);

/// GL/A only: sum a(a+1)/2 + sum b(b+1)/2 - n, minus one for A.
int dimension_from_compositions(const SeaweedSpec& spec);

/// Structure constants keyed by 0-based (i, j). Missing pairs are zero; for
/// each listed pair the reversed pair is filled in by antisymmetry.
using StructureTable = std::map<std::pair<int, int>, SparseVector>;

/// Throws std::invalid_argument on an inconsistent table (conflicting
/// antisymmetric entries, nonzero [x_i, x_i], indices out of range) and
/// JacobiError with the first failing triple.
LieData lie_from_structure_constants(int dimension, const StructureTable& table);

/// First triple i < j < k violating Jacobi, if any.
std::optional<std::array<int, 3>> find_jacobi_violation(const LieData& lie);

/// True when brackets[i][j] = -brackets[j][i] for all pairs.
bool is_antisymmetric(const LieData& lie);

/// The 4-dimensional family [e1,e4] = [e2,e3] = -e1, [e2,e4] = -e3, [e3,e4] = -e3 + z e2.
LieData four_dim_family(const mpq_class& z);

}  // namespace seaweed
