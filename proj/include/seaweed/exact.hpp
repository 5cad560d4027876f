#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace seaweed {

using IntMatrix = std::vector<std::vector<mpz_class>>;
using RatMatrix = std::vector<std::vector<mpq_class>>;
using RatVector = std::vector<mpq_class>;

/// Rank over Q by fraction-free (Bareiss) elimination. Rows may be empty.
int rank_exact(IntMatrix m);

/// Rank over Q of a rational matrix (rows cleared of denominators first).
int rank_exact(const RatMatrix& m);

/// m - rank for a square matrix.
int nullity_exact(const RatMatrix& m);

/// Unique solution of A x = b for square A, or nullopt when A is singular.
std::optional<RatVector> solve_unique(RatMatrix a, RatVector b);

RatMatrix multiply(const RatMatrix& x, const RatMatrix& y);

}  // namespace seaweed
