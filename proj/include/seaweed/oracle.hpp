#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "seaweed/exact.hpp"
#include "seaweed/lie.hpp"

namespace seaweed {

/// Coordinates on the dual basis.
struct Functional {
  std::vector<mpz_class> coefficients;
};

/// `matrix` = scale * [f], with scale the lcm of the structure-constant
/// denominators (1 for matrix algebras), so entries are integers.
struct SkewForm {
  IntMatrix matrix;
  mpz_class scale = 1;
};

/// [f]_ij = sum_k f_k c(i,j)_k. Throws std::invalid_argument on a length mismatch.
SkewForm kirillov_matrix(const LieData& lie, const Functional& f);

/// Uniform integers in [-range, range], rejection-sampled from a 64-bit Mersenne twister.
class FunctionalSampler {
 public:
  explicit FunctionalSampler(std::uint64_t seed, std::int64_t range = 1'000'000);
  Functional draw(int dimension);

 private:
  std::mt19937_64 gen_;
  std::uint64_t span_;
  std::int64_t range_;
};

/// min over `trials` sampled functionals of dim ker B_f. An upper bound on the
/// index that equals it for generic samples. Stops early once the kernel is as
/// small as parity allows.
int index_oracle(const LieData& lie, int trials = 5, std::uint64_t seed = 0);

class OracleError : public std::runtime_error {
 public:
  OracleError(std::string code, const std::string& what);
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Exact c with sum_i c_i f([x_i, x_j]) = f(x_j) for all j.
/// Throws OracleError("NOT_FROBENIUS_FUNCTIONAL") when B_f is degenerate.
RatVector principal_element(const LieData& lie, const Functional& f);

/// Matrix of ad(sum c_i x_i) in the basis: column j holds the coordinates of [F, x_j].
RatMatrix ad_matrix(const LieData& lie, const RatVector& c);

struct SpectrumReport {
  std::map<int, int> eigenvalues;  // integer eigenvalue -> algebraic multiplicity
  bool integral = false;           // multiplicities sum to the dimension
  bool unbroken = false;           // eigenvalues form a run of consecutive integers
  bool symmetric_about_half = false;
  bool semisimple = false;         // geometric multiplicities sum to the dimension
  int dimension = 0;
  int defect = 0;                  // dimension - sum of multiplicities
  std::string status;              // "OK" or "NON_INTEGRAL_SPECTRUM"
  Functional functional;           // the one-form whose principal element was used
  RatVector principal;
};

struct SpectrumOptions {
  int trials = 5;
  std::uint64_t seed = 0;
  std::int64_t functional_range = 3;  // coordinates of the one-form used for F-hat
  int max_draws = 500;
  std::optional<std::pair<int, int>> window;  // default [-m, m+1]
};

/// Spectrum of ad F-hat by integer-shift kernel sweeps. Throws
/// OracleError("NOT_FROBENIUS") when index_oracle is nonzero.
SpectrumReport ad_spectrum(const LieData& lie, const SpectrumOptions& options = {});

}  // namespace seaweed
