#include <doctest.h>

#include <random>

#include "seaweed/sparse_matrix.hpp"

using namespace seaweed;

namespace {
SparseIntMatrix random_matrix(std::mt19937& gen, int dim) {
  std::uniform_int_distribution<int> cell(1, dim), value(-3, 3);
  SparseIntMatrix m(dim);
  for (int k = 0; k < 2 * dim; ++k) m.add(cell(gen), cell(gen), value(gen));
  return m;
}
}  // namespace

TEST_CASE("zero entries are never stored") {
  SparseIntMatrix m(3);
  m.add(1, 2, 5);
  m.add(1, 2, -5);
  CHECK(m.is_zero());
  m.set(2, 2, 0);
  CHECK(m.entries().empty());
  CHECK_THROWS_AS(m.set(4, 1, 1), std::out_of_range);
}

TEST_CASE("sl2 relation") {
  const auto e12 = SparseIntMatrix::unit(2, 1, 2);
  const auto e21 = SparseIntMatrix::unit(2, 2, 1);
  SparseIntMatrix h(2);
  h.set(1, 1, 1);
  h.set(2, 2, -1);
  CHECK(bracket(e12, e21) == h);
  CHECK(bracket(e12, e12).is_zero());
  CHECK_THROWS_AS(bracket(e12, SparseIntMatrix(3)), std::invalid_argument);
}

TEST_CASE("antitranspose") {
  CHECK(antitranspose(SparseIntMatrix::identity(4)) == SparseIntMatrix::identity(4));
  CHECK(antitranspose(SparseIntMatrix::unit(2, 1, 1)) == SparseIntMatrix::unit(2, 2, 2));
  CHECK(antitranspose(SparseIntMatrix::unit(3, 1, 2)) == SparseIntMatrix::unit(3, 2, 3));
  std::mt19937 gen(7);
  for (int k = 0; k < 50; ++k) {
    const auto m = random_matrix(gen, 5);
    CHECK(antitranspose(antitranspose(m)) == m);
  }
}

TEST_CASE("Jacobi on random triples") {
  std::mt19937 gen(11);
  for (int k = 0; k < 50; ++k) {
    const auto x = random_matrix(gen, 4);
    const auto y = random_matrix(gen, 4);
    const auto z = random_matrix(gen, 4);
    const auto sum = bracket(x, bracket(y, z)) + bracket(z, bracket(x, y)) + bracket(y, bracket(z, x));
    CHECK(sum.is_zero());
  }
}
