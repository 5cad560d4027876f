#include <doctest.h>

#include "seaweed/lie.hpp"

using namespace seaweed;

TEST_CASE("admissible masks") {
  const auto a = admissible_mask(parse_spec("A5:4|1/2|1|2"));
  CHECK(a.dim == 5);
  CHECK(a.count() == 13);
  CHECK(a.allowed(4, 1));
  CHECK_FALSE(a.allowed(1, 4));
  CHECK(a.allowed(1, 2));
  CHECK(admissible_mask(parse_spec("GL4:4/4")).count() == 16);
  const auto c = admissible_mask(parse_spec("C5:1|4/3"));
  CHECK(c.dim == 10);
  CHECK(block_sizes(AlgebraType::C, 5, Composition{{1, 4}}) == std::vector<int>{1, 4, 4, 1});
  CHECK(block_sizes(AlgebraType::C, 5, Composition{{3}}) == std::vector<int>{3, 4, 3});
  CHECK(block_sizes(AlgebraType::B, 5, Composition{{3, 2}}) == std::vector<int>{3, 2, 1, 2, 3});
  CHECK(matrix_dim(AlgebraType::B, 5) == 11);
  for (int i = 1; i <= c.dim; ++i)
    for (int j = 1; j <= c.dim; ++j) CHECK(c.allowed(i, j) == c.allowed(c.dim + 1 - j, c.dim + 1 - i));
}

TEST_CASE("seaweed dimensions") {
  CHECK(seaweed_basis(parse_spec("A5:4|1/2|1|2")).dimension == 12);
  CHECK(seaweed_basis(parse_spec("GL5:4|1/2|1|2")).dimension == 13);
  CHECK(seaweed_basis(parse_spec("C1:1/1")).dimension == 1);
  CHECK(seaweed_basis(parse_spec("C1:/")).dimension == 3);
  CHECK(seaweed_basis(parse_spec("B2:/")).dimension == 10);
  CHECK(seaweed_basis(parse_spec("D3:/")).dimension == 15);
  CHECK(seaweed_basis(parse_spec("GL3:3/3")).dimension == 9);
  CHECK(seaweed_basis(parse_spec("A3:3/3")).dimension == 8);
}

TEST_CASE("symmetry constraints of B, C and D bases") {
  for (auto t : {AlgebraType::B, AlgebraType::C, AlgebraType::D}) {
    const SeaweedSpec full{t, 3, {}, {}};
    const auto lie = seaweed_basis(full);
    const int n = full.n;
    for (const auto& x : lie.basis) {
      const auto hat = antitranspose(x);
      if (t == AlgebraType::C) {
        for (const auto& [cell, v] : x.entries()) {
          const int ei = cell.first <= n ? 1 : -1;
          const int ej = cell.second <= n ? 1 : -1;
          CHECK(x.at(x.dim() + 1 - cell.second, x.dim() + 1 - cell.first) == -ei * ej * v);
        }
      } else {
        CHECK(hat == x * -1);
      }
    }
  }
}

TEST_CASE("coordinates round trip") {
  const auto lie = seaweed_basis(parse_spec("C3:2|1/3"));
  for (int k = 0; k < lie.dimension; ++k) {
    const auto c = coordinates(lie, lie.basis[k]);
    REQUIRE(c);
    CHECK(c->size() == 1);
    CHECK(c->front().first == k);
  }
  CHECK_FALSE(coordinates(lie, SparseIntMatrix::unit(6, 1, 6)));
}

TEST_CASE("structure constant tables") {
  StructureTable heis;
  heis[{0, 1}] = {{2, mpq_class(1)}};
  const auto h = lie_from_structure_constants(3, heis);
  CHECK(h.bracket(1, 0) == SparseVector{{2, mpq_class(-1)}});
  CHECK(h.bracket(0, 2).empty());
  CHECK(four_dim_family(0).dimension == 4);
  CHECK(four_dim_family(-2).dimension == 4);
  CHECK(is_antisymmetric(four_dim_family(mpq_class(3, 7))));

  StructureTable bad;
  bad[{0, 1}] = {{1, mpq_class(1)}};
  bad[{0, 2}] = {{2, mpq_class(1)}};
  bad[{1, 2}] = {{0, mpq_class(1)}};
  CHECK_THROWS_AS(lie_from_structure_constants(3, bad), JacobiError);

  StructureTable conflict;
  conflict[{0, 1}] = {{2, mpq_class(1)}};
  conflict[{1, 0}] = {{2, mpq_class(1)}};
  CHECK_THROWS_AS(lie_from_structure_constants(3, conflict), std::invalid_argument);
}

TEST_CASE("closure, Jacobi and dimension formulas on small sweeps") {
  for (auto t : {AlgebraType::GL, AlgebraType::A, AlgebraType::B, AlgebraType::C, AlgebraType::D}) {
    for (int n = 1; n <= 3; ++n) {
      for (const auto& s : enumerate_specs(t, n)) {
        const auto lie = seaweed_basis(s);
        CHECK_FALSE(find_jacobi_violation(lie));
        CHECK(lie.dimension == dimension_from_mask(t, admissible_mask(s)));
        if (!uses_partial_compositions(t)) CHECK(lie.dimension == dimension_from_compositions(s));
      }
    }
  }
}
