#include <doctest.h>

#include "seaweed/oracle.hpp"

using namespace seaweed;

namespace {
LieData sl2() {
  // e = 0, h = 1, f = 2: [h,e] = 2e, [h,f] = -2f, [e,f] = h
  StructureTable t;
  t[{1, 0}] = {{0, mpq_class(2)}};
  t[{1, 2}] = {{2, mpq_class(-2)}};
  t[{0, 2}] = {{1, mpq_class(1)}};
  return lie_from_structure_constants(3, t);
}

int rank_of(const SkewForm& f) { return rank_exact(f.matrix); }
}  // namespace

TEST_CASE("Kirillov matrices") {
  const auto lie = seaweed_basis(parse_spec("A4:2|2/1|3"));
  const Functional zero{std::vector<mpz_class>(lie.dimension)};
  CHECK(rank_of(kirillov_matrix(lie, zero)) == 0);
  const auto abelian = lie_from_structure_constants(4, {});
  CHECK(rank_of(kirillov_matrix(abelian, Functional{{1, 2, 3, 4}})) == 0);
  const auto form = kirillov_matrix(sl2(), Functional{{1, 0, 0}});
  CHECK(rank_of(form) == 2);
  FunctionalSampler sampler(5);
  const auto f = kirillov_matrix(lie, sampler.draw(lie.dimension));
  for (int i = 0; i < lie.dimension; ++i)
    for (int j = 0; j < lie.dimension; ++j) CHECK(f.matrix[i][j] == -f.matrix[j][i]);
  CHECK(rank_of(f) % 2 == 0);
  CHECK_THROWS_AS(kirillov_matrix(lie, Functional{{1}}), std::invalid_argument);
}

TEST_CASE("sampler is deterministic and in range") {
  FunctionalSampler a(42), b(42);
  const auto x = a.draw(100);
  CHECK(x.coefficients == b.draw(100).coefficients);
  for (const auto& c : x.coefficients) CHECK(abs(c) <= 1'000'000);
  FunctionalSampler small(1, 3);
  for (const auto& c : small.draw(200).coefficients) CHECK(abs(c) <= 3);
}

TEST_CASE("oracle index fixtures") {
  CHECK(index_oracle(seaweed_basis(parse_spec("A5:4|1/2|1|2"))) == 0);
  CHECK(index_oracle(seaweed_basis(parse_spec("GL4:4/4"))) == 4);
  CHECK(index_oracle(seaweed_basis(parse_spec("D5:1|4/2"))) == 2);
  CHECK(index_oracle(sl2()) == 1);
  CHECK(index_oracle(seaweed_basis(parse_spec("C3:2|1/3")), 3, 17) ==
        index_oracle(seaweed_basis(parse_spec("C3:2|1/3")), 3, 17));
  CHECK_THROWS(index_oracle(sl2(), 0, 0));
}

TEST_CASE("principal elements") {
  const auto lie = seaweed_basis(parse_spec("A4:2|2/1|3"));
  CHECK_THROWS_AS(principal_element(lie, Functional{std::vector<mpz_class>(lie.dimension)}), OracleError);
  const auto report = ad_spectrum(lie);
  const auto& c = report.principal;
  // residual: sum_i c_i f([x_i, x_j]) = f(x_j)
  for (int j = 0; j < lie.dimension; ++j) {
    mpq_class s = 0;
    for (int i = 0; i < lie.dimension; ++i)
      for (const auto& [k, v] : lie.bracket(i, j)) s += c[i] * v * report.functional.coefficients[k];
    CHECK(s == report.functional.coefficients[j]);
  }
  FunctionalSampler sampler(0);
  CHECK(principal_element(four_dim_family(0), sampler.draw(4)).size() == 4);
}

TEST_CASE("spectra") {
  const auto r = ad_spectrum(seaweed_basis(parse_spec("A4:2|2/1|3")));
  CHECK(r.eigenvalues == std::map<int, int>{{-1, 1}, {0, 3}, {1, 3}, {2, 1}});
  CHECK(r.unbroken);
  CHECK(r.symmetric_about_half);
  const auto z2 = ad_spectrum(four_dim_family(-2));
  CHECK(z2.eigenvalues == std::map<int, int>{{-1, 1}, {0, 1}, {1, 1}, {2, 1}});
  const auto z1 = ad_spectrum(four_dim_family(1));
  CHECK(z1.status == "NON_INTEGRAL_SPECTRUM");
  CHECK(z1.defect == 2);
  CHECK(z1.eigenvalues == std::map<int, int>{{0, 1}, {1, 1}});
  const auto z0 = ad_spectrum(four_dim_family(0));
  CHECK(z0.eigenvalues == std::map<int, int>{{0, 2}, {1, 2}});
  CHECK_THROWS_AS(ad_spectrum(seaweed_basis(parse_spec("A8:4|4/8"))), OracleError);
  CHECK_THROWS_AS(ad_spectrum(sl2()), OracleError);
}
