#include <doctest.h>

#include "seaweed/meander.hpp"

using namespace seaweed;

TEST_CASE("block edges") {
  CHECK(block_edges(Composition{{4, 1}}) == std::vector<Edge>{{1, 4}, {2, 3}});
  CHECK(block_edges(Composition{{2, 1, 2}}) == std::vector<Edge>{{1, 2}, {4, 5}});
  CHECK(block_edges(Composition{}).empty());
}

TEST_CASE("type A meander components") {
  const auto m = build_meander(parse_spec("A5:4|1/2|1|2"));
  const auto s = components(m);
  CHECK(s.cycles == 0);
  CHECK(s.paths == 1);
  CHECK(s.components.front().vertices == std::vector<int>{3, 2, 1, 4, 5});
}

TEST_CASE("a shared edge on both sides is a 2-cycle") {
  const auto s = components(build_meander(parse_spec("GL2:2/2")));
  CHECK(s.cycles == 1);
  CHECK(s.paths == 0);
}

TEST_CASE("tails and configurations") {
  CHECK(tail(parse_spec("C5:1|4/3")).vertices == std::vector<int>{4, 5});
  CHECK(tail(parse_spec("D9:4|3/3|3")).vertices == std::vector<int>{7, 8});
  CHECK(tail(parse_spec("D9:4|3/3|3")).config == TailConfig::II);
  CHECK(tail(parse_spec("D8:3|5/4")).config == TailConfig::I);
  CHECK(tail(parse_spec("D10:4|6/7")).config == TailConfig::III);
  CHECK(tail(parse_spec("D10:4|6/7")).vertices == std::vector<int>{8, 9});
  CHECK(tail(parse_spec("A3:2|1/1|2")).vertices.empty());
}

TEST_CASE("tail vertices have degree at most one") {
  for (auto t : {AlgebraType::B, AlgebraType::C, AlgebraType::D}) {
    for (int n = 1; n <= 5; ++n) {
      for (const auto& spec : enumerate_specs(t, n)) {
        const auto m = build_meander(spec);
        for (int v : m.tail()) CHECK(m.degree(v) <= 1);
        int total = 0;
        for (const auto& c : components(m).components) total += static_cast<int>(c.vertices.size());
        CHECK(total == n);
      }
    }
  }
}
