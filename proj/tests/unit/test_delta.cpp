#include <doctest.h>

#include <algorithm>

#include "seaweed/delta.hpp"

using namespace seaweed;

namespace {
AugmentedMeander aug(const char* s) { return augment_with_loops(build_meander(parse_spec(s))); }
}  // namespace

TEST_CASE("loops sit on the path endpoints") {
  CHECK(aug("A10:6|4/7|3").loops == std::vector<SelfLoop>{{4, LoopSide::Bottom}, {9, LoopSide::Bottom}});
  CHECK(aug("A3:2|1/1|2").loops == std::vector<SelfLoop>{{1, LoopSide::Bottom}, {3, LoopSide::Top}});
  CHECK_THROWS_AS(aug("A8:4|4/8"), NotSinglePathError);
}

TEST_CASE("permutation cycle fixtures") {
  const auto r = permutation_cycle(aug("A10:6|4/7|3"));
  CHECK(r.sigma == std::vector<int>{4, 3, 2, 1, 10, 9, 8, 7, 6, 5});
  CHECK(r.canonical_delta == 9);
  const auto t = permutation_cycle(aug("A8:1|2|5/8"));
  CHECK(t.sigma == std::vector<int>{1, 4, 7, 3, 6, 2, 5, 8});
  CHECK(t.differences == std::vector<int>{3, 3, 4, 3, 4, 3, 3, 1});
  CHECK(t.distinct_values == std::vector<std::pair<int, int>>{{1, 1}, {3, 5}, {4, 2}});
  CHECK_FALSE(t.canonical_delta);
  CHECK(permutation_cycle(aug("A3:2|1/1|2")).sigma == std::vector<int>{1, 2, 3});
}

TEST_CASE("canonical delta formula") {
  CHECK(canonical_delta_formula(6, 4, 7, 3) == 9);
  CHECK(canonical_delta_formula(2, 1, 1, 2) == 1);
  CHECK_THROWS_AS(canonical_delta_formula(4, 4, 4, 4), std::invalid_argument);
}

TEST_CASE("sigma is a permutation and t, b are involutions") {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& s : enumerate_specs(AlgebraType::A, n)) {
      const auto m = build_meander(s);
      const auto summary = components(m);
      const bool single = summary.components.size() == 1 && summary.cycles == 0;
      const auto cycles = top_bottom_cycles(m);
      CHECK((cycles.size() == 1) == single);
      if (!single) continue;
      const auto a = augment_with_loops(m);
      for (int v = 1; v <= n; ++v) {
        CHECK(a.top(a.top(v)) == v);
        CHECK(a.bottom(a.bottom(v)) == v);
      }
      const auto r = permutation_cycle(a);
      std::vector<int> sorted = r.sigma;
      std::sort(sorted.begin(), sorted.end());
      for (int v = 1; v <= n; ++v) CHECK(sorted[v - 1] == v);
      int total = 0;
      for (const auto& [value, count] : r.distinct_values) total += count;
      CHECK(total == n);
    }
  }
}

TEST_CASE("distinct difference counts against top parts (empirical, not asserted)") {
  int checked = 0;
  int differing = 0;
  std::string first;
  for (int n = 1; n <= 12; ++n) {
    for (const auto& top : compositions(n)) {
      const SeaweedSpec s{AlgebraType::A, n, top, Composition{{n}}};
      const auto m = build_meander(s);
      const auto summary = components(m);
      if (summary.components.size() != 1 || summary.cycles != 0) continue;
      const auto r = permutation_cycle(augment_with_loops(m));
      std::vector<int> counts;
      for (const auto& [value, count] : r.distinct_values) counts.push_back(count);
      std::vector<int> parts = top.parts;
      std::sort(counts.begin(), counts.end());
      std::sort(parts.begin(), parts.end());
      ++checked;
      if (counts != parts) {
        if (first.empty()) first = format_spec(s);
        ++differing;
      }
    }
  }
  const std::string note = std::to_string(differing) + " of " + std::to_string(checked) +
                           " Frobenius shapes differ" + (first.empty() ? "" : ", first " + first);
  MESSAGE(note);
  CHECK(checked > 0);
}
