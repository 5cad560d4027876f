#include <doctest.h>

#include <numeric>

#include "seaweed/index.hpp"

using namespace seaweed;

namespace {
int idx(const char* s) { return index_combinatorial(parse_spec(s)).index; }
}  // namespace

TEST_CASE("meander index fixtures") {
  CHECK(idx("GL26:5|7|4|10/8|6|6|6") == 3);
  CHECK(idx("A5:4|1/2|1|2") == 0);
  CHECK(idx("A8:4|4/8") == 3);
  CHECK(idx("C5:1|4/3") == 0);
  CHECK(idx("D5:1|4/2") == 2);
  CHECK(idx("D9:4|3|2/2|3|1") == 1);
  CHECK(idx("GL5:5/5") == 5);
  CHECK(idx("C3:/") == 3);
  CHECK(idx("D4:/") == 4);
}

TEST_CASE("closed form rules") {
  auto cf = [](const char* s) { return index_closed_form(parse_spec(s)); };
  CHECK(cf("A8:3|5/8")->rule == "THM_3_3");
  CHECK(cf("A8:4|4/8")->index == 3);
  CHECK(cf("A6:1|2|3/6")->rule == "THM_3_2");
  CHECK(cf("C14:7|7/13")->rule == "THM_4_4");
  CHECK(cf("C9:9/3|5")->rule == "THM_4_5_i");
  CHECK(cf("B9:9/3|4")->rule == "THM_4_5_ii");
  CHECK(cf("C6:4/4")->index == 6);
  CHECK(cf("D8:3|5/6")->rule == "CONFIG_I+THM_4_4");
  CHECK(cf("D9:4|3/3|3") == std::nullopt);
  CHECK(cf("D7:6|1/6")->index == 7);
  CHECK(cf("GL4:4/4") == std::nullopt);
}

TEST_CASE("two-part exercise formula matches the meander") {
  for (auto t : {AlgebraType::B, AlgebraType::C}) {
    for (int n = 1; n <= 14; ++n) {
      for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= a; ++b) {
          const SeaweedSpec s{t, n, Composition{{a}}, Composition{{b}}};
          CHECK(index_closed_form(s)->index == index_combinatorial(s).index);
        }
      }
    }
  }
}

TEST_CASE("configuration III case 1") {
  for (int n = 3; n <= 20; ++n) {
    for (int c = 1; c < n; ++c) {
      const int b = n - c;
      if (b % 2 == 0) continue;
      const int a = n - b;
      const SeaweedSpec s{AlgebraType::D, n, Composition{{a, b}}, Composition{{c}}};
      const auto cf = index_closed_form(s);
      REQUIRE(cf);
      CHECK(cf->rule == "CASE1");
      CHECK(cf->index == index_combinatorial(s).index);
    }
  }
}

TEST_CASE("classifier tags") {
  auto tag = [](const char* s) { return classify_frobenius(parse_spec(s)).justification; };
  CHECK(tag("GL3:3/3") == "GL_NEVER");
  CHECK(tag("C8:4|4/7") == "THM_4_6_i");
  CHECK(tag("C8:5|3/6") == "THM_4_6_ii");
  CHECK(tag("C8:7|1/5") == "THM_4_6_iii");
  CHECK(tag("D8:6|2/5") == "CASE2_i");
  CHECK(tag("D9:3|6/6") == "GCD3");
  CHECK(tag("D10:4|6/7") == "XI_TAIL2");
  CHECK(tag("D14:5|9/9") == "XI_TAIL4");
  CHECK(tag("D22:9|13/17") == "XI_TAIL4");
  CHECK(tag("D9:4|3|2/2|3|1") == "MEANDER_FOREST");
  CHECK(classify_frobenius(parse_spec("D10:4|6/7")).frobenius);
  CHECK_FALSE(classify_frobenius(parse_spec("D10:6|4/7")).frobenius);
}

TEST_CASE("classifier rules agree with the meander on small sweeps") {
  for (auto t : {AlgebraType::A, AlgebraType::B, AlgebraType::C, AlgebraType::D}) {
    for (int n = 1; n <= 6; ++n) {
      for (const auto& s : enumerate_specs(t, n)) {
        const auto v = classify_frobenius(s);
        CHECK(v.frobenius == (index_combinatorial(s).index == 0));
        if (v.rule_verdict) CHECK(*v.rule_verdict == v.frobenius);
      }
    }
  }
}
