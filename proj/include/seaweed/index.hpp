#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "seaweed/meander.hpp"
#include "seaweed/number_theory.hpp"
#include "seaweed/spec.hpp"

namespace seaweed {

enum class IndexMethod { Meander, ClosedForm, Oracle };

std::string_view to_string(IndexMethod m);

struct IndexReport {
  int index = 0;
  IndexMethod method = IndexMethod::Meander;
  int cycles = 0;
  int paths = 0;
  int tailed_paths = 0;
  std::string rule;  // closed-form rule tag, empty otherwise
};

/// 2C+P for GL, 2C+P-1 for A, 2C+P~ for B/C/D (with the family's tail).
IndexReport index_combinatorial(const SeaweedSpec& spec);

struct ClosedFormIndex {
  int index = 0;
  std::string rule;
};

/// First gcd-style formula whose hypotheses hold, or nullopt.
///
/// Rule tags:
///   THM_3_2      A  a|b|c / n  and  a|b / c|d        gcd(a+b, b+c) - 1
///   THM_3_3      A  a|c / n                          gcd(a, c) - 1
///   THM_4_4      B,C  a|b / c, a+b = n, c in {n-1, n-2}   gcd(a+b, b+c) - 1
///   THM_4_5_i    B,C  n / a|b, a+b = n-1              gcd(a+b, b+1) - 1
///   THM_4_5_ii   B,C  n / a|b, a+b = n-2              gcd(a+b, b+2) - 1
///   EXERCISE_C2  B,C  a / b                           n if a = b, else
///                n - a + floor((a-b)/2) for even a, n - a + floor((a-b-1)/2) for odd a
///   CONFIG_I+<rule>   D with even t: the type-C rule on the same compositions
///   CONFIG_II+<rule>  D with odd t, r < n: n - (r+1) + the type-C rule for p^C_r
///   CASE1        D config III  a|b / c  with b = n - c:  a+1 if b = 1,
///                a + floor((b-3)/2) if b >= 3
std::optional<ClosedFormIndex> index_closed_form(const SeaweedSpec& spec);

struct FrobeniusCertificate {
  std::optional<int> gcd;                 // gcd(a+b, b+c) where used
  std::optional<int> delta;               // (a + n - c) mod n
  std::optional<Rational> xi;             // xi(n, delta) or xi(n/2, delta/2)
  std::optional<int> closed_form_index;   // when a closed form decided it
};

struct FrobeniusVerdict {
  bool frobenius = false;             // meander verdict: index_combinatorial == 0
  std::optional<bool> rule_verdict;   // what the cited rule concludes on its own
  std::string justification;          // rule tag, e.g. THM_4_6_i, XI_TAIL2, MEANDER_FOREST
  FrobeniusCertificate certificate;
};

/// Frobenius verdict with the strongest applicable rule attached.
///
/// Tags (rule_verdict in parentheses):
///   GL_NEVER (false); THM_3_2, THM_3_3, THM_4_5_i, THM_4_5_ii, EXERCISE_C2, CASE1
///   (closed-form index == 0); THM_4_6_i/ii/iii (true) and THM_4_6 (false) for
///   B/C a|b / c with a+b = n; CONFIG_I+... and CONFIG_II+... for type D
///   reductions; CASE2_i, CASE2_ii (true), CASE2 (false); TAIL_SIZE (false);
///   GCD3 (true); TAIL2_GCD (false); XI_TAIL2; SIZE4_NECESSARY (false); XI_TAIL4;
///   ATTACHING_LEMMA (false); MEANDER_FOREST (meander verdict, no rule).
FrobeniusVerdict classify_frobenius(const SeaweedSpec& spec);

}  // namespace seaweed
