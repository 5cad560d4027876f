#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "seaweed/meander.hpp"

namespace seaweed {

enum class LoopSide { Top, Bottom };

struct SelfLoop {
  int vertex = 0;
  LoopSide side = LoopSide::Top;
  friend bool operator==(const SelfLoop&, const SelfLoop&) = default;
};

/// A single-path meander with self-loops on its endpoints, so that every
/// vertex has exactly one top and one bottom incidence.
struct AugmentedMeander {
  Meander base;
  std::vector<SelfLoop> loops;  // ascending by vertex; an isolated vertex carries both

  int top(int v) const;     // t(v)
  int bottom(int v) const;  // b(v)
};

struct DeltaReport {
  std::vector<int> sigma;        // the n-cycle of t∘b from the start vertex
  std::vector<int> differences;  // (sigma[k+1] - sigma[k]) mod n, cyclically; n values
  std::vector<std::pair<int, int>> distinct_values;  // (value, multiplicity), ascending value
  std::optional<int> canonical_delta;                // set when all differences agree
};

class NotSinglePathError : public std::invalid_argument {
 public:
  explicit NotSinglePathError(int component_count);
  int component_count() const noexcept { return count_; }

 private:
  int count_;
};

/// Throws NotSinglePathError unless the meander is one path (and no cycles).
AugmentedMeander augment_with_loops(const Meander& m);

/// Iterates v <- t(b(v)) from the smaller loop endpoint.
DeltaReport permutation_cycle(const AugmentedMeander& aug);

/// All cycles of t∘b when every vertex missing a top (bottom) edge is given a
/// top (bottom) self-loop. Works for any meander; each cycle starts at its
/// smallest vertex, cycles ordered by that vertex.
std::vector<std::vector<int>> top_bottom_cycles(const Meander& m);

/// Cyclic differences mod n of a vertex sequence, as in DeltaReport.
DeltaReport difference_report(std::vector<int> sequence, int n);

/// (a + d) mod n for a Frobenius p^A_n a|b / c|d (n = a+b = c+d).
/// Throws std::invalid_argument when the seaweed is not Frobenius.
int canonical_delta_formula(int a, int b, int c, int d);

}  // namespace seaweed
