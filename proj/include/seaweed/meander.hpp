#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "seaweed/spec.hpp"

namespace seaweed {

/// Type-D tail configurations; NONE for every other family.
enum class TailConfig { NONE, I, II, III };

std::string_view to_string(TailConfig c);

using Edge = std::pair<int, int>;  // (lower, higher) vertex ids, 1-based

struct TailInfo {
  std::vector<int> vertices;  // ascending
  TailConfig config = TailConfig::NONE;
};

/// The meander graph on vertices 1..n. Each vertex has at most one top and at
/// most one bottom edge; the same pair may appear on both sides (a 2-cycle).
class Meander {
 public:
  Meander(AlgebraType algebra, int n, std::vector<Edge> top, std::vector<Edge> bottom, TailInfo tail);

  AlgebraType algebra() const { return algebra_; }
  int n_vertices() const { return n_; }
  const std::vector<Edge>& top_edges() const { return top_; }
  const std::vector<Edge>& bottom_edges() const { return bottom_; }
  const std::vector<int>& tail() const { return tail_.vertices; }
  TailConfig tail_config() const { return tail_.config; }

  /// Partner across a top (bottom) edge, or 0 when there is none.
  int top_partner(int v) const { return top_partner_[v]; }
  int bottom_partner(int v) const { return bottom_partner_[v]; }
  int degree(int v) const { return (top_partner_[v] ? 1 : 0) + (bottom_partner_[v] ? 1 : 0); }
  bool in_tail(int v) const { return in_tail_[v]; }

 private:
  AlgebraType algebra_;
  int n_;
  std::vector<Edge> top_;
  std::vector<Edge> bottom_;
  TailInfo tail_;
  std::vector<int> top_partner_;
  std::vector<int> bottom_partner_;
  std::vector<bool> in_tail_;
};

enum class ComponentKind { Path, Cycle };

struct Component {
  std::vector<int> vertices;  // traversal order
  ComponentKind kind = ComponentKind::Path;
  int tail_count = 0;
};

struct ComponentSummary {
  int cycles = 0;
  int paths = 0;         // isolated vertices included
  int tailed_paths = 0;  // paths holding zero or two tail vertices
  std::vector<Component> components;  // ordered by smallest vertex
};

/// Top-block edges (i+k, j-k) for every block [i..j] of `parts`, blocks laid
/// out from vertex 1.
std::vector<Edge> block_edges(const Composition& parts);

TailInfo tail(const SeaweedSpec& spec);

/// Throws InvalidSpecError for invalid specs.
Meander build_meander(const SeaweedSpec& spec);

ComponentSummary components(const Meander& m);

}  // namespace seaweed
