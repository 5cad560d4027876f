#include "seaweed/meander.hpp"

#include <algorithm>
#include <stdexcept>

namespace seaweed {

std::string_view to_string(TailConfig c) {
  switch (c) {
    case TailConfig::NONE: return "NONE";
    case TailConfig::I: return "I";
    case TailConfig::II: return "II";
    case TailConfig::III: return "III";
  }
  return "?";
}

Meander::Meander(AlgebraType algebra, int n, std::vector<Edge> top, std::vector<Edge> bottom,
                 TailInfo tail)
    : algebra_(algebra),
      n_(n),
      top_(std::move(top)),
      bottom_(std::move(bottom)),
      tail_(std::move(tail)),
      top_partner_(n + 1, 0),
      bottom_partner_(n + 1, 0),
      in_tail_(n + 1, false) {
  auto attach = [n](const std::vector<Edge>& edges, std::vector<int>& partner, const char* side) {
    for (auto [u, v] : edges) {
      if (u < 1 || v > n || u >= v) throw std::invalid_argument(std::string("malformed ") + side + " edge");
      if (partner[u] || partner[v]) throw std::invalid_argument(std::string("vertex with two ") + side + " edges");
      partner[u] = v;
      partner[v] = u;
    }
  };
  attach(top_, top_partner_, "top");
  attach(bottom_, bottom_partner_, "bottom");
  for (int v : tail_.vertices) {
    if (v < 1 || v > n) throw std::invalid_argument("tail vertex out of range");
    in_tail_[v] = true;
  }
}

std::vector<Edge> block_edges(const Composition& parts) {
  std::vector<Edge> edges;
  int first = 1;
  for (int size : parts.parts) {
    const int last = first + size - 1;
    for (int k = 0; first + k < last - k; ++k) edges.emplace_back(first + k, last - k);
    first += size;
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

TailInfo tail(const SeaweedSpec& spec) {
  TailInfo info;
  if (!uses_partial_compositions(spec.algebra)) return info;

  const int r = spec.top.sum();
  const int s = spec.bottom.sum();
  for (int v = s + 1; v <= r; ++v) info.vertices.push_back(v);
  if (spec.algebra != AlgebraType::D) return info;

  const int t = r - s;
  if (t % 2 == 0) {
    info.config = TailConfig::I;
  } else if (r < spec.n) {
    info.config = TailConfig::II;
    info.vertices.push_back(r + 1);
  } else {
    info.config = TailConfig::III;
    info.vertices.pop_back();  // v_n, the last vertex of T^C since r = n
  }
  return info;
}

Meander build_meander(const SeaweedSpec& spec) {
  require_valid(spec);
  Meander m(spec.algebra, spec.n, block_edges(spec.top), block_edges(spec.bottom), tail(spec));
  for (int v : m.tail()) {
    if (m.degree(v) > 1) throw std::logic_error("tail vertex of degree two");
  }
  return m;
}

namespace {

// Walks from `start` leaving first along `top_first`'s side, alternating
// sides, until the walk ends or returns to `start`.
std::vector<int> walk(const Meander& m, int start, bool top_first) {
  std::vector<int> order{start};
  bool use_top = top_first;
  int cur = start;
  while (true) {
    const int next = use_top ? m.top_partner(cur) : m.bottom_partner(cur);
    if (next == 0 || next == start) break;
    order.push_back(next);
    cur = next;
    use_top = !use_top;
  }
  return order;
}

}  // namespace

ComponentSummary components(const Meander& m) {
  const int n = m.n_vertices();
  ComponentSummary summary;
  std::vector<bool> seen(n + 1, false);

  auto record = [&](std::vector<int> vertices, ComponentKind kind) {
    Component c;
    c.kind = kind;
    for (int v : vertices) {
      seen[v] = true;
      if (m.in_tail(v)) ++c.tail_count;
    }
    c.vertices = std::move(vertices);
    if (c.tail_count > 2) throw std::logic_error("component with more than two tail vertices");
    if (kind == ComponentKind::Cycle) {
      if (c.tail_count != 0) throw std::logic_error("tail vertex on a cycle");
      ++summary.cycles;
    } else {
      ++summary.paths;
      if (c.tail_count != 1) ++summary.tailed_paths;
    }
    summary.components.push_back(std::move(c));
  };

  // Paths first, each entered at its lower endpoint (ascending scan).
  for (int v = 1; v <= n; ++v) {
    if (seen[v] || m.degree(v) == 2) continue;
    record(walk(m, v, m.top_partner(v) != 0), ComponentKind::Path);
  }
  // Whatever remains has every degree equal to two.
  for (int v = 1; v <= n; ++v) {
    if (seen[v]) continue;
    record(walk(m, v, true), ComponentKind::Cycle);
  }

  std::sort(summary.components.begin(), summary.components.end(), [](const Component& a, const Component& b) {
    return *std::min_element(a.vertices.begin(), a.vertices.end()) <
           *std::min_element(b.vertices.begin(), b.vertices.end());
  });
  return summary;
}

}  // namespace seaweed
