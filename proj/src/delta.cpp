#include "seaweed/delta.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "seaweed/index.hpp"

namespace seaweed {

NotSinglePathError::NotSinglePathError(int component_count)
    : std::invalid_argument("meander is not a single path (" + std::to_string(component_count) +
                            " components)"),
      count_(component_count) {}

int AugmentedMeander::top(int v) const {
  const int p = base.top_partner(v);
  return p ? p : v;
}

int AugmentedMeander::bottom(int v) const {
  const int p = base.bottom_partner(v);
  return p ? p : v;
}

AugmentedMeander augment_with_loops(const Meander& m) {
  const auto summary = components(m);
  const int count = static_cast<int>(summary.components.size());
  if (count != 1 || summary.cycles != 0) throw NotSinglePathError(count);

  std::vector<SelfLoop> loops;
  for (int v = 1; v <= m.n_vertices(); ++v) {
    if (m.top_partner(v) == 0) loops.push_back({v, LoopSide::Top});
    if (m.bottom_partner(v) == 0) loops.push_back({v, LoopSide::Bottom});
  }
  std::stable_sort(loops.begin(), loops.end(),
                   [](const SelfLoop& x, const SelfLoop& y) { return x.vertex < y.vertex; });
  return AugmentedMeander{m, std::move(loops)};
}

DeltaReport difference_report(std::vector<int> sequence, int n) {
  DeltaReport r;
  r.sigma = std::move(sequence);
  const std::size_t len = r.sigma.size();
  std::map<int, int> counts;
  for (std::size_t k = 0; k < len; ++k) {
    const int next = r.sigma[(k + 1) % len];
    const int d = ((next - r.sigma[k]) % n + n) % n;
    r.differences.push_back(d);
    ++counts[d];
  }
  r.distinct_values.assign(counts.begin(), counts.end());
  if (r.distinct_values.size() == 1) r.canonical_delta = r.distinct_values.front().first;
  return r;
}

DeltaReport permutation_cycle(const AugmentedMeander& aug) {
  const int n = aug.base.n_vertices();
  const int start = aug.loops.front().vertex;
  std::vector<int> sigma{start};
  for (int v = aug.top(aug.bottom(start)); v != start; v = aug.top(aug.bottom(v))) {
    sigma.push_back(v);
    if (static_cast<int>(sigma.size()) > n) throw std::logic_error("t∘b did not close");
  }
  if (static_cast<int>(sigma.size()) != n) throw std::logic_error("t∘b is not an n-cycle");
  return difference_report(std::move(sigma), n);
}

std::vector<std::vector<int>> top_bottom_cycles(const Meander& m) {
  const int n = m.n_vertices();
  auto t = [&m](int v) { return m.top_partner(v) ? m.top_partner(v) : v; };
  auto b = [&m](int v) { return m.bottom_partner(v) ? m.bottom_partner(v) : v; };
  std::vector<bool> seen(n + 1, false);
  std::vector<std::vector<int>> cycles;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    int v = start;
    do {
      seen[v] = true;
      cycle.push_back(v);
      v = t(b(v));
    } while (v != start);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

int canonical_delta_formula(int a, int b, int c, int d) {
  const int n = a + b;
  if (a < 1 || b < 1 || c < 1 || d < 1 || c + d != n) {
    throw std::invalid_argument("expected parts of p^A_n a|b / c|d with a+b = c+d");
  }
  const SeaweedSpec spec{AlgebraType::A, n, Composition{{a, b}}, Composition{{c, d}}};
  if (index_combinatorial(spec).index != 0) {
    throw std::invalid_argument(format_spec(spec) + " is not Frobenius");
  }
  return (a + d) % n;
}

}  // namespace seaweed
