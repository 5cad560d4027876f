#include "seaweed/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>
#include <tuple>

#include "seaweed/delta.hpp"
#include "seaweed/index.hpp"
#include "seaweed/lie.hpp"
#include "seaweed/oracle.hpp"

namespace seaweed {

namespace {

// Every t∘b cycle of the associated p^A_n a|b / c|(n-c) has constant difference delta.
std::optional<std::string> delta_disagreement(const SeaweedSpec& spec, int delta) {
  const int n = spec.n;
  const int c = spec.bottom[0];
  const SeaweedSpec assoc{AlgebraType::A, n, spec.top, Composition{{c, n - c}}};
  for (const auto& cycle : top_bottom_cycles(build_meander(assoc))) {
    if (cycle.size() < 2) continue;
    const auto r = difference_report(cycle, n);
    if (!r.canonical_delta || *r.canonical_delta != delta) {
      return "t∘b cycle of " + format_spec(assoc) + " starting at " + std::to_string(cycle.front()) +
             " does not step by " + std::to_string(delta);
    }
  }
  return std::nullopt;
}

}  // namespace

SpecCheck check_spec(const SeaweedSpec& spec, bool oracle, int trials, std::uint64_t seed) {
  SpecCheck out;
  const std::string name = format_spec(spec);
  out.combinatorial = index_combinatorial(spec).index;
  auto mismatch = [&](std::string check, std::string detail) {
    out.mismatches.push_back({name, std::move(check), out.combinatorial, out.closed_form, out.oracle, std::move(detail)});
  };

  if (auto cf = index_closed_form(spec)) {
    out.closed_form = cf->index;
    out.closed_form_rule = cf->rule;
  }
  if (oracle) out.oracle = index_oracle(seaweed_basis(spec), trials, seed);

  if (out.closed_form && *out.closed_form != out.combinatorial) mismatch("closed_form", out.closed_form_rule);
  if (out.oracle && *out.oracle != out.combinatorial) mismatch("oracle", "");

  const auto verdict = classify_frobenius(spec);
  out.frobenius = verdict.frobenius;
  out.justification = verdict.justification;
  if (verdict.frobenius != (out.combinatorial == 0)) mismatch("classifier", "verdict");
  if (verdict.rule_verdict && *verdict.rule_verdict != (out.combinatorial == 0)) {
    mismatch("classifier", verdict.justification);
  }
  if (verdict.certificate.delta) {
    if (auto why = delta_disagreement(spec, *verdict.certificate.delta)) mismatch("delta", *why);
  }
  return out;
}

int sweep_budget() {
  if (const char* env = std::getenv("SEAWEED_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return 10;
}

SweepReport run_sweep(const SweepOptions& options) {
  const int budget = sweep_budget();
  if (options.n_max > budget) {
    throw BudgetError("n-max " + std::to_string(options.n_max) + " exceeds the sweep budget " +
                      std::to_string(budget) + " (SEAWEED_MAX_N)");
  }
  if (options.n_min < 1 || options.n_min > options.n_max) throw std::invalid_argument("empty n range");

  const auto start = std::chrono::steady_clock::now();
  std::vector<SeaweedSpec> specs;
  for (int n = options.n_min; n <= options.n_max; ++n) {
    for_each_spec(options.algebra, n, [&specs](const SeaweedSpec& s) { specs.push_back(s); });
  }

  std::vector<SpecCheck> results(specs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      results[i] = check_spec(specs[i], options.oracle, options.trials, options.seed);
    }
  };
  unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, specs.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  SweepReport report;
  report.algebra = options.algebra;
  report.n_min = options.n_min;
  report.n_max = options.n_max;
  for (int n = options.n_min; n <= options.n_max; ++n) {
    report.spec_counts[n] = 0;
    report.frobenius_counts[n] = 0;
  }
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& r = results[i];
    ++report.specs_checked;
    ++report.spec_counts[specs[i].n];
    if (r.frobenius) ++report.frobenius_counts[specs[i].n];
    if (r.closed_form) ++report.closed_form_checked;
    if (r.oracle) ++report.oracle_checked;
    if (r.justification != "MEANDER_FOREST") ++report.rule_checked;
    report.mismatches.insert(report.mismatches.end(), r.mismatches.begin(), r.mismatches.end());
  }
  std::sort(report.mismatches.begin(), report.mismatches.end(),
            [](const SweepMismatch& a, const SweepMismatch& b) {
              return std::tie(a.spec, a.check, a.detail) < std::tie(b.spec, b.check, b.detail);
            });
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::ordered_json sweep_json(const SweepReport& report, bool with_timing) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = "seaweed.sweep/1";
  j["algebra"] = std::string(to_string(report.algebra));
  j["n_range"] = {report.n_min, report.n_max};
  j["specs_checked"] = report.specs_checked;
  j["closed_form_checked"] = report.closed_form_checked;
  j["rule_checked"] = report.rule_checked;
  j["oracle_checked"] = report.oracle_checked;
  ordered_json counts = ordered_json::array();
  for (const auto& [n, c] : report.spec_counts) {
    counts.push_back({{"n", n}, {"specs", c}, {"frobenius", report.frobenius_counts.at(n)}});
  }
  j["per_n"] = counts;
  ordered_json mm = ordered_json::array();
  for (const auto& m : report.mismatches) {
    ordered_json e;
    e["spec"] = m.spec;
    e["check"] = m.check;
    e["combinatorial"] = m.combinatorial;
    e["closed_form"] = m.closed_form ? ordered_json(*m.closed_form) : ordered_json(nullptr);
    e["oracle"] = m.oracle ? ordered_json(*m.oracle) : ordered_json(nullptr);
    e["detail"] = m.detail;
    mm.push_back(e);
  }
  j["mismatches"] = mm;
  if (with_timing) j["elapsed_seconds"] = report.elapsed_seconds;
  return j;
}

}  // namespace seaweed
