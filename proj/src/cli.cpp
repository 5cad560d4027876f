#include "seaweed/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include "seaweed/delta.hpp"
#include "seaweed/index.hpp"
#include "seaweed/oracle.hpp"
#include "seaweed/render.hpp"
#include "seaweed/sweep.hpp"

namespace seaweed::cli {

namespace {

using nlohmann::ordered_json;

class CliFailure : public std::runtime_error {
 public:
  CliFailure(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

struct SpecArgs {
  std::string text;
  std::string type;
  int n = 0;
  std::string top;
  std::string bottom;
  bool top_given = false;
  bool bottom_given = false;
};

void add_spec_options(CLI::App* cmd, SpecArgs& a, bool required_positional = false) {
  auto* pos = cmd->add_option("spec", a.text, "Seaweed, e.g. \"C5:1|4/3\"");
  if (required_positional) pos->required();
  cmd->add_option("--type", a.type, "GL, A, B, C or D");
  cmd->add_option("--n", a.n, "Size parameter");
  cmd->add_option("--top", a.top, "Top composition, e.g. 4|1 or 4,1")->each([&a](const std::string&) { a.top_given = true; });
  cmd->add_option("--bottom", a.bottom, "Bottom composition")->each([&a](const std::string&) { a.bottom_given = true; });
}

SeaweedSpec resolve_spec(const SpecArgs& a) {
  std::string text = a.text;
  if (text.empty()) {
    if (a.type.empty() || a.n <= 0) throw CliFailure(kUsage, "give a spec string or --type and --n");
    auto parts = [](std::string s) {
      std::replace(s.begin(), s.end(), ',', '|');
      return s;
    };
    text = a.type + std::to_string(a.n) + ":" + parts(a.top) + "/" + parts(a.bottom);
  } else if (!a.type.empty() || a.n > 0 || a.top_given || a.bottom_given) {
    throw CliFailure(kUsage, "give either a spec string or --type/--n/--top/--bottom, not both");
  }
  SeaweedSpec spec;
  try {
    spec = parse_spec(text);
  } catch (const SpecSyntaxError& e) {
    throw CliFailure(kUsage, std::string("syntax error at offset ") + std::to_string(e.offset()) + ": " + e.what());
  }
  const auto report = validate(spec);
  if (!report.ok) {
    std::string msg = "invalid spec " + text + ":";
    for (const auto& v : report.violations) msg += " " + v;
    throw CliFailure(kUsage, msg);
  }
  return spec;
}

void emit(const std::string& content, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw CliFailure(kIo, "cannot open " + path + " for writing");
  file << content;
  file.flush();
  if (!file) throw CliFailure(kIo, "write to " + path + " failed");
}

std::string join(const std::vector<int>& v, char sep = ' ') {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

ordered_json optional_json(const std::optional<int>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

// ---- index ----

struct IndexArgs {
  SpecArgs spec;
  std::string method = "all";
  int trials = 5;
  std::uint64_t seed = 0;
  std::string format = "text";
  bool explain = false;
  std::string out;
};

int cmd_index(const IndexArgs& a, std::ostream& out) {
  const SeaweedSpec spec = resolve_spec(a.spec);
  const IndexReport comb = index_combinatorial(spec);
  const auto cf = index_closed_form(spec);
  const auto verdict = classify_frobenius(spec);
  std::optional<int> oracle;
  if (a.method == "oracle" || a.method == "all") oracle = index_oracle(seaweed_basis(spec), a.trials, a.seed);

  std::optional<int> value;
  bool agree = true;
  if (a.method == "meander") {
    value = comb.index;
  } else if (a.method == "formula") {
    if (!cf) throw CliFailure(kPrecondition, "no closed form applies to " + format_spec(spec));
    value = cf->index;
  } else if (a.method == "oracle") {
    value = oracle;
  } else {
    value = comb.index;
    agree = (!cf || cf->index == comb.index) && *oracle == comb.index;
  }

  std::ostringstream s;
  if (a.format == "json") {
    ordered_json j;
    j["schema"] = "seaweed.index/1";
    j["spec"] = format_spec(spec);
    j["algebra"] = std::string(to_string(spec.algebra));
    j["n"] = spec.n;
    j["method"] = a.method;
    j["index"] = *value;
    j["values"] = {{"meander", comb.index},
                   {"closed_form", cf ? ordered_json(cf->index) : ordered_json(nullptr)},
                   {"oracle", optional_json(oracle)}};
    j["agree"] = agree;
    j["cycles"] = comb.cycles;
    j["paths"] = comb.paths;
    j["tailed_paths"] = comb.tailed_paths;
    j["rule"] = cf ? ordered_json(cf->rule) : ordered_json(nullptr);
    j["frobenius"] = verdict.frobenius;
    j["justification"] = verdict.justification;
    ordered_json cert;
    cert["gcd"] = optional_json(verdict.certificate.gcd);
    cert["delta"] = optional_json(verdict.certificate.delta);
    cert["xi"] = verdict.certificate.xi ? ordered_json(verdict.certificate.xi->to_string()) : ordered_json(nullptr);
    j["certificate"] = cert;
    if (a.explain) {
      const auto m = build_meander(spec);
      j["components"] = meander_json(spec, m, components(m))["components"];
    }
    s << j.dump(2) << "\n";
  } else {
    s << "spec: " << format_spec(spec) << "\n";
    s << "index: " << *value << "\n";
    s << "method: " << a.method;
    if (a.method == "all") {
      s << " (meander=" << comb.index << " closed_form=" << (cf ? std::to_string(cf->index) : "-")
        << " oracle=" << *oracle << (agree ? ", agree" : ", DISAGREE") << ")";
    }
    s << "\n";
    s << "cycles: " << comb.cycles << "  paths: " << comb.paths;
    if (uses_partial_compositions(spec.algebra)) s << "  tailed paths: " << comb.tailed_paths;
    s << "\n";
    if (cf) s << "rule: " << cf->rule << "\n";
    s << "frobenius: " << (verdict.frobenius ? "yes" : "no") << " (" << verdict.justification << ")\n";
    const auto& c = verdict.certificate;
    if (c.gcd) s << "gcd: " << *c.gcd << "\n";
    if (c.delta) s << "delta: " << *c.delta << "\n";
    if (c.xi) s << "xi: " << c.xi->to_string() << "\n";
    if (a.explain) {
      const auto m = build_meander(spec);
      if (!m.tail().empty()) s << "tail: " << join(m.tail()) << "\n";
      for (const auto& comp : components(m).components) {
        s << (comp.kind == ComponentKind::Cycle ? "cycle: " : "path: ") << join(comp.vertices);
        if (uses_partial_compositions(spec.algebra)) s << "  [tail " << comp.tail_count << "]";
        s << "\n";
      }
    }
  }
  emit(s.str(), a.out, out);
  return agree ? kOk : kMismatch;
}

// ---- meander ----

struct MeanderArgs {
  SpecArgs spec;
  std::string format = "json";
  std::string out;
  bool no_highlight = false;
  bool color_components = false;
};

int cmd_meander(const MeanderArgs& a, std::ostream& out) {
  const SeaweedSpec spec = resolve_spec(a.spec);
  const auto fmt = render_format_from_string(a.format);
  if (!fmt) throw CliFailure(kUsage, "unknown format " + a.format);
  emit(render_meander(spec, RenderSpec{*fmt, !a.no_highlight, a.color_components}), a.out, out);
  return kOk;
}

// ---- sweep ----

struct SweepArgs {
  std::string type;
  int n_min = 1;
  int n_max = 0;
  int trials = 5;
  std::uint64_t seed = 0;
  bool no_oracle = false;
  unsigned workers = 0;
  std::string out;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  const auto algebra = algebra_from_string(a.type);
  if (!algebra) throw CliFailure(kUsage, "unknown algebra type " + a.type);
  SweepOptions o;
  o.algebra = *algebra;
  o.n_min = a.n_min;
  o.n_max = a.n_max;
  o.oracle = !a.no_oracle;
  o.trials = a.trials;
  o.seed = a.seed;
  o.workers = a.workers;
  SweepReport r;
  try {
    r = run_sweep(o);
  } catch (const std::invalid_argument& e) {
    throw CliFailure(kUsage, e.what());
  }
  emit(sweep_json(r).dump(2) + "\n", a.out, out);
  err << r.specs_checked << " specs, " << r.mismatches.size() << " mismatches\n";
  return r.mismatches.empty() ? kOk : kMismatch;
}

// ---- delta ----

struct DeltaArgs {
  SpecArgs spec;
  std::string format = "text";
  std::string out;
};

int cmd_delta(const DeltaArgs& a, std::ostream& out) {
  const SeaweedSpec spec = resolve_spec(a.spec);
  if (spec.algebra != AlgebraType::A) throw CliFailure(kUsage, "delta needs a type-A seaweed");
  AugmentedMeander aug = [&] {
    try {
      return augment_with_loops(build_meander(spec));
    } catch (const NotSinglePathError& e) {
      throw CliFailure(kPrecondition, format_spec(spec) + " is not Frobenius: " + e.what());
    }
  }();
  const DeltaReport r = permutation_cycle(aug);
  std::ostringstream s;
  if (a.format == "json") {
    ordered_json j;
    j["schema"] = "seaweed.delta/1";
    j["spec"] = format_spec(spec);
    ordered_json loops = ordered_json::array();
    for (const auto& l : aug.loops) loops.push_back({{"vertex", l.vertex}, {"side", l.side == LoopSide::Top ? "top" : "bottom"}});
    j["loops"] = loops;
    j["sigma"] = r.sigma;
    j["differences"] = r.differences;
    ordered_json distinct = ordered_json::array();
    for (const auto& [v, c] : r.distinct_values) distinct.push_back({{"value", v}, {"count", c}});
    j["distinct_values"] = distinct;
    j["canonical_delta"] = optional_json(r.canonical_delta);
    s << j.dump(2) << "\n";
  } else {
    s << "spec: " << format_spec(spec) << "\n";
    s << "loops:";
    for (const auto& l : aug.loops) s << " " << (l.side == LoopSide::Top ? "top@" : "bottom@") << l.vertex;
    s << "\n";
    s << "sigma: (" << join(r.sigma) << ")\n";
    s << "differences: {" << join(r.differences, ',') << "}\n";
    s << "distinct:";
    for (const auto& [v, c] : r.distinct_values) s << " " << v << ":" << c;
    s << "\n";
    s << "delta: " << (r.canonical_delta ? std::to_string(*r.canonical_delta) : "none") << "\n";
  }
  emit(s.str(), a.out, out);
  return kOk;
}

// ---- spectrum ----

struct SpectrumArgs {
  SpecArgs spec;
  std::string file;
  int trials = 5;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string out;
};

int cmd_spectrum(const SpectrumArgs& a, std::ostream& out) {
  LieData lie;
  std::string label;
  if (!a.file.empty()) {
    if (!a.spec.text.empty() || !a.spec.type.empty()) throw CliFailure(kUsage, "give a spec or --file, not both");
    std::ifstream in(a.file, std::ios::binary);
    if (!in) throw CliFailure(kIo, "cannot read " + a.file);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      lie = parse_structure_constants(buf.str());
    } catch (const std::invalid_argument& e) {
      throw CliFailure(kUsage, a.file + ": " + e.what());
    }
    label = a.file;
  } else {
    const SeaweedSpec spec = resolve_spec(a.spec);
    lie = seaweed_basis(spec);
    label = format_spec(spec);
  }
  SpectrumOptions o;
  o.trials = a.trials;
  o.seed = a.seed;
  SpectrumReport r;
  try {
    r = ad_spectrum(lie, o);
  } catch (const OracleError& e) {
    throw CliFailure(kPrecondition, label + " is not Frobenius (" + e.what() + ")");
  }
  std::ostringstream s;
  if (a.format == "json") {
    ordered_json j;
    j["schema"] = "seaweed.spectrum/1";
    j["input"] = label;
    j["dimension"] = r.dimension;
    ordered_json ev = ordered_json::array();
    for (const auto& [k, m] : r.eigenvalues) ev.push_back({{"value", k}, {"multiplicity", m}});
    j["eigenvalues"] = ev;
    j["integral"] = r.integral;
    j["unbroken"] = r.unbroken;
    j["symmetric_about_half"] = r.symmetric_about_half;
    j["semisimple"] = r.semisimple;
    j["status"] = r.status;
    j["defect"] = r.defect;
    s << j.dump(2) << "\n";
  } else {
    std::string line;
    for (const auto& [k, m] : r.eigenvalues) line += std::to_string(k) + ":" + std::to_string(m) + " ";
    if (r.integral) {
      line += r.unbroken ? "unbroken" : "broken";
      line += r.symmetric_about_half ? " symmetric" : " asymmetric";
    } else {
      line += r.status + " defect " + std::to_string(r.defect);
    }
    if (r.integral && !r.semisimple) line += " non-semisimple";
    s << line << "\n";
  }
  emit(s.str(), a.out, out);
  return kOk;
}

}  // namespace

LieData parse_structure_constants(std::string_view text) {
  static const std::regex bracket_line(R"(^\s*(\d+)\s+(\d+)\s*->\s*(.*?)\s*$)");
  static const std::regex dim_line(R"(^\s*dim\s+(\d+)\s*$)");
  static const std::regex term(R"(^\s*(\d+)\s*:\s*([-+]?\d+(?:/\d+)?)\s*$)");
  StructureTable table;
  int dim = 0;
  std::optional<int> declared;
  std::istringstream in{std::string(text)};
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fail = [lineno](const std::string& why) {
      return std::invalid_argument("line " + std::to_string(lineno) + ": " + why);
    };
    std::smatch m;
    if (std::regex_match(line, m, dim_line)) {
      declared = std::stoi(m[1]);
      continue;
    }
    if (!std::regex_match(line, m, bracket_line)) throw fail("expected `i j -> k:coeff,...`");
    const int i = std::stoi(m[1]);
    const int j = std::stoi(m[2]);
    if (i < 1 || j < 1) throw fail("indices are 1-based");
    dim = std::max({dim, i, j});
    SparseVector vec;
    std::string rhs = m[3];
    if (!rhs.empty() && rhs != "0") {
      std::stringstream terms(rhs);
      std::string t;
      while (std::getline(terms, t, ',')) {
        std::smatch tm;
        if (!std::regex_match(t, tm, term)) throw fail("bad term `" + t + "`");
        const int k = std::stoi(tm[1]);
        if (k < 1) throw fail("indices are 1-based");
        dim = std::max(dim, k);
        mpq_class c;
        if (c.set_str(tm[2].str().front() == '+' ? tm[2].str().substr(1) : tm[2].str(), 10) != 0 || c.get_den() == 0) {
          throw fail("bad coefficient `" + tm[2].str() + "`");
        }
        c.canonicalize();
        vec.emplace_back(k - 1, c);
      }
    }
    if (table.count({i - 1, j - 1})) throw fail("bracket listed twice");
    table[{i - 1, j - 1}] = vec;
  }
  if (declared) {
    if (*declared < dim) throw std::invalid_argument("dim smaller than an index in use");
    dim = *declared;
  }
  return lie_from_structure_constants(dim, table);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seaweed Lie algebras: index, meanders, Frobenius tests, spectra", "seaweed"};
  app.require_subcommand(1);

  IndexArgs index_args;
  auto* index = app.add_subcommand("index", "Index by meander, closed form and/or oracle");
  add_spec_options(index, index_args.spec);
  index->add_option("--method", index_args.method, "meander|formula|oracle|all")
      ->check(CLI::IsMember({"meander", "formula", "oracle", "all"}));
  index->add_option("--trials", index_args.trials)->check(CLI::PositiveNumber);
  index->add_option("--seed", index_args.seed);
  index->add_option("--format", index_args.format)->check(CLI::IsMember({"text", "json"}));
  index->add_flag("--explain", index_args.explain, "List meander components");
  index->add_option("--out", index_args.out);

  MeanderArgs meander_args;
  auto* meander = app.add_subcommand("meander", "Render the meander");
  add_spec_options(meander, meander_args.spec);
  meander->add_option("--format", meander_args.format, "dot|tikz|json|svg");
  meander->add_option("--out", meander_args.out);
  meander->add_flag("--no-highlight-tail", meander_args.no_highlight);
  meander->add_flag("--color-components", meander_args.color_components);

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Exhaustive cross-check of every spec up to --n-max");
  sweep->add_option("--type", sweep_args.type)->required();
  sweep->add_option("--n-max", sweep_args.n_max)->required()->check(CLI::PositiveNumber);
  sweep->add_option("--n-min", sweep_args.n_min)->check(CLI::PositiveNumber);
  sweep->add_option("--trials", sweep_args.trials)->check(CLI::PositiveNumber);
  sweep->add_option("--seed", sweep_args.seed);
  sweep->add_flag("--no-oracle", sweep_args.no_oracle);
  sweep->add_option("--workers", sweep_args.workers);
  sweep->add_option("--out", sweep_args.out);

  DeltaArgs delta_args;
  auto* delta = app.add_subcommand("delta", "Permutation cycle and differences of a Frobenius type-A seaweed");
  add_spec_options(delta, delta_args.spec);
  delta->add_option("--format", delta_args.format)->check(CLI::IsMember({"text", "json"}));
  delta->add_option("--out", delta_args.out);

  SpectrumArgs spectrum_args;
  auto* spectrum = app.add_subcommand("spectrum", "Spectrum of ad of the principal element");
  add_spec_options(spectrum, spectrum_args.spec);
  spectrum->add_option("--file", spectrum_args.file, "Structure-constant table");
  spectrum->add_option("--trials", spectrum_args.trials)->check(CLI::PositiveNumber);
  spectrum->add_option("--seed", spectrum_args.seed);
  spectrum->add_option("--format", spectrum_args.format)->check(CLI::IsMember({"text", "json"}));
  spectrum->add_option("--out", spectrum_args.out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*index) return cmd_index(index_args, out);
    if (*meander) return cmd_meander(meander_args, out);
    if (*sweep) return cmd_sweep(sweep_args, out, err);
    if (*delta) return cmd_delta(delta_args, out);
    if (*spectrum) return cmd_spectrum(spectrum_args, out);
  } catch (const CliFailure& e) {
    err << "error: " << e.what() << "\n";
    return e.code();
  }
  return kUsage;
}

}  // namespace seaweed::cli
