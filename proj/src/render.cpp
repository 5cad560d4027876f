#include "seaweed/render.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace seaweed {

std::optional<RenderFormat> render_format_from_string(std::string_view s) {
  if (s == "dot") return RenderFormat::Dot;
  if (s == "tikz") return RenderFormat::Tikz;
  if (s == "json") return RenderFormat::Json;
  if (s == "svg") return RenderFormat::Svg;
  return std::nullopt;
}

std::string_view to_string(RenderFormat f) {
  switch (f) {
    case RenderFormat::Dot: return "dot";
    case RenderFormat::Tikz: return "tikz";
    case RenderFormat::Json: return "json";
    case RenderFormat::Svg: return "svg";
  }
  return "?";
}

namespace {

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                              "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

// component index of every vertex, 1-based vertices
std::vector<int> component_of(const Meander& m, const ComponentSummary& summary) {
  std::vector<int> comp(m.n_vertices() + 1, 0);
  for (std::size_t c = 0; c < summary.components.size(); ++c)
    for (int v : summary.components[c].vertices) comp[v] = static_cast<int>(c);
  return comp;
}

std::string edge_color(const RenderSpec& o, const std::vector<int>& comp, const Edge& e) {
  return o.color_components ? kPalette[comp[e.first] % kPalette.size()] : "black";
}

std::string render_dot(const SeaweedSpec& spec, const Meander& m, const ComponentSummary& s, const RenderSpec& o) {
  const auto comp = component_of(m, s);
  std::ostringstream out;
  out << "graph \"" << format_spec(spec) << "\" {\n";
  out << "  layout=neato;\n  splines=true;\n";
  out << "  node [shape=circle, width=0.35, fixedsize=true, fontsize=10];\n";
  for (int v = 1; v <= m.n_vertices(); ++v) {
    out << "  v" << v << " [label=\"" << v << "\", pos=\"" << v - 1 << ",0!\"";
    if (m.in_tail(v)) {
      out << ", tail=true";
      if (o.highlight_tail) out << ", style=filled, fillcolor=yellow";
    }
    out << "];\n";
  }
  for (const auto& e : m.top_edges()) {
    out << "  v" << e.first << " -- v" << e.second << " [side=top, tailport=n, headport=n, color=\""
        << edge_color(o, comp, e) << "\"];\n";
  }
  for (const auto& e : m.bottom_edges()) {
    out << "  v" << e.first << " -- v" << e.second << " [side=bottom, tailport=s, headport=s, color=\""
        << edge_color(o, comp, e) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_tikz(const SeaweedSpec& spec, const Meander& m, const ComponentSummary& s, const RenderSpec& o) {
  const auto comp = component_of(m, s);
  std::ostringstream out;
  out << "% " << format_spec(spec) << "\n";
  out << "\\begin{tikzpicture}\n";
  for (int v = 1; v <= m.n_vertices(); ++v) {
    out << "  \\node[circle, draw, inner sep=1.5pt";
    if (m.in_tail(v) && o.highlight_tail) out << ", fill=yellow";
    out << "] (v" << v << ") at (" << v - 1 << ",0) {" << v << "};\n";
  }
  auto color = [&](const Edge& e) {
    if (!o.color_components) return std::string("black");
    std::string hex = edge_color(o, comp, e).substr(1);
    return "{rgb,255:red," + std::to_string(std::stoi(hex.substr(0, 2), nullptr, 16)) + ";green," +
           std::to_string(std::stoi(hex.substr(2, 2), nullptr, 16)) + ";blue," +
           std::to_string(std::stoi(hex.substr(4, 2), nullptr, 16)) + "}";
  };
  for (const auto& e : m.top_edges())
    out << "  \\draw[color=" << color(e) << "] (v" << e.first << ") to[bend left=60] (v" << e.second << ");\n";
  for (const auto& e : m.bottom_edges())
    out << "  \\draw[color=" << color(e) << "] (v" << e.first << ") to[bend right=60] (v" << e.second << ");\n";
  out << "\\end{tikzpicture}\n";
  return out.str();
}

std::string render_svg(const SeaweedSpec& spec, const Meander& m, const ComponentSummary& s, const RenderSpec& o) {
  const auto comp = component_of(m, s);
  const int step = 40;
  int span = 1;
  for (const auto& e : m.top_edges()) span = std::max(span, e.second - e.first);
  for (const auto& e : m.bottom_edges()) span = std::max(span, e.second - e.first);
  const int radius = span * step / 2;
  const int width = (m.n_vertices() + 1) * step;
  const int height = 2 * radius + 2 * step;
  const int baseline = radius + step;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "  <title>" << format_spec(spec) << "</title>\n";
  auto x = [step](int v) { return v * step; };
  auto arc = [&](const Edge& e, int sweep) {
    const int r = (x(e.second) - x(e.first)) / 2;
    out << "  <path d=\"M " << x(e.first) << ' ' << baseline << " A " << r << ' ' << r << " 0 0 " << sweep << ' '
        << x(e.second) << ' ' << baseline << "\" fill=\"none\" stroke=\"" << edge_color(o, comp, e)
        << "\" stroke-width=\"2\"/>\n";
  };
  for (const auto& e : m.top_edges()) arc(e, 1);
  for (const auto& e : m.bottom_edges()) arc(e, 0);
  for (int v = 1; v <= m.n_vertices(); ++v) {
    const bool fill = m.in_tail(v) && o.highlight_tail;
    out << "  <circle cx=\"" << x(v) << "\" cy=\"" << baseline << "\" r=\"9\" fill=\"" << (fill ? "yellow" : "white")
        << "\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << x(v) << "\" y=\"" << baseline + 4
        << "\" font-size=\"10\" text-anchor=\"middle\">" << v << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

nlohmann::ordered_json meander_json(const SeaweedSpec& spec, const Meander& m, const ComponentSummary& summary) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = "seaweed.meander/1";
  j["spec"] = format_spec(spec);
  j["algebra"] = std::string(to_string(spec.algebra));
  j["n"] = m.n_vertices();
  auto edges = [](const std::vector<Edge>& es) {
    ordered_json a = ordered_json::array();
    for (const auto& e : es) a.push_back({e.first, e.second});
    return a;
  };
  j["top_edges"] = edges(m.top_edges());
  j["bottom_edges"] = edges(m.bottom_edges());
  j["tail"] = m.tail();
  j["tail_config"] = std::string(to_string(m.tail_config()));
  ordered_json comps = ordered_json::array();
  for (const auto& c : summary.components) {
    ordered_json cj;
    cj["kind"] = c.kind == ComponentKind::Cycle ? "cycle" : "path";
    cj["vertices"] = c.vertices;
    cj["tail_count"] = c.tail_count;
    comps.push_back(cj);
  }
  j["components"] = comps;
  return j;
}

std::string render_meander(const SeaweedSpec& spec, const RenderSpec& options) {
  const Meander m = build_meander(spec);
  const ComponentSummary s = components(m);
  switch (options.format) {
    case RenderFormat::Dot: return render_dot(spec, m, s, options);
    case RenderFormat::Tikz: return render_tikz(spec, m, s, options);
    case RenderFormat::Svg: return render_svg(spec, m, s, options);
    case RenderFormat::Json: return meander_json(spec, m, s).dump(2) + "\n";
  }
  return {};
}

}  // namespace seaweed
