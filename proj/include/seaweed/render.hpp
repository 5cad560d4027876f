#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "seaweed/meander.hpp"

namespace seaweed {

enum class RenderFormat { Dot, Tikz, Json, Svg };

std::optional<RenderFormat> render_format_from_string(std::string_view s);
std::string_view to_string(RenderFormat f);

struct RenderSpec {
  RenderFormat format = RenderFormat::Json;
  bool highlight_tail = true;
  bool color_components = false;
};

/// Byte-deterministic rendering of the meander of `spec`.
std::string render_meander(const SeaweedSpec& spec, const RenderSpec& options);

/// The "seaweed.meander/1" document.
nlohmann::ordered_json meander_json(const SeaweedSpec& spec, const Meander& m, const ComponentSummary& summary);

}  // namespace seaweed
