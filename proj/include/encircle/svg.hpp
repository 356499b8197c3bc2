#pragma once

#include "encircle/pipeline.hpp"
#include "encircle/scenario.hpp"

#include <filesystem>
#include <string>

namespace encircle {

/// SVG of the scene: nodes as dots with area proportional to weight, selected
/// nodes highlighted, the coverage circle and the UAV ground projection.
std::string render_svg(const Scenario& scenario, const Report& report);

/// render_svg() to a file; throws IoError on write failure.
void render_svg(const Scenario& scenario, const Report& report, const std::filesystem::path& path);

}  // namespace encircle
