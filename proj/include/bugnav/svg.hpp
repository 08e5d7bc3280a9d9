#pragma once

#include <string>
#include <vector>

#include "bugnav/sim.hpp"
#include "bugnav/world.hpp"

namespace bugnav {

struct TracePlot {
    std::string label;
    std::vector<TraceSample> samples;
};

/// Deterministic SVG figure: workspace bounds, filled obstacles, start/goal
/// markers, one polyline per trace with its own stroke and legend entry, and
/// leave points marked where boundary following hands back to goal seeking.
std::string render_svg(const Environment& env, const std::vector<TracePlot>& traces);

void write_svg(const Environment& env, const std::vector<TracePlot>& traces,
               const std::string& path);

}  // namespace bugnav
