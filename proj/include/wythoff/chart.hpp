#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wythoff {

// Static SVG board charts. The board is drawn with (0,0) in the top-left
// corner, x growing rightward and y downward, matching the orientation of a
// queen that moves toward the upper-left. Terminal cells (x+y <= 2) are
// shaded, then each layer fills its member cells; later layers draw over
// earlier ones, or blend with them in overlay mode. Rectangles only, no
// timestamps: identical specs yield identical bytes.

struct ChartLayer {
    std::string set_id;  // one of: p0, p1, p2, a, b, c
    std::string color;   // any SVG color token
};

struct ChartSpec {
    std::uint32_t bound = 0;
    std::vector<ChartLayer> layers;
    std::uint32_t cell_size = 16;
    bool overlay = false;
};

// All recognized layer set identifiers.
const std::vector<std::string>& chart_set_ids();

// Render to an SVG document. Throws std::invalid_argument for an unknown
// set id, an empty layer list, or an unusable color/cell size, and
// std::length_error for bounds past 4096 (the document would be unusable).
std::string render_chart_svg(const ChartSpec& spec);

}  // namespace wythoff
