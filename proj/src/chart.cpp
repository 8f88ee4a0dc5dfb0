#include "wythoff/chart.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "wythoff/closedform.hpp"

namespace wythoff {

namespace {

std::function<bool(Position)> membership(const std::string& set_id) {
    if (set_id == "p0") {
        return [](Position p) { return p0_contains(p); };
    }
    if (set_id == "p1") {
        return [](Position p) { return p1_contains(p); };
    }
    if (set_id == "p2") {
        return [](Position p) { return p2_contains(p); };
    }
    if (set_id == "a" || set_id == "b" || set_id == "c") {
        const std::vector<Position>& s =
            set_id == "a" ? set_a() : (set_id == "b" ? set_b() : set_c());
        return [&s](Position p) { return std::find(s.begin(), s.end(), p) != s.end(); };
    }
    throw std::invalid_argument("unknown chart set id: " + set_id);
}

void check_color(const std::string& color) {
    if (color.empty() || color.find_first_of("\"<>&") != std::string::npos) {
        throw std::invalid_argument("unusable chart color: " + color);
    }
}

}  // namespace

const std::vector<std::string>& chart_set_ids() {
    static const std::vector<std::string> ids = {"p0", "p1", "p2", "a", "b", "c"};
    return ids;
}

std::string render_chart_svg(const ChartSpec& spec) {
    if (spec.layers.empty()) {
        throw std::invalid_argument("chart needs at least one layer");
    }
    if (spec.cell_size == 0) {
        throw std::invalid_argument("chart cell size must be positive");
    }
    if (spec.bound > 4096) {
        throw std::length_error("chart bound above 4096 would produce an unusable document");
    }
    std::vector<std::function<bool(Position)>> members;
    members.reserve(spec.layers.size());
    for (const ChartLayer& layer : spec.layers) {
        check_color(layer.color);
        members.push_back(membership(layer.set_id));
    }

    const std::uint64_t cells = spec.bound + std::uint64_t{1};
    const std::uint64_t cs = spec.cell_size;
    const std::uint64_t side = cells * cs;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
        << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << side << "\" height=\"" << side
        << "\" fill=\"white\"/>\n";

    // terminal shading below all layers
    for (std::uint64_t y = 0; y <= spec.bound; ++y) {
        for (std::uint64_t x = 0; x <= spec.bound; ++x) {
            if (x + y <= 2) {
                svg << "<rect x=\"" << x * cs << "\" y=\"" << y * cs << "\" width=\"" << cs
                    << "\" height=\"" << cs << "\" fill=\"#dddddd\"/>\n";
            }
        }
    }

    for (std::uint64_t y = 0; y <= spec.bound; ++y) {
        for (std::uint64_t x = 0; x <= spec.bound; ++x) {
            const Position p{x, y};
            if (spec.overlay) {
                // stack every matching layer; half opacity past the first
                // so intersections read as blends
                bool first = true;
                for (std::size_t i = 0; i < members.size(); ++i) {
                    if (!members[i](p)) {
                        continue;
                    }
                    svg << "<rect x=\"" << x * cs << "\" y=\"" << y * cs << "\" width=\"" << cs
                        << "\" height=\"" << cs << "\" fill=\"" << spec.layers[i].color << "\"";
                    if (!first) {
                        svg << " fill-opacity=\"0.5\"";
                    }
                    svg << "/>\n";
                    first = false;
                }
            } else {
                // last matching layer wins
                for (std::size_t i = members.size(); i-- > 0;) {
                    if (members[i](p)) {
                        svg << "<rect x=\"" << x * cs << "\" y=\"" << y * cs << "\" width=\""
                            << cs << "\" height=\"" << cs << "\" fill=\"" << spec.layers[i].color
                            << "\"/>\n";
                        break;
                    }
                }
            }
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace wythoff
