#pragma once

#include <string>
#include <vector>

#include "tricycle/types.hpp"

namespace tricycle {

struct SvgSeries {
    std::string label;
    std::string color;
    std::vector<Vec2> pts;
};

/// Plot polyline tracks into a standalone SVG with a legend. View box is
/// the joint bounding box with a 5% margin; output is deterministic and
/// written atomically (temporary file + rename).
void write_svg_tracks(const std::string& path, const std::vector<SvgSeries>& series,
                      double width_px = 800.0);

}  // namespace tricycle
