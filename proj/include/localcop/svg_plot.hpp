#pragma once

#include <string>
#include <utility>
#include <vector>

namespace localcop {

/// Self-contained SVG line plot of (x, y) points with axes, ticks and
/// labels. Non-finite y values are skipped.
std::string render_line_svg(const std::vector<std::pair<double, double>>& points,
                            const std::string& title, const std::string& x_label,
                            const std::string& y_label);

}  // namespace localcop
