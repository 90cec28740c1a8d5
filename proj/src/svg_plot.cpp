#include "localcop/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace localcop {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 55.0;

std::string escape_xml(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fmt(const char* pattern, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, value);
  return buf;
}

// Tick spacing of 1, 2 or 5 times a power of ten giving about five ticks.
double tick_step(double span) {
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double r = raw / mag;
  return (r < 1.5 ? 1.0 : r < 3.5 ? 2.0 : r < 7.5 ? 5.0 : 10.0) * mag;
}

void padded_range(double& lo, double& hi) {
  if (!(hi > lo)) {
    const double pad = std::max(0.5, std::abs(lo) * 0.1);
    lo -= pad;
    hi += pad;
  }
}

}  // namespace

std::string render_line_svg(const std::vector<std::pair<double, double>>& points,
                            const std::string& title, const std::string& x_label,
                            const std::string& y_label) {
  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  for (const auto& [x, y] : points) {
    if (!std::isfinite(x) || !std::isfinite(y)) continue;
    x_lo = std::min(x_lo, x);
    x_hi = std::max(x_hi, x);
    y_lo = std::min(y_lo, y);
    y_hi = std::max(y_hi, y);
  }
  if (!std::isfinite(x_lo)) {
    x_lo = 0.0;
    x_hi = 1.0;
    y_lo = 0.0;
    y_hi = 1.0;
  }
  padded_range(x_lo, x_hi);
  padded_range(y_lo, y_hi);
  const double y_step = tick_step(y_hi - y_lo);
  y_lo = std::floor(y_lo / y_step) * y_step;
  y_hi = std::ceil(y_hi / y_step) * y_step;
  const double x_step = tick_step(x_hi - x_lo);

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto py = [&](double y) { return kTop + (y_hi - y) / (y_hi - y_lo) * plot_h; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" "
         "viewBox=\"0 0 640 400\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect width=\"640\" height=\"400\" fill=\"white\"/>\n";
  svg += "<text x=\"320\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" +
         escape_xml(title) + "</text>\n";

  // axes
  svg += "<line x1=\"" + fmt("%.2f", kLeft) + "\" y1=\"" + fmt("%.2f", kTop + plot_h) +
         "\" x2=\"" + fmt("%.2f", kLeft + plot_w) + "\" y2=\"" + fmt("%.2f", kTop + plot_h) +
         "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + fmt("%.2f", kLeft) + "\" y1=\"" + fmt("%.2f", kTop) + "\" x2=\"" +
         fmt("%.2f", kLeft) + "\" y2=\"" + fmt("%.2f", kTop + plot_h) + "\" stroke=\"black\"/>\n";

  for (double t = std::ceil(x_lo / x_step) * x_step; t <= x_hi + 1e-9 * x_step; t += x_step) {
    const double x = px(t);
    svg += "<line x1=\"" + fmt("%.2f", x) + "\" y1=\"" + fmt("%.2f", kTop + plot_h) +
           "\" x2=\"" + fmt("%.2f", x) + "\" y2=\"" + fmt("%.2f", kTop + plot_h + 5) +
           "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt("%.2f", x) + "\" y=\"" + fmt("%.2f", kTop + plot_h + 18) +
           "\" text-anchor=\"middle\">" + fmt("%g", std::abs(t) < 1e-12 ? 0.0 : t) + "</text>\n";
  }
  for (double t = y_lo; t <= y_hi + 1e-9 * y_step; t += y_step) {
    const double y = py(t);
    svg += "<line x1=\"" + fmt("%.2f", kLeft - 5) + "\" y1=\"" + fmt("%.2f", y) + "\" x2=\"" +
           fmt("%.2f", kLeft) + "\" y2=\"" + fmt("%.2f", y) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt("%.2f", kLeft - 8) + "\" y=\"" + fmt("%.2f", y + 4) +
           "\" text-anchor=\"end\">" + fmt("%g", std::abs(t) < 1e-12 ? 0.0 : t) + "</text>\n";
  }
  svg += "<text x=\"" + fmt("%.2f", kLeft + plot_w / 2) + "\" y=\"" + fmt("%.2f", kHeight - 12) +
         "\" text-anchor=\"middle\">" + escape_xml(x_label) + "</text>\n";
  svg += "<text x=\"18\" y=\"" + fmt("%.2f", kTop + plot_h / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " + fmt("%.2f", kTop + plot_h / 2) +
         ")\">" + escape_xml(y_label) + "</text>\n";

  svg += "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
  bool first = true;
  for (const auto& [x, y] : points) {
    if (!std::isfinite(x) || !std::isfinite(y)) continue;
    if (!first) svg += ' ';
    svg += fmt("%.2f", px(x)) + ',' + fmt("%.2f", py(y));
    first = false;
  }
  svg += "\"/>\n</svg>\n";
  return svg;
}

}  // namespace localcop
