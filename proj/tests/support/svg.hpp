#pragma once

// Minimal reader for the radar SVGs: pulls out series polygons and axes with
// regular expressions, independent of the renderer's code.

#include <cmath>
#include <regex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace iqa::testing {

struct SvgPolygon {
  std::string series;
  std::vector<std::pair<double, double>> points;
};

inline std::vector<std::pair<double, double>> parse_points(const std::string& text) {
  std::vector<std::pair<double, double>> pts;
  std::istringstream in(text);
  std::string pair;
  while (in >> pair) {
    const auto comma = pair.find(',');
    pts.emplace_back(std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1)));
  }
  return pts;
}

inline std::vector<SvgPolygon> series_polygons(const std::string& svg) {
  static const std::regex re(R"re(<polygon class="series" data-series="([^"]*)" points="([^"]*)")re");
  std::vector<SvgPolygon> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
    out.push_back({(*it)[1].str(), parse_points((*it)[2].str())});
  }
  return out;
}

inline std::vector<std::string> axis_labels(const std::string& svg) {
  static const std::regex re(R"re(<text class="axis-label"[^>]*>([^<]*)</text>)re");
  std::vector<std::string> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
    out.push_back((*it)[1].str());
  }
  return out;
}

inline std::size_t count_of(const std::string& svg, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1)) ++n;
  return n;
}

// Shoelace formula.
inline double polygon_area(const std::vector<std::pair<double, double>>& pts) {
  double twice = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& [x0, y0] = pts[i];
    const auto& [x1, y1] = pts[(i + 1) % pts.size()];
    twice += x0 * y1 - x1 * y0;
  }
  return std::abs(twice) / 2.0;
}

inline double distance(std::pair<double, double> p, double cx, double cy) {
  return std::hypot(p.first - cx, p.second - cy);
}

}  // namespace iqa::testing
