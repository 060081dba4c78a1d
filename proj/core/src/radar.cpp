#include "iqa/radar.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <utility>

#include "iqa/errors.hpp"

namespace iqa {
namespace {

using namespace radar_geometry;

constexpr std::array<const char*, 10> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string xml_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

struct Point {
  double x;
  double y;
};

Point at(std::size_t axis, std::size_t n, double radius) {
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(axis) / static_cast<double>(n);
  return {kCenterX + radius * std::sin(theta), kCenterY - radius * std::cos(theta)};
}

std::string points(std::size_t n, auto&& radius_of) {
  std::string s;
  for (std::size_t k = 0; k < n; ++k) {
    const Point p = at(k, n, radius_of(k));
    if (k > 0) s.push_back(' ');
    s += num(p.x) + "," + num(p.y);
  }
  return s;
}

std::vector<FactorId> overlay_axes(const CaseFile& c) {
  std::vector<FactorId> axes;
  for (FactorId f : kAllFactors) {
    for (const auto& d : c.devices()) {
      if (d.score(f) != nullptr) {
        axes.push_back(f);
        break;
      }
    }
  }
  return axes;
}

RadarSeries device_series(const DeviceAssessment& d, const std::vector<FactorId>& axes) {
  RadarSeries s;
  s.label = "device " + d.device_id() + (d.kind().empty() ? "" : " (" + d.kind() + ")");
  bool any_missing = false;
  for (FactorId f : axes) {
    const FactorScore* score = d.score(f);
    s.values.push_back(score ? score->value().to_rational().to_double() : 0.0);
    s.missing.push_back(score == nullptr);
    any_missing = any_missing || score == nullptr;
  }
  if (!any_missing) s.missing.clear();
  return s;
}

std::vector<std::string> factor_names(const std::vector<FactorId>& axes) {
  std::vector<std::string> names;
  for (FactorId f : axes) names.emplace_back(to_string(f));
  return names;
}

void add_missing_footnotes(RadarSpec& spec) {
  for (const auto& s : spec.series) {
    for (std::size_t k = 0; k < s.missing.size(); ++k) {
      if (s.missing[k]) {
        spec.footnotes.push_back(s.label + ": " + spec.axes[k] + " not scored, drawn at 0");
      }
    }
  }
}

RadarSpec aggregate_chart(const AssessmentReport& report, const std::vector<std::string>& labels,
                          std::string title) {
  RadarSpec spec;
  spec.title = std::move(title);
  RadarSeries s;
  s.label = report.case_id;
  bool any_missing = false;
  for (const auto& label : labels) {
    spec.axes.push_back(label);
    const AssessmentReport::AggregateRow* row = nullptr;
    for (const auto& a : report.aggregates) {
      if (a.label == label) row = &a;
    }
    const bool have = row != nullptr && row->value.has_value();
    s.values.push_back(have ? (*row->value / Rational(100)).to_double() : 0.0);
    s.missing.push_back(!have);
    any_missing = any_missing || !have;
  }
  if (!any_missing) s.missing.clear();
  spec.series.push_back(std::move(s));
  add_missing_footnotes(spec);
  return spec;
}

}  // namespace

void validate(const RadarSpec& spec) {
  if (spec.axes.size() < 3) {
    throw Error(ErrorCode::DegenerateSpec,
                "radar chart needs at least 3 axes, got " + std::to_string(spec.axes.size()));
  }
  for (const auto& s : spec.series) {
    if (s.values.size() != spec.axes.size()) {
      throw Error(ErrorCode::DegenerateSpec, "series '" + s.label + "' has " +
                                                 std::to_string(s.values.size()) + " values for " +
                                                 std::to_string(spec.axes.size()) + " axes");
    }
    if (!s.missing.empty() && s.missing.size() != spec.axes.size()) {
      throw Error(ErrorCode::DegenerateSpec, "series '" + s.label + "' missing-mask length mismatch");
    }
    for (double v : s.values) {
      if (!(v >= 0.0 && v <= 1.0)) {
        throw Error(ErrorCode::DegenerateSpec, "series '" + s.label + "' has a value outside [0, 1]");
      }
    }
  }
}

std::string render_radar(const RadarSpec& spec) {
  validate(spec);
  const std::size_t n = spec.axes.size();
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(kCanvas)
      << "\" height=\"" << num(kCanvas) << "\" viewBox=\"0 0 " << num(kCanvas) << " "
      << num(kCanvas) << "\">\n";
  out << "<title>" << xml_escape(spec.title) << "</title>\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << num(kCanvas) << "\" height=\"" << num(kCanvas)
      << "\" fill=\"#ffffff\"/>\n";
  out << "<text class=\"title\" x=\"" << num(kCenterX)
      << "\" y=\"24.00\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
      << xml_escape(spec.title) << "</text>\n";

  out << "<g class=\"grid\" fill=\"none\" stroke=\"#c8c8c8\" stroke-width=\"1\">\n";
  constexpr std::array<std::pair<const char*, double>, 4> kRings = {
      {{"0.25", 0.25}, {"0.50", 0.50}, {"0.75", 0.75}, {"1.00", 1.00}}};
  for (const auto& [level, fraction] : kRings) {
    const double r = fraction * kRadius;
    out << "<polygon class=\"grid\" data-level=\"" << level << "\" points=\""
        << points(n, [&](std::size_t) { return r; }) << "\"/>\n";
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Point p = at(k, n, kRadius);
    out << "<line class=\"axis\" x1=\"" << num(kCenterX) << "\" y1=\"" << num(kCenterY)
        << "\" x2=\"" << num(p.x) << "\" y2=\"" << num(p.y) << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g class=\"axis-labels\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#333333\">\n";
  for (std::size_t k = 0; k < n; ++k) {
    const Point p = at(k, n, kRadius + 18.0);
    const char* anchor = std::abs(p.x - kCenterX) < 1.0 ? "middle" : (p.x > kCenterX ? "start" : "end");
    out << "<text class=\"axis-label\" x=\"" << num(p.x) << "\" y=\"" << num(p.y + 4.0)
        << "\" text-anchor=\"" << anchor << "\">" << xml_escape(spec.axes[k]) << "</text>\n";
  }
  out << "</g>\n";

  out << "<g class=\"series-group\">\n";
  for (std::size_t i = 0; i < spec.series.size(); ++i) {
    const auto& s = spec.series[i];
    const char* color = kPalette[i % kPalette.size()];
    out << "<polygon class=\"series\" data-series=\"" << xml_escape(s.label) << "\" points=\""
        << points(n, [&](std::size_t k) { return s.values[k] * kRadius; }) << "\" fill=\""
        << color << "\" fill-opacity=\"0.12\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    for (std::size_t k = 0; k < s.missing.size(); ++k) {
      if (!s.missing[k]) continue;
      const Point p = at(k, n, kMissingMarkerRadius);
      out << "<circle class=\"missing\" data-series=\"" << xml_escape(s.label) << "\" data-axis=\""
          << xml_escape(spec.axes[k]) << "\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
          << "\" r=\"3.00\" fill=\"none\" stroke=\"" << color << "\"/>\n";
    }
  }
  out << "</g>\n";

  out << "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"11\">\n";
  for (std::size_t i = 0; i < spec.series.size(); ++i) {
    const double y = 44.0 + 16.0 * static_cast<double>(i);
    const char* color = kPalette[i % kPalette.size()];
    out << "<rect x=\"10.00\" y=\"" << num(y - 9.0) << "\" width=\"10.00\" height=\"10.00\" fill=\""
        << color << "\"/>\n";
    out << "<text x=\"26.00\" y=\"" << num(y) << "\">" << xml_escape(spec.series[i].label)
        << "</text>\n";
  }
  out << "</g>\n";

  if (!spec.footnotes.empty()) {
    out << "<g class=\"footnotes\" font-family=\"sans-serif\" font-size=\"9\" fill=\"#555555\">\n";
    const double base = kCanvas - 8.0 - 11.0 * static_cast<double>(spec.footnotes.size() - 1);
    for (std::size_t i = 0; i < spec.footnotes.size(); ++i) {
      out << "<text x=\"10.00\" y=\"" << num(base + 11.0 * static_cast<double>(i)) << "\">"
          << xml_escape("* " + spec.footnotes[i]) << "</text>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

RadarSpec case_overlay(const CaseFile& c) {
  const auto axes = overlay_axes(c);
  RadarSpec spec;
  spec.title = c.case_id() + ": factor scores per device";
  spec.axes = factor_names(axes);
  for (const auto& d : c.devices()) spec.series.push_back(device_series(d, axes));
  add_missing_footnotes(spec);
  return spec;
}

RadarSpec device_chart(const CaseFile& c, std::string_view device_id) {
  const DeviceAssessment* d = c.find_device(device_id);
  if (d == nullptr) {
    throw Error(ErrorCode::UnknownDevice,
                "no device '" + std::string(device_id) + "' in case " + c.case_id());
  }
  const auto axes = overlay_axes(c);
  RadarSpec spec;
  spec.title = c.case_id() + ": device " + d->device_id();
  spec.axes = factor_names(axes);
  spec.series.push_back(device_series(*d, axes));
  add_missing_footnotes(spec);
  return spec;
}

RadarSpec category_chart(const AssessmentReport& report) {
  return aggregate_chart(report, {"IQA_I", "IQA_II", "IQA_III"},
                         report.case_id + ": information categories");
}

RadarSpec layer_chart(const AssessmentReport& report) {
  if (report.layers.empty()) {
    throw Error(ErrorCode::DegenerateSpec, "case " + report.case_id + " has no layered scores");
  }
  return aggregate_chart(report, {"IQA_p", "IQA_n", "IQA_a"}, report.case_id + ": IoT layers");
}

RadarSpec model_chart() {
  RadarSpec spec;
  spec.title = "reference: every factor at 1.00";
  RadarSeries s;
  s.label = "best achievable";
  for (FactorId f : kAllFactors) {
    spec.axes.emplace_back(to_string(f));
    s.values.push_back(1.0);
  }
  spec.series.push_back(std::move(s));
  return spec;
}

}  // namespace iqa
