#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "iqa/assessment_report.hpp"
#include "iqa/case_file.hpp"

namespace iqa {

struct RadarSeries {
  std::string label;
  std::vector<double> values;  // aligned with RadarSpec::axes, each in [0, 1]
  std::vector<bool> missing;   // empty, or aligned with axes; missing cells sit at 0
};

struct RadarSpec {
  std::string title;
  std::vector<std::string> axes;
  std::vector<RadarSeries> series;
  std::vector<std::string> footnotes;
};

namespace radar_geometry {
inline constexpr double kCanvas = 600.0;
inline constexpr double kCenterX = 300.0;
inline constexpr double kCenterY = 300.0;
inline constexpr double kRadius = 200.0;  // value 1.0
inline constexpr double kMissingMarkerRadius = 12.0;
}  // namespace radar_geometry

// Throws Error(DegenerateSpec) for fewer than 3 axes, a series whose length
// differs from the axis count, or a value outside [0, 1].
void validate(const RadarSpec& spec);

// SVG 1.1 document. Axis k points at angle 2*pi*k/n clockwise from 12 o'clock;
// a value v is drawn at distance v * kRadius from the center. Grid rings at
// 0.25/0.5/0.75/1.0. Each series is one <polygon class="series">. Output
// depends only on `spec`.
std::string render_radar(const RadarSpec& spec);

// One series per device over every factor scored on at least one device;
// cells a device lacks are drawn at 0 and footnoted.
RadarSpec case_overlay(const CaseFile& c);

// Single-device chart over the same axes as case_overlay.
// Throws Error(UnknownDevice).
RadarSpec device_chart(const CaseFile& c, std::string_view device_id);

// IQA_I / IQA_II / IQA_III as a three-axis chart. Absent values are marked.
RadarSpec category_chart(const AssessmentReport& report);

// IQA_p / IQA_n / IQA_a. Throws Error(DegenerateSpec) without layer results.
RadarSpec layer_chart(const AssessmentReport& report);

// Reference chart: every factor at 1.0.
RadarSpec model_chart();

}  // namespace iqa
