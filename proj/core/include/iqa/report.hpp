#pragma once

#include <string>
#include <vector>

#include "iqa/assessment_report.hpp"

namespace iqa {

struct RankedDevice {
  std::string device_id;
  std::string kind;
  Rational iqa;
};

// Devices with a value, best first; equal values ordered by device id.
std::vector<RankedDevice> rank_devices(const AssessmentReport& report);

// Plain-text report: ranking with best and worst called out, category and
// layer breakdowns, gate outcome when present, coverage notes, and a
// discrepancy section whenever a recomputed value is more than 0.05 points
// away from an expected one. Contains no timestamps.
std::string render_report(const AssessmentReport& report);

}  // namespace iqa
