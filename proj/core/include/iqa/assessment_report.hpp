#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iqa/case_file.hpp"
#include "iqa/decimal.hpp"
#include "iqa/scoring.hpp"

namespace iqa {

// Everything computed for a case, at device, category, layer and case level.
struct AssessmentReport {
  struct DeviceRow {
    std::string device_id;
    std::string kind;
    std::optional<Rational> iqa;
    std::optional<Hundredths> expected;
    std::size_t factors_scored = 0;
  };
  struct AggregateRow {
    std::string label;  // IQA_I, IQA_II, IQA_III, IQA_p, IQA_n, IQA_a, IQA_tot
    std::optional<Rational> value;
    std::optional<Hundredths> expected;
    std::string note;  // why `value` is absent, or extra context
  };

  std::string case_id;
  std::string basis;
  std::vector<DeviceRow> devices;
  std::vector<AggregateRow> aggregates;
  std::vector<LayerIqaResult> layers;
  std::optional<GateOutcome> gate;
  // Factors without a score on some or all devices.
  std::vector<std::string> coverage_notes;
  std::vector<std::string> expected_notes;
  std::string expected_source;
};

// Scores the case with its own policy and weights. Scoring errors (e.g.
// Strict with absent factors) propagate; a category or layer with nothing to
// aggregate is reported as an absent value with a note instead.
AssessmentReport build_report(const CaseFile& c);

struct Discrepancy {
  std::string label;  // "device:4" or an aggregate label
  std::optional<Rational> recomputed;
  Hundredths expected;
  std::optional<Rational> delta;  // recomputed - expected
};

inline const Rational kDiscrepancyTolerance(5, 100);

// Rows whose recomputed value differs from the expected one by more than
// `tolerance` percentage points, or that could not be recomputed at all.
std::vector<Discrepancy> find_discrepancies(const AssessmentReport& report,
                                            const Rational& tolerance = kDiscrepancyTolerance);

std::string device_label(const std::string& device_id);

}  // namespace iqa
