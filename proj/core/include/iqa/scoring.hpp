#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iqa/case_file.hpp"
#include "iqa/decimal.hpp"
#include "iqa/factor.hpp"

namespace iqa {

class AuditLog;
struct AuditEvent;

// A percentage in [0, 100], held exactly.
struct IqaResult {
  Rational value;
  std::size_t numerator_terms = 0;  // factor values aggregated
  std::string basis;                // policy and weighting that produced `value`
};

// Per-layer quality. `raw_value` is the plain sum of per-device layer means
// (range [0, h]); `normalized_value` rescales it to a percentage.
struct LayerIqaResult {
  Layer layer = Layer::Physical;
  Rational raw_value;
  Rational normalized_value;
  std::vector<std::pair<std::string, Rational>> per_device_terms;  // device id, layer mean
  std::vector<std::string> skipped_devices;                        // no scores in this layer
};

struct GateOutcome {
  std::vector<std::string> retained;
  std::vector<std::string> discarded;
  Rational cutoff;
  std::string justification;
  std::vector<std::pair<std::string, Rational>> per_device_value;  // case order
};

struct Decomposition {
  IqaResult as_reality;     // IQA_I
  IqaResult about_reality;  // IQA_II
  IqaResult for_reality;    // IQA_III
  Rational recombined;      // (3 I + 2 II + 4 III) / 9
  IqaResult total;
};

// Quality of one device as a percentage.
//  Strict        all positively weighted factors must be present
//  AvailableOnly mean over the factors actually scored
//  ImputeZero    absent factors count as 0 in the weighted mean
// Unweighted is the same as uniform weights. Throws Error(MissingFactors),
// Error(EmptyAssessment) or Error(ZeroWeightSum).
IqaResult device_iqa(const DeviceAssessment& device, MissingPolicy policy,
                     const std::optional<Weights>& weights = std::nullopt);

// Mean of per-device IQA using the case's policy and weights. Under Strict
// with uniform weights this is exactly the flat mean over all 9n values.
// Errors from every failing device are aggregated into one Error whose
// findings carry device/factor locators.
IqaResult case_iqa(const CaseFile& c);

// Case aggregation over per-device percentages supplied directly.
IqaResult aggregate_device_values(const std::vector<Rational>& device_values);

// Flat (weighted) mean over every (device, factor) value whose factor has
// the given information status. Strict requires all of them.
IqaResult category_iqa(const CaseFile& c, InfoStatus status);

// Sum over devices of the mean of that device's layered scores in `layer`.
// Devices with none are skipped, except under Strict where they are an
// error. Weights do not apply. Throws Error(NoLayeredScores) when no device
// has a score in the layer.
LayerIqaResult layer_iqa(const CaseFile& c, Layer layer);

// (3 I + 2 II + 4 III) / 9
Rational recombine(const Rational& as_reality, const Rational& about_reality,
                   const Rational& for_reality);

// Category split plus total. Refuses (Error(MissingFactors)) unless every
// device has all nine factors, and (Error(InvalidArgument)) unless weights are
// uniform, since only then does the recombination equal the total.
Decomposition decompose(const CaseFile& c);

// Splits devices by per-device IQA >= cutoff (ties are retained).
GateOutcome gate(const CaseFile& c, const ThresholdPolicy& policy);
GateOutcome gate_values(const std::vector<std::pair<std::string, Rational>>& device_values,
                        const ThresholdPolicy& policy);

// Records a gate decision (cutoff, justification, every device decision).
AuditEvent record_gate(AuditLog& log, const GateOutcome& outcome, std::string actor,
                       const std::string& case_id);

// Gate plus audit in one step; nothing is discarded without a log entry.
GateOutcome gate(const CaseFile& c, const ThresholdPolicy& policy, AuditLog& log,
                 std::string actor);

// Rendered with two decimals, half-up ("62.04").
std::string format_percent(const Rational& percent);

}  // namespace iqa
