#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace iqa {

enum class ErrorCode {
  OutOfRange,
  PrecisionError,
  MissingJustification,
  MissingProvenance,
  MissingFactors,
  EmptyAssessment,
  ZeroWeightSum,
  NoLayeredScores,
  DuplicateEntry,
  UnknownDevice,
  IncompleteAnswers,
  MixedArity,
  DegenerateSpec,
  SyntaxError,
  SchemaError,
  ValidationError,
  JustificationRequired,
  SinkUnavailable,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// One problem found in an input, addressed by a path-like locator such as
// "devices[device:5]/scores/DTC".
struct Finding {
  std::string locator;
  std::string message;

  bool operator==(const Finding&) const = default;
};

// Every failure raised by the library. Aggregating operations (parsing,
// case-level scoring) attach all findings rather than stopping at the first.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::vector<Finding> findings = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<Finding>& findings() const noexcept { return findings_; }

 private:
  ErrorCode code_;
  std::vector<Finding> findings_;
};

}  // namespace iqa
