#include "iqa/errors.hpp"

#include <utility>

namespace iqa {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::PrecisionError: return "PrecisionError";
    case ErrorCode::MissingJustification: return "MissingJustification";
    case ErrorCode::MissingProvenance: return "MissingProvenance";
    case ErrorCode::MissingFactors: return "MissingFactors";
    case ErrorCode::EmptyAssessment: return "EmptyAssessment";
    case ErrorCode::ZeroWeightSum: return "ZeroWeightSum";
    case ErrorCode::NoLayeredScores: return "NoLayeredScores";
    case ErrorCode::DuplicateEntry: return "DuplicateEntry";
    case ErrorCode::UnknownDevice: return "UnknownDevice";
    case ErrorCode::IncompleteAnswers: return "IncompleteAnswers";
    case ErrorCode::MixedArity: return "MixedArity";
    case ErrorCode::DegenerateSpec: return "DegenerateSpec";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::JustificationRequired: return "JustificationRequired";
    case ErrorCode::SinkUnavailable: return "SinkUnavailable";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string message, std::vector<Finding> findings)
    : std::runtime_error(std::move(message)), code_(code), findings_(std::move(findings)) {}

}  // namespace iqa
