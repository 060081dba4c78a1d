#include "iqa/score.hpp"

#include <cctype>
#include <utility>

#include "iqa/errors.hpp"

namespace iqa {

bool has_content(std::string_view text) noexcept {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) == 0) return true;
  }
  return false;
}

FactorScore::FactorScore(FactorId factor, Hundredths value, std::string justification,
                         std::string provenance)
    : factor_(factor),
      value_(value),
      justification_(std::move(justification)),
      provenance_(std::move(provenance)) {
  if (value_ < kScoreMin || value_ > kScoreMax) {
    throw Error(ErrorCode::OutOfRange, std::string(to_string(factor_)) + " value " +
                                           value_.to_string() + " outside [0.00, 1.00]");
  }
  if (!has_content(justification_)) {
    throw Error(ErrorCode::MissingJustification,
                std::string(to_string(factor_)) + " score has no justification");
  }
  if (!has_content(provenance_)) {
    throw Error(ErrorCode::MissingProvenance,
                std::string(to_string(factor_)) + " score has no provenance");
  }
}

LayeredFactorScore::LayeredFactorScore(FactorId factor, Layer layer, Hundredths value,
                                       std::string justification, std::string provenance)
    : score_(factor, value, std::move(justification), std::move(provenance)), layer_(layer) {}

FactorScore make_score(FactorId factor, std::string_view value, std::string justification,
                       std::string provenance) {
  return FactorScore(factor, Hundredths::parse(value), std::move(justification),
                     std::move(provenance));
}

FactorScore make_score(FactorId factor, Hundredths value, std::string justification,
                       std::string provenance) {
  return FactorScore(factor, value, std::move(justification), std::move(provenance));
}

LayeredFactorScore make_layered_score(FactorId factor, Layer layer, std::string_view value,
                                      std::string justification, std::string provenance) {
  return LayeredFactorScore(factor, layer, Hundredths::parse(value), std::move(justification),
                            std::move(provenance));
}

}  // namespace iqa
