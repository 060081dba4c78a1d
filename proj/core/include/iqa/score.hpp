#pragma once

#include <string>
#include <string_view>

#include "iqa/decimal.hpp"
#include "iqa/factor.hpp"

namespace iqa {

inline constexpr Hundredths kScoreMin{0};
inline constexpr Hundredths kScoreMax{100};

// One factor's value in [0.00, 1.00] (0 = bad, 1 = good) together with the
// reason it was given and who gave it. Immutable once constructed.
class FactorScore {
 public:
  // Throws Error(OutOfRange | MissingJustification | MissingProvenance).
  FactorScore(FactorId factor, Hundredths value, std::string justification, std::string provenance);

  FactorId factor() const noexcept { return factor_; }
  Hundredths value() const noexcept { return value_; }
  const std::string& justification() const noexcept { return justification_; }
  const std::string& provenance() const noexcept { return provenance_; }

  bool operator==(const FactorScore&) const = default;

 private:
  FactorId factor_;
  Hundredths value_;
  std::string justification_;
  std::string provenance_;
};

// A factor scored within one IoT layer (DTC at the physical layer, ...).
class LayeredFactorScore {
 public:
  LayeredFactorScore(FactorId factor, Layer layer, Hundredths value, std::string justification,
                     std::string provenance);

  FactorId factor() const noexcept { return score_.factor(); }
  Layer layer() const noexcept { return layer_; }
  Hundredths value() const noexcept { return score_.value(); }
  const std::string& justification() const noexcept { return score_.justification(); }
  const std::string& provenance() const noexcept { return score_.provenance(); }

  bool operator==(const LayeredFactorScore&) const = default;

 private:
  FactorScore score_;
  Layer layer_;
};

// Validated constructors taking the decimal literal as written ("0.56").
// Additionally throw Error(PrecisionError) for more than two decimals.
FactorScore make_score(FactorId factor, std::string_view value, std::string justification,
                       std::string provenance);
FactorScore make_score(FactorId factor, Hundredths value, std::string justification,
                       std::string provenance);
LayeredFactorScore make_layered_score(FactorId factor, Layer layer, std::string_view value,
                                      std::string justification, std::string provenance);

// True when `text` contains something other than whitespace.
bool has_content(std::string_view text) noexcept;

}  // namespace iqa
