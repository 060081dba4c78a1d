#include "iqa/factor.hpp"

namespace iqa {
namespace {

constexpr std::array<FactorId, 3> kAsReality = {FactorId::DTC, FactorId::DST, FactorId::CS};
constexpr std::array<FactorId, 2> kAboutReality = {FactorId::CM, FactorId::SR};
constexpr std::array<FactorId, 4> kForReality = {FactorId::PC, FactorId::TDA, FactorId::OT,
                                                 FactorId::OS};

}  // namespace

Category category_of(FactorId factor) noexcept {
  switch (factor) {
    case FactorId::DTC:
      return Category::Intrinsic;
    case FactorId::DST:
    case FactorId::CS:
      return Category::Contextual;
    case FactorId::CM:
    case FactorId::SR:
      return Category::Representational;
    case FactorId::PC:
    case FactorId::TDA:
    case FactorId::OT:
    case FactorId::OS:
      return Category::Accessibility;
  }
  return Category::Accessibility;
}

InfoStatus info_status_of(FactorId factor) noexcept {
  switch (category_of(factor)) {
    case Category::Intrinsic:
    case Category::Contextual:
      return InfoStatus::AsReality;
    case Category::Representational:
      return InfoStatus::AboutReality;
    case Category::Accessibility:
      return InfoStatus::ForReality;
  }
  return InfoStatus::ForReality;
}

std::span<const FactorId> factors_with_status(InfoStatus status) noexcept {
  switch (status) {
    case InfoStatus::AsReality: return kAsReality;
    case InfoStatus::AboutReality: return kAboutReality;
    case InfoStatus::ForReality: return kForReality;
  }
  return {};
}

std::array<std::pair<FactorId, Layer>, 3> expand_layers(FactorId factor) noexcept {
  return {{{factor, Layer::Physical}, {factor, Layer::Network}, {factor, Layer::Application}}};
}

std::string_view to_string(FactorId factor) noexcept {
  switch (factor) {
    case FactorId::DTC: return "DTC";
    case FactorId::DST: return "DST";
    case FactorId::CS: return "CS";
    case FactorId::CM: return "CM";
    case FactorId::SR: return "SR";
    case FactorId::PC: return "PC";
    case FactorId::TDA: return "TDA";
    case FactorId::OT: return "OT";
    case FactorId::OS: return "OS";
  }
  return "?";
}

std::string_view to_string(Layer layer) noexcept {
  switch (layer) {
    case Layer::Physical: return "physical";
    case Layer::Network: return "network";
    case Layer::Application: return "application";
  }
  return "?";
}

std::string_view to_string(Category category) noexcept {
  switch (category) {
    case Category::Intrinsic: return "Intrinsic";
    case Category::Contextual: return "Contextual";
    case Category::Representational: return "Representational";
    case Category::Accessibility: return "Accessibility";
  }
  return "?";
}

std::string_view to_string(InfoStatus status) noexcept {
  switch (status) {
    case InfoStatus::AsReality: return "information as reality";
    case InfoStatus::AboutReality: return "information about reality";
    case InfoStatus::ForReality: return "information for reality";
  }
  return "?";
}

std::string_view aggregate_label(InfoStatus status) noexcept {
  switch (status) {
    case InfoStatus::AsReality: return "IQA_I";
    case InfoStatus::AboutReality: return "IQA_II";
    case InfoStatus::ForReality: return "IQA_III";
  }
  return "?";
}

std::string_view aggregate_label(Layer layer) noexcept {
  switch (layer) {
    case Layer::Physical: return "IQA_p";
    case Layer::Network: return "IQA_n";
    case Layer::Application: return "IQA_a";
  }
  return "?";
}

std::optional<FactorId> parse_factor(std::string_view text) noexcept {
  for (FactorId f : kAllFactors) {
    if (to_string(f) == text) return f;
  }
  return std::nullopt;
}

std::optional<Layer> parse_layer(std::string_view text) noexcept {
  for (Layer l : kAllLayers) {
    if (to_string(l) == text) return l;
  }
  return std::nullopt;
}

}  // namespace iqa
