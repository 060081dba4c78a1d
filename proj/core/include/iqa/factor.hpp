#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>

namespace iqa {

// The nine assessed dimensions, in canonical (declaration) order.
enum class FactorId {
  DTC,  // device technical status
  DST,  // device security status
  CS,   // cloud service security status
  CM,   // cloud service manipulation of raw data
  SR,   // source reliability
  PC,   // privacy (data protection) compliance
  TDA,  // technical data accessibility
  OT,   // observer technological advancement
  OS,   // observer skills
};

inline constexpr std::size_t kFactorCount = 9;

inline constexpr std::array<FactorId, kFactorCount> kAllFactors = {
    FactorId::DTC, FactorId::DST, FactorId::CS, FactorId::CM, FactorId::SR,
    FactorId::PC,  FactorId::TDA, FactorId::OT, FactorId::OS,
};

enum class Layer { Physical, Network, Application };

inline constexpr std::array<Layer, 3> kAllLayers = {Layer::Physical, Layer::Network,
                                                    Layer::Application};

enum class Category { Intrinsic, Contextual, Representational, Accessibility };

// Ontological status of the information a factor speaks to.
enum class InfoStatus {
  AsReality,     // relevance
  AboutReality,  // uncertainty
  ForReality,    // accountability
};

inline constexpr std::array<InfoStatus, 3> kAllInfoStatuses = {
    InfoStatus::AsReality, InfoStatus::AboutReality, InfoStatus::ForReality};

constexpr std::size_t index_of(FactorId f) noexcept { return static_cast<std::size_t>(f); }
constexpr std::size_t index_of(Layer l) noexcept { return static_cast<std::size_t>(l); }

Category category_of(FactorId factor) noexcept;
InfoStatus info_status_of(FactorId factor) noexcept;

// Factors whose status is `status`, in canonical order.
std::span<const FactorId> factors_with_status(InfoStatus status) noexcept;

// The (factor, layer) cells of the factor x layer grid for one factor:
// physical, network, application.
std::array<std::pair<FactorId, Layer>, 3> expand_layers(FactorId factor) noexcept;

std::string_view to_string(FactorId factor) noexcept;
std::string_view to_string(Layer layer) noexcept;
std::string_view to_string(Category category) noexcept;
std::string_view to_string(InfoStatus status) noexcept;

// Short label used in tables and charts: "IQA_I", "IQA_II", "IQA_III".
std::string_view aggregate_label(InfoStatus status) noexcept;
// "IQA_p", "IQA_n", "IQA_a".
std::string_view aggregate_label(Layer layer) noexcept;

// Exact, case-sensitive names ("DTC", "physical").
std::optional<FactorId> parse_factor(std::string_view text) noexcept;
std::optional<Layer> parse_layer(std::string_view text) noexcept;

}  // namespace iqa
