#include "iqa/case_file.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "iqa/errors.hpp"

namespace iqa {
namespace {

constexpr std::size_t layered_slot(FactorId f, Layer l) noexcept {
  return index_of(f) * 3 + index_of(l);
}

}  // namespace

DeviceAssessment::DeviceAssessment(std::string device_id, std::string kind)
    : device_id_(std::move(device_id)), kind_(std::move(kind)) {
  if (!has_content(device_id_)) {
    throw Error(ErrorCode::InvalidArgument, "device id must not be empty");
  }
}

std::optional<FactorScore> DeviceAssessment::set_score(FactorScore score) {
  auto& slot = scores_[index_of(score.factor())];
  std::optional<FactorScore> previous = std::move(slot);
  slot = std::move(score);
  return previous;
}

std::optional<LayeredFactorScore> DeviceAssessment::set_layered_score(LayeredFactorScore score) {
  auto& slot = layered_[layered_slot(score.factor(), score.layer())];
  std::optional<LayeredFactorScore> previous = std::move(slot);
  slot = std::move(score);
  return previous;
}

bool DeviceAssessment::erase_score(FactorId factor) {
  auto& slot = scores_[index_of(factor)];
  const bool had = slot.has_value();
  slot.reset();
  return had;
}

const FactorScore* DeviceAssessment::score(FactorId factor) const noexcept {
  const auto& slot = scores_[index_of(factor)];
  return slot ? &*slot : nullptr;
}

const LayeredFactorScore* DeviceAssessment::layered_score(FactorId factor,
                                                          Layer layer) const noexcept {
  const auto& slot = layered_[layered_slot(factor, layer)];
  return slot ? &*slot : nullptr;
}

std::vector<FactorId> DeviceAssessment::present_factors() const {
  std::vector<FactorId> out;
  for (FactorId f : kAllFactors) {
    if (scores_[index_of(f)]) out.push_back(f);
  }
  return out;
}

std::vector<FactorId> DeviceAssessment::missing_factors() const {
  std::vector<FactorId> out;
  for (FactorId f : kAllFactors) {
    if (!scores_[index_of(f)]) out.push_back(f);
  }
  return out;
}

std::vector<const LayeredFactorScore*> DeviceAssessment::layered_scores_in(Layer layer) const {
  std::vector<const LayeredFactorScore*> out;
  for (FactorId f : kAllFactors) {
    if (const auto* s = layered_score(f, layer)) out.push_back(s);
  }
  return out;
}

bool DeviceAssessment::has_layered_scores() const noexcept {
  return std::any_of(layered_.begin(), layered_.end(), [](const auto& s) { return s.has_value(); });
}

std::string_view to_string(MissingPolicy policy) noexcept {
  switch (policy) {
    case MissingPolicy::Strict: return "strict";
    case MissingPolicy::AvailableOnly: return "available_only";
    case MissingPolicy::ImputeZero: return "impute_zero";
  }
  return "?";
}

std::optional<MissingPolicy> parse_missing_policy(std::string_view text) noexcept {
  if (text == "strict") return MissingPolicy::Strict;
  if (text == "available_only" || text == "available-only") return MissingPolicy::AvailableOnly;
  if (text == "impute_zero" || text == "impute-zero") return MissingPolicy::ImputeZero;
  return std::nullopt;
}

Weights::Weights() { w_.fill(Rational(1)); }

Weights::Weights(const std::map<FactorId, Rational>& overrides) : Weights() {
  for (const auto& [factor, w] : overrides) {
    if (w.is_negative()) {
      throw Error(ErrorCode::InvalidArgument,
                  "negative weight for " + std::string(to_string(factor)) + ": " + w.to_string());
    }
    w_[index_of(factor)] = w;
  }
  if (std::all_of(w_.begin(), w_.end(), [](const Rational& w) { return w.is_zero(); })) {
    throw Error(ErrorCode::ZeroWeightSum, "every factor weight is zero");
  }
}

bool Weights::is_uniform() const noexcept {
  return std::all_of(w_.begin(), w_.end(), [&](const Rational& w) { return w == w_.front(); });
}

ThresholdPolicy::ThresholdPolicy(Rational cutoff_percent, std::string justification)
    : cutoff_(cutoff_percent), justification_(std::move(justification)) {
  if (cutoff_ < Rational(0) || cutoff_ > Rational(100)) {
    throw Error(ErrorCode::OutOfRange, "threshold cutoff " + cutoff_.to_fixed(2) +
                                           " outside [0, 100]");
  }
  if (!has_content(justification_)) {
    throw Error(ErrorCode::MissingJustification, "threshold cutoff requires a justification");
  }
}

CaseFile::CaseFile(std::string case_id, std::vector<DeviceAssessment> devices)
    : case_id_(std::move(case_id)) {
  devices_.reserve(devices.size());
  for (auto& d : devices) add_device(std::move(d));
}

const DeviceAssessment* CaseFile::find_device(std::string_view device_id) const noexcept {
  for (const auto& d : devices_) {
    if (d.device_id() == device_id) return &d;
  }
  return nullptr;
}

void CaseFile::add_device(DeviceAssessment device) {
  if (find_device(device.device_id()) != nullptr) {
    throw Error(ErrorCode::DuplicateEntry, "duplicate device id '" + device.device_id() + "'",
                {{"devices[device:" + device.device_id() + "]", "duplicate device id"}});
  }
  devices_.push_back(std::move(device));
}

void CaseFile::replace_device(DeviceAssessment device) {
  for (auto& d : devices_) {
    if (d.device_id() == device.device_id()) {
      d = std::move(device);
      return;
    }
  }
  throw Error(ErrorCode::UnknownDevice, "no device '" + device.device_id() + "' in case");
}

void CaseFile::set_schema_version(int version) {
  if (version < 1) throw Error(ErrorCode::InvalidArgument, "schema_version must be >= 1");
  schema_version_ = version;
}

}  // namespace iqa
