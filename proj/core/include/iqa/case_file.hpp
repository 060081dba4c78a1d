#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iqa/decimal.hpp"
#include "iqa/factor.hpp"
#include "iqa/score.hpp"

namespace iqa {

// One seized device: identity plus whatever factor scores could be given.
// Scores may be partial; completeness is a per-operation policy decision.
class DeviceAssessment {
 public:
  DeviceAssessment(std::string device_id, std::string kind);

  const std::string& device_id() const noexcept { return device_id_; }
  const std::string& kind() const noexcept { return kind_; }

  // Inserts or replaces; returns the score that was replaced, if any.
  std::optional<FactorScore> set_score(FactorScore score);
  std::optional<LayeredFactorScore> set_layered_score(LayeredFactorScore score);
  bool erase_score(FactorId factor);

  const FactorScore* score(FactorId factor) const noexcept;
  const LayeredFactorScore* layered_score(FactorId factor, Layer layer) const noexcept;

  // Canonical factor order.
  std::vector<FactorId> present_factors() const;
  std::vector<FactorId> missing_factors() const;
  std::vector<const LayeredFactorScore*> layered_scores_in(Layer layer) const;
  bool has_layered_scores() const noexcept;

  bool operator==(const DeviceAssessment&) const = default;

 private:
  std::string device_id_;
  std::string kind_;
  std::array<std::optional<FactorScore>, kFactorCount> scores_;
  std::array<std::optional<LayeredFactorScore>, kFactorCount * 3> layered_;
};

enum class MissingPolicy {
  Strict,         // every factor must be present
  AvailableOnly,  // average over the factors that were scored
  ImputeZero,     // absent factors count as 0.00
};

std::string_view to_string(MissingPolicy policy) noexcept;
// Accepts "strict", "available_only" / "available-only", "impute_zero" / "impute-zero".
std::optional<MissingPolicy> parse_missing_policy(std::string_view text) noexcept;

// Nonnegative per-factor weights; zero excludes a factor. Defaults to 1 for
// every factor.
class Weights {
 public:
  Weights();
  // Factors not present in `overrides` keep weight 1. Throws
  // Error(InvalidArgument) on a negative weight and Error(ZeroWeightSum)
  // if every weight ends up zero.
  explicit Weights(const std::map<FactorId, Rational>& overrides);

  static Weights uniform() { return Weights(); }

  const Rational& weight(FactorId factor) const noexcept { return w_[index_of(factor)]; }
  // All nine weights equal (and therefore positive).
  bool is_uniform() const noexcept;

  bool operator==(const Weights&) const = default;

 private:
  std::array<Rational, kFactorCount> w_;
};

// IN/OUT cutoff on per-device IQA. The justification is mandatory.
class ThresholdPolicy {
 public:
  // Throws Error(OutOfRange) for a cutoff outside [0, 100] and
  // Error(MissingJustification) for blank text.
  ThresholdPolicy(Rational cutoff_percent, std::string justification);

  const Rational& cutoff() const noexcept { return cutoff_; }
  const std::string& justification() const noexcept { return justification_; }

  bool operator==(const ThresholdPolicy&) const = default;

 private:
  Rational cutoff_;
  std::string justification_;
};

// Previously published values a case is expected to reproduce. Keys of
// `aggregates` are "IQA_I", "IQA_II", "IQA_III", "IQA_tot", "IQA_p",
// "IQA_n", "IQA_a".
struct ExpectedValues {
  std::string source;
  std::map<std::string, Hundredths> device_iqa;
  std::map<std::string, Hundredths> aggregates;
  std::vector<std::string> notes;

  bool operator==(const ExpectedValues&) const = default;
};

// Pointer from a case to the audit log that records changes made to it.
struct AuditReference {
  std::string path;
  std::uint64_t last_sequence = 0;

  bool operator==(const AuditReference&) const = default;
};

inline constexpr int kSchemaVersion = 1;

class CaseFile {
 public:
  // Throws Error(DuplicateEntry) when two devices share an id.
  CaseFile(std::string case_id, std::vector<DeviceAssessment> devices);

  const std::string& case_id() const noexcept { return case_id_; }
  int schema_version() const noexcept { return schema_version_; }
  const std::vector<DeviceAssessment>& devices() const noexcept { return devices_; }
  const std::optional<Weights>& weights() const noexcept { return weights_; }
  MissingPolicy missing_policy() const noexcept { return missing_policy_; }
  const std::optional<ThresholdPolicy>& threshold() const noexcept { return threshold_; }
  const std::optional<ExpectedValues>& expected() const noexcept { return expected_; }
  const std::optional<AuditReference>& audit_reference() const noexcept { return audit_; }
  const std::string& description() const noexcept { return description_; }

  const DeviceAssessment* find_device(std::string_view device_id) const noexcept;

  void add_device(DeviceAssessment device);
  // Throws Error(UnknownDevice) if no device has the same id.
  void replace_device(DeviceAssessment device);

  void set_schema_version(int version);
  void set_weights(std::optional<Weights> weights) { weights_ = std::move(weights); }
  void set_missing_policy(MissingPolicy policy) noexcept { missing_policy_ = policy; }
  void set_threshold(std::optional<ThresholdPolicy> t) { threshold_ = std::move(t); }
  void set_expected(std::optional<ExpectedValues> e) { expected_ = std::move(e); }
  void set_audit_reference(std::optional<AuditReference> a) { audit_ = std::move(a); }
  void set_description(std::string text) { description_ = std::move(text); }

  bool operator==(const CaseFile&) const = default;

 private:
  std::string case_id_;
  int schema_version_ = kSchemaVersion;
  std::vector<DeviceAssessment> devices_;
  std::optional<Weights> weights_;
  MissingPolicy missing_policy_ = MissingPolicy::AvailableOnly;
  std::optional<ThresholdPolicy> threshold_;
  std::optional<ExpectedValues> expected_;
  std::optional<AuditReference> audit_;
  std::string description_;
};

}  // namespace iqa
