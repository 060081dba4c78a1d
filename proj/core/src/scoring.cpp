#include "iqa/scoring.hpp"

#include <algorithm>
#include <utility>

#include "iqa/audit_log.hpp"
#include "iqa/errors.hpp"

namespace iqa {
namespace {

const Rational kHundred(100);

std::string device_locator(const std::string& device_id) {
  return "devices[device:" + device_id + "]";
}

std::string factor_list(const std::vector<FactorId>& factors) {
  std::string out;
  for (FactorId f : factors) {
    if (!out.empty()) out += ",";
    out += to_string(f);
  }
  return out;
}

std::string weights_basis(const std::optional<Weights>& weights) {
  if (!weights || weights->is_uniform()) return "uniform";
  std::string out;
  for (FactorId f : kAllFactors) {
    if (!out.empty()) out += ",";
    out += std::string(to_string(f)) + ":" + weights->weight(f).to_string();
  }
  return out;
}

Rational weight_of(const std::optional<Weights>& weights, FactorId f) {
  return weights ? weights->weight(f) : Rational(1);
}

// Accumulates sum(w * v) and sum(w) over included terms.
struct WeightedMean {
  Rational weighted_sum;
  Rational weight_total;
  std::size_t terms = 0;

  void add(const Rational& w, const Rational& v) {
    weighted_sum += w * v;
    weight_total += w;
    ++terms;
  }
  Rational percent() const { return weighted_sum / weight_total * kHundred; }
};

Rational value_of(const FactorScore& s) { return s.value().to_rational(); }

// Throws one aggregated error from per-device failures.
[[noreturn]] void throw_aggregated(const std::vector<std::pair<std::string, Error>>& failures,
                                   const std::string& what) {
  std::vector<Finding> findings;
  std::string message = what + ":";
  for (const auto& [id, err] : failures) {
    message += " [device " + id + ": " + err.what() + "]";
    if (err.findings().empty()) {
      findings.push_back({device_locator(id), err.what()});
    } else {
      for (const auto& f : err.findings()) findings.push_back(f);
    }
  }
  throw Error(failures.front().second.code(), message, std::move(findings));
}

}  // namespace

std::string format_percent(const Rational& percent) { return percent.to_fixed(2); }

IqaResult device_iqa(const DeviceAssessment& device, MissingPolicy policy,
                     const std::optional<Weights>& weights) {
  WeightedMean mean;
  std::vector<FactorId> missing;
  std::vector<FactorId> used;
  bool any_present = false;

  for (FactorId f : kAllFactors) {
    const FactorScore* s = device.score(f);
    any_present = any_present || s != nullptr;
    const Rational w = weight_of(weights, f);
    if (w.is_zero()) continue;
    if (s != nullptr) {
      mean.add(w, value_of(*s));
      used.push_back(f);
      continue;
    }
    switch (policy) {
      case MissingPolicy::Strict:
        missing.push_back(f);
        break;
      case MissingPolicy::ImputeZero:
        mean.add(w, Rational(0));
        used.push_back(f);
        break;
      case MissingPolicy::AvailableOnly:
        break;
    }
  }

  if (!missing.empty()) {
    std::vector<Finding> findings;
    for (FactorId f : missing) {
      findings.push_back({device_locator(device.device_id()) + "/scores/" + std::string(to_string(f)),
                          "factor not scored"});
    }
    throw Error(ErrorCode::MissingFactors,
                "device " + device.device_id() + " is missing " + factor_list(missing),
                std::move(findings));
  }
  if (!any_present) {
    throw Error(ErrorCode::EmptyAssessment, "device " + device.device_id() + " has no scores",
                {{device_locator(device.device_id()), "no factor scores"}});
  }
  if (mean.terms == 0 || mean.weight_total.is_zero()) {
    throw Error(ErrorCode::ZeroWeightSum,
                "device " + device.device_id() + " has no positively weighted scored factor",
                {{device_locator(device.device_id()), "all scored factors have weight 0"}});
  }

  IqaResult result;
  result.value = mean.percent();
  result.numerator_terms = mean.terms;
  result.basis = "policy=" + std::string(to_string(policy)) + "; weights=" +
                 weights_basis(weights) + "; factors=" + factor_list(used);
  return result;
}

IqaResult aggregate_device_values(const std::vector<Rational>& device_values) {
  if (device_values.empty()) {
    throw Error(ErrorCode::EmptyAssessment, "no device values to aggregate");
  }
  Rational sum;
  for (const auto& v : device_values) sum += v;
  IqaResult result;
  result.value = sum / Rational(static_cast<std::int64_t>(device_values.size()));
  result.numerator_terms = device_values.size();
  result.basis = "mean of " + std::to_string(device_values.size()) + " device values";
  return result;
}

IqaResult case_iqa(const CaseFile& c) {
  if (c.devices().empty()) {
    throw Error(ErrorCode::EmptyAssessment, "case " + c.case_id() + " has no devices");
  }
  std::vector<Rational> values;
  std::vector<std::pair<std::string, Error>> failures;
  std::size_t terms = 0;
  for (const auto& d : c.devices()) {
    try {
      const IqaResult r = device_iqa(d, c.missing_policy(), c.weights());
      values.push_back(r.value);
      terms += r.numerator_terms;
    } catch (const Error& e) {
      failures.emplace_back(d.device_id(), e);
    }
  }
  if (!failures.empty()) throw_aggregated(failures, "case " + c.case_id() + " cannot be scored");

  IqaResult result = aggregate_device_values(values);
  result.numerator_terms = terms;
  result.basis = "mean over " + std::to_string(values.size()) +
                 " devices; policy=" + std::string(to_string(c.missing_policy())) +
                 "; weights=" + weights_basis(c.weights());
  return result;
}

IqaResult category_iqa(const CaseFile& c, InfoStatus status) {
  if (c.devices().empty()) {
    throw Error(ErrorCode::EmptyAssessment, "case " + c.case_id() + " has no devices");
  }
  const auto factors = factors_with_status(status);
  const auto& weights = c.weights();
  if (std::all_of(factors.begin(), factors.end(),
                  [&](FactorId f) { return weight_of(weights, f).is_zero(); })) {
    throw Error(ErrorCode::ZeroWeightSum,
                std::string(aggregate_label(status)) + ": every factor has weight 0");
  }

  WeightedMean mean;
  std::vector<Finding> missing;
  for (const auto& d : c.devices()) {
    for (FactorId f : factors) {
      const Rational w = weight_of(weights, f);
      if (w.is_zero()) continue;
      if (const FactorScore* s = d.score(f)) {
        mean.add(w, value_of(*s));
      } else if (c.missing_policy() == MissingPolicy::ImputeZero) {
        mean.add(w, Rational(0));
      } else if (c.missing_policy() == MissingPolicy::Strict) {
        missing.push_back({device_locator(d.device_id()) + "/scores/" + std::string(to_string(f)),
                           "factor not scored"});
      }
    }
  }
  if (!missing.empty()) {
    throw Error(ErrorCode::MissingFactors,
                std::string(aggregate_label(status)) + " needs factors that are not scored",
                std::move(missing));
  }
  if (mean.terms == 0) {
    throw Error(ErrorCode::EmptyAssessment,
                std::string(aggregate_label(status)) + ": no device scores any " +
                    std::string(to_string(status)) + " factor");
  }

  IqaResult result;
  result.value = mean.percent();
  result.numerator_terms = mean.terms;
  result.basis = std::string(aggregate_label(status)) + " over " + std::to_string(mean.terms) +
                 " values; policy=" + std::string(to_string(c.missing_policy())) +
                 "; weights=" + weights_basis(weights);
  return result;
}

LayerIqaResult layer_iqa(const CaseFile& c, Layer layer) {
  LayerIqaResult result;
  result.layer = layer;
  std::vector<Finding> missing;
  for (const auto& d : c.devices()) {
    const auto scores = d.layered_scores_in(layer);
    if (scores.empty()) {
      result.skipped_devices.push_back(d.device_id());
      missing.push_back({device_locator(d.device_id()) + "/layered_scores/" +
                             std::string(to_string(layer)),
                         "no scores in this layer"});
      continue;
    }
    Rational sum;
    for (const auto* s : scores) sum += s->value().to_rational();
    const Rational device_mean = sum / Rational(static_cast<std::int64_t>(scores.size()));
    result.per_device_terms.emplace_back(d.device_id(), device_mean);
    result.raw_value += device_mean;
  }
  if (result.per_device_terms.empty()) {
    throw Error(ErrorCode::NoLayeredScores,
                "no device has a score in the " + std::string(to_string(layer)) + " layer");
  }
  if (c.missing_policy() == MissingPolicy::Strict && !missing.empty()) {
    throw Error(ErrorCode::MissingFactors,
                std::string(aggregate_label(layer)) + ": some devices have no " +
                    std::string(to_string(layer)) + " layer scores",
                std::move(missing));
  }
  const auto h = static_cast<std::int64_t>(result.per_device_terms.size());
  result.normalized_value = result.raw_value / Rational(h) * kHundred;
  return result;
}

Rational recombine(const Rational& as_reality, const Rational& about_reality,
                   const Rational& for_reality) {
  return (Rational(3) * as_reality + Rational(2) * about_reality + Rational(4) * for_reality) /
         Rational(9);
}

Decomposition decompose(const CaseFile& c) {
  if (c.weights() && !c.weights()->is_uniform()) {
    throw Error(ErrorCode::InvalidArgument,
                "decomposition identity only holds for uniform weights");
  }
  std::vector<Finding> missing;
  for (const auto& d : c.devices()) {
    for (FactorId f : d.missing_factors()) {
      missing.push_back({device_locator(d.device_id()) + "/scores/" + std::string(to_string(f)),
                         "factor not scored"});
    }
  }
  if (!missing.empty()) {
    throw Error(ErrorCode::MissingFactors,
                "decomposition requires all nine factors on every device", std::move(missing));
  }
  CaseFile strict = c;
  strict.set_missing_policy(MissingPolicy::Strict);
  Decomposition out;
  out.as_reality = category_iqa(strict, InfoStatus::AsReality);
  out.about_reality = category_iqa(strict, InfoStatus::AboutReality);
  out.for_reality = category_iqa(strict, InfoStatus::ForReality);
  out.total = case_iqa(strict);
  out.recombined = recombine(out.as_reality.value, out.about_reality.value, out.for_reality.value);
  return out;
}

GateOutcome gate_values(const std::vector<std::pair<std::string, Rational>>& device_values,
                        const ThresholdPolicy& policy) {
  GateOutcome out;
  out.cutoff = policy.cutoff();
  out.justification = policy.justification();
  out.per_device_value = device_values;
  for (const auto& [id, value] : device_values) {
    (value >= policy.cutoff() ? out.retained : out.discarded).push_back(id);
  }
  return out;
}

GateOutcome gate(const CaseFile& c, const ThresholdPolicy& policy) {
  std::vector<std::pair<std::string, Rational>> values;
  std::vector<std::pair<std::string, Error>> failures;
  for (const auto& d : c.devices()) {
    try {
      values.emplace_back(d.device_id(), device_iqa(d, c.missing_policy(), c.weights()).value);
    } catch (const Error& e) {
      failures.emplace_back(d.device_id(), e);
    }
  }
  if (!failures.empty()) throw_aggregated(failures, "gate cannot score case " + c.case_id());
  return gate_values(values, policy);
}

AuditEvent record_gate(AuditLog& log, const GateOutcome& outcome, std::string actor,
                       const std::string& case_id) {
  nlohmann::json decisions = nlohmann::json::array();
  for (const auto& [id, value] : outcome.per_device_value) {
    decisions.push_back({{"device_id", id},
                         {"iqa_percent", format_percent(value)},
                         {"decision", value >= outcome.cutoff ? "retained" : "discarded"}});
  }
  nlohmann::json detail = {
      {"case_id", case_id},
      {"cutoff_percent", format_percent(outcome.cutoff)},
      {"decisions", std::move(decisions)},
      {"retained", outcome.retained},
      {"discarded", outcome.discarded},
  };
  return log.append(AuditAction::GateApplied, std::move(actor), std::move(detail),
                    outcome.justification);
}

GateOutcome gate(const CaseFile& c, const ThresholdPolicy& policy, AuditLog& log,
                 std::string actor) {
  GateOutcome outcome = gate(c, policy);
  record_gate(log, outcome, std::move(actor), c.case_id());
  return outcome;
}

}  // namespace iqa
