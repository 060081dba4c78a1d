#include "iqa/assessment_report.hpp"

#include <algorithm>

#include "iqa/errors.hpp"

namespace iqa {
namespace {

std::optional<Hundredths> lookup(const std::optional<ExpectedValues>& e,
                                 const std::map<std::string, Hundredths> ExpectedValues::*member,
                                 const std::string& key) {
  if (!e) return std::nullopt;
  const auto& m = (*e).*member;
  const auto it = m.find(key);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> coverage(const CaseFile& c) {
  std::vector<std::string> notes;
  const std::size_t n = c.devices().size();
  for (FactorId f : kAllFactors) {
    std::vector<std::string> without;
    for (const auto& d : c.devices()) {
      if (d.score(f) == nullptr) without.push_back(d.device_id());
    }
    if (without.empty()) continue;
    if (without.size() == n) {
      notes.push_back(std::string(to_string(f)) + " is not scored on any of the " +
                      std::to_string(n) +
                      " devices; any figure that includes it cannot be reproduced from this case");
    } else {
      std::string ids;
      for (const auto& id : without) ids += (ids.empty() ? "" : ", ") + id;
      notes.push_back(std::string(to_string(f)) + " is not scored on device(s) " + ids);
    }
  }
  return notes;
}

}  // namespace

std::string device_label(const std::string& device_id) { return "device:" + device_id; }

AssessmentReport build_report(const CaseFile& c) {
  AssessmentReport r;
  r.case_id = c.case_id();
  const auto& expected = c.expected();
  if (expected) {
    r.expected_notes = expected->notes;
    r.expected_source = expected->source;
  }

  const IqaResult total = case_iqa(c);
  r.basis = total.basis;

  for (const auto& d : c.devices()) {
    AssessmentReport::DeviceRow row;
    row.device_id = d.device_id();
    row.kind = d.kind();
    row.iqa = device_iqa(d, c.missing_policy(), c.weights()).value;
    row.expected = lookup(expected, &ExpectedValues::device_iqa, d.device_id());
    row.factors_scored = d.present_factors().size();
    r.devices.push_back(std::move(row));
  }

  for (InfoStatus s : kAllInfoStatuses) {
    AssessmentReport::AggregateRow row;
    row.label = std::string(aggregate_label(s));
    row.expected = lookup(expected, &ExpectedValues::aggregates, row.label);
    try {
      const IqaResult ir = category_iqa(c, s);
      row.value = ir.value;
      row.note = std::to_string(ir.numerator_terms) + " values";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::EmptyAssessment && e.code() != ErrorCode::ZeroWeightSum) throw;
      row.note = e.what();
    }
    r.aggregates.push_back(std::move(row));
  }

  const bool any_layered = std::any_of(c.devices().begin(), c.devices().end(),
                                       [](const DeviceAssessment& d) { return d.has_layered_scores(); });
  if (any_layered) {
    for (Layer l : kAllLayers) {
      AssessmentReport::AggregateRow row;
      row.label = std::string(aggregate_label(l));
      row.expected = lookup(expected, &ExpectedValues::aggregates, row.label);
      try {
        LayerIqaResult lr = layer_iqa(c, l);
        row.value = lr.normalized_value;
        row.note = "raw " + lr.raw_value.to_fixed(4) + " over h=" +
                   std::to_string(lr.per_device_terms.size()) + " devices";
        r.layers.push_back(std::move(lr));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NoLayeredScores) throw;
        row.note = e.what();
      }
      r.aggregates.push_back(std::move(row));
    }
  }

  AssessmentReport::AggregateRow tot;
  tot.label = "IQA_tot";
  tot.value = total.value;
  tot.expected = lookup(expected, &ExpectedValues::aggregates, tot.label);
  tot.note = std::to_string(total.numerator_terms) + " values";
  r.aggregates.push_back(std::move(tot));

  r.coverage_notes = coverage(c);
  return r;
}

std::vector<Discrepancy> find_discrepancies(const AssessmentReport& report,
                                            const Rational& tolerance) {
  std::vector<Discrepancy> out;
  auto check = [&](const std::string& label, const std::optional<Rational>& value,
                   const std::optional<Hundredths>& expected) {
    if (!expected) return;
    Discrepancy d{label, value, *expected, std::nullopt};
    if (value) {
      d.delta = *value - expected->to_rational();
      if (abs(*d.delta) <= tolerance) return;
    }
    out.push_back(std::move(d));
  };
  for (const auto& row : report.devices) check(device_label(row.device_id), row.iqa, row.expected);
  for (const auto& row : report.aggregates) check(row.label, row.value, row.expected);
  return out;
}

}  // namespace iqa
