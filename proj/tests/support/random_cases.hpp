#pragma once

// Seeded generators for property tests. Everything is driven by one
// std::mt19937_64 so a failing seed reproduces exactly.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "iqa/iqa.hpp"

namespace iqa::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline Hundredths random_value(Rng& rng) { return Hundredths(uniform_int(rng, 0, 100)); }

inline std::string random_text(Rng& rng, const char* stem) {
  return std::string(stem) + " #" + std::to_string(uniform_int(rng, 0, 99999));
}

inline FactorScore random_score(Rng& rng, FactorId f) {
  return FactorScore(f, random_value(rng), random_text(rng, "observed"), random_text(rng, "item"));
}

struct CaseShape {
  int min_devices = 1;
  int max_devices = 20;
  double presence = 1.0;      // chance each factor is scored
  double layered = 0.0;       // chance each (factor, layer) cell is scored
  bool extras = false;        // weights, threshold, expected block, audit ref
};

inline DeviceAssessment random_device(Rng& rng, const std::string& id, const CaseShape& shape) {
  static const char* kinds[] = {"smartphone", "drone", "smartTV", "pc laptop", "smartwatch",
                                "router \"edge\"", "SIM, card"};
  DeviceAssessment d(id, kinds[uniform_int(rng, 0, 6)]);
  for (FactorId f : kAllFactors) {
    if (shape.presence >= 1.0 || coin(rng, shape.presence)) d.set_score(random_score(rng, f));
    for (Layer l : kAllLayers) {
      if (shape.layered > 0.0 && coin(rng, shape.layered)) {
        d.set_layered_score(LayeredFactorScore(f, l, random_value(rng), random_text(rng, "layer"),
                                               random_text(rng, "src")));
      }
    }
  }
  if (d.present_factors().empty() && !d.has_layered_scores()) {
    d.set_score(random_score(rng, kAllFactors[uniform_int(rng, 0, 8)]));
  }
  return d;
}

inline CaseFile random_case(Rng& rng, const CaseShape& shape = {}) {
  const int n = static_cast<int>(uniform_int(rng, shape.min_devices, shape.max_devices));
  std::vector<DeviceAssessment> devices;
  for (int i = 0; i < n; ++i) devices.push_back(random_device(rng, "d" + std::to_string(i + 1), shape));
  CaseFile c("case-" + std::to_string(uniform_int(rng, 0, 1 << 20)), std::move(devices));
  if (!shape.extras) return c;

  if (coin(rng)) {
    std::map<FactorId, Rational> w;
    for (FactorId f : kAllFactors) {
      if (coin(rng)) w[f] = Rational(uniform_int(rng, 0, 12), uniform_int(rng, 1, 4));
    }
    w[FactorId::OS] = Rational(uniform_int(rng, 1, 5));
    c.set_weights(Weights(w));
  }
  c.set_missing_policy(static_cast<MissingPolicy>(uniform_int(rng, 0, 2)));
  if (coin(rng)) c.set_threshold(ThresholdPolicy(Rational(uniform_int(rng, 0, 10000), 100),
                                                 random_text(rng, "reason")));
  if (coin(rng)) {
    ExpectedValues e;
    e.source = random_text(rng, "source");
    for (const auto& d : c.devices()) {
      if (coin(rng)) e.device_iqa[d.device_id()] = Hundredths(uniform_int(rng, 0, 10000));
    }
    if (coin(rng)) e.aggregates["IQA_II"] = Hundredths(uniform_int(rng, 0, 10000));
    if (coin(rng)) e.aggregates["IQA_tot"] = Hundredths(uniform_int(rng, 0, 10000));
    if (coin(rng)) e.notes.push_back(random_text(rng, "note, with \"quotes\""));
    c.set_expected(e);
  }
  if (coin(rng)) c.set_audit_reference(AuditReference{"log.jsonl", static_cast<std::uint64_t>(uniform_int(rng, 0, 50))});
  if (coin(rng)) c.set_description(random_text(rng, "desc\nline"));
  return c;
}

}  // namespace iqa::testing
