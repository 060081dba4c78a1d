#include "iqa/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "iqa/factor.hpp"

namespace iqa {
namespace {

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string signed_percent(const Rational& v) {
  std::string s = format_percent(v);
  return v.is_negative() ? s : "+" + s;
}

std::string describe(const RankedDevice& d) {
  std::string s = "device " + d.device_id;
  if (!d.kind.empty()) s += " (" + d.kind + ")";
  return s + " " + format_percent(d.iqa) + "%";
}

std::string aggregate_title(const std::string& label) {
  for (InfoStatus s : kAllInfoStatuses) {
    if (label == aggregate_label(s)) return std::string(to_string(s));
  }
  for (Layer l : kAllLayers) {
    if (label == aggregate_label(l)) return std::string(to_string(l)) + " layer";
  }
  return "all factors, all devices";
}

}  // namespace

std::vector<RankedDevice> rank_devices(const AssessmentReport& report) {
  std::vector<RankedDevice> ranked;
  for (const auto& d : report.devices) {
    if (d.iqa) ranked.push_back({d.device_id, d.kind, *d.iqa});
  }
  std::sort(ranked.begin(), ranked.end(), [](const RankedDevice& a, const RankedDevice& b) {
    if (a.iqa != b.iqa) return a.iqa > b.iqa;
    return a.device_id < b.device_id;
  });
  return ranked;
}

std::string render_report(const AssessmentReport& report) {
  std::ostringstream out;
  out << "Information quality assessment: " << report.case_id << "\n";
  if (!report.basis.empty()) out << "Basis: " << report.basis << "\n";

  const auto ranked = rank_devices(report);
  out << "\nDevice ranking (best first)\n";
  std::map<std::string, std::size_t> scored;
  for (const auto& d : report.devices) scored[d.device_id] = d.factors_scored;
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    const auto& d = ranked[i];
    std::string name = "device " + d.device_id + (d.kind.empty() ? "" : " (" + d.kind + ")");
    out << "  " << pad(std::to_string(i + 1) + ".", 4) << pad(name, 28) << format_percent(d.iqa)
        << "%";
    if (const std::size_t n = scored[d.device_id]; n > 0) {
      out << "  (" << n << "/" << kFactorCount << " factors scored)";
    }
    out << "\n";
  }
  if (!ranked.empty()) {
    out << "Best:  " << describe(ranked.front()) << "\n";
    out << "Worst: " << describe(ranked.back()) << "\n";
    std::vector<std::string> ties;
    for (std::size_t i = 0; i < ranked.size();) {
      std::size_t j = i;
      while (j + 1 < ranked.size() && ranked[j + 1].iqa == ranked[i].iqa) ++j;
      if (j > i) {
        std::string group;
        for (std::size_t k = i; k <= j; ++k) group += (k == i ? "" : ", ") + ranked[k].device_id;
        ties.push_back(group + " at " + format_percent(ranked[i].iqa) + "%");
      }
      i = j + 1;
    }
    for (const auto& t : ties) out << "Tie: devices " << t << " (ordered by device id)\n";
  }

  auto section = [&](const char* title, auto&& pick) {
    bool header = false;
    for (const auto& a : report.aggregates) {
      if (!pick(a.label)) continue;
      if (!header) {
        out << "\n" << title << "\n";
        header = true;
      }
      out << "  " << pad(a.label, 8) << pad(aggregate_title(a.label), 30)
          << (a.value ? format_percent(*a.value) + "%" : std::string("n/a"));
      if (!a.note.empty()) out << "  [" << a.note << "]";
      out << "\n";
    }
  };
  section("Information categories", [](const std::string& l) { return l.rfind("IQA_I", 0) == 0; });
  section("IoT layers (normalized percentage)", [](const std::string& l) {
    return l == "IQA_p" || l == "IQA_n" || l == "IQA_a";
  });
  section("Case total", [](const std::string& l) { return l == "IQA_tot"; });

  if (report.gate) {
    const auto& g = *report.gate;
    out << "\nThreshold gate\n";
    out << "  cutoff: " << format_percent(g.cutoff) << "% (values >= cutoff are retained)\n";
    out << "  justification: " << g.justification << "\n";
    std::map<std::string, Rational> values(g.per_device_value.begin(), g.per_device_value.end());
    auto list = [&](const std::vector<std::string>& ids) {
      if (ids.empty()) return std::string("none");
      std::string s;
      for (const auto& id : ids) {
        s += (s.empty() ? "" : ", ") + id + " (" + format_percent(values[id]) + "%)";
      }
      return s;
    };
    out << "  retained: " << list(g.retained) << "\n";
    out << "  discarded: " << list(g.discarded) << "\n";
  }

  if (!report.coverage_notes.empty()) {
    out << "\nCoverage\n";
    for (const auto& n : report.coverage_notes) out << "  - " << n << "\n";
  }

  const auto discrepancies = find_discrepancies(report);
  if (!discrepancies.empty()) {
    out << "\nDiscrepancies against expected values (tolerance "
        << format_percent(kDiscrepancyTolerance) << " points)\n";
    if (!report.expected_source.empty()) out << "  source: " << report.expected_source << "\n";
    out << "  " << pad("label", 12) << pad("recomputed", 12) << pad("expected", 10) << "delta\n";
    for (const auto& d : discrepancies) {
      out << "  " << pad(d.label, 12)
          << pad(d.recomputed ? format_percent(*d.recomputed) : "n/a", 12)
          << pad(d.expected.to_string(), 10) << (d.delta ? signed_percent(*d.delta) : "n/a")
          << "\n";
    }
    std::vector<std::string> reasons;
    for (const auto& n : report.coverage_notes) {
      if (n.find("not scored on any") != std::string::npos) reasons.push_back(n);
    }
    for (const auto& n : report.expected_notes) reasons.push_back(n);
    if (!reasons.empty()) {
      out << "  Possible explanations:\n";
      for (const auto& r : reasons) out << "  - " << r << "\n";
    }
  }
  return out.str();
}

}  // namespace iqa
