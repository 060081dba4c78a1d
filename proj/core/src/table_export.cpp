#include "iqa/table_export.hpp"

#include <algorithm>
#include <optional>

namespace iqa {

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += csv_field(fields[i]);
  }
  out.push_back('\n');
  return out;
}

std::string export_table(const AssessmentReport& report) {
  const bool with_expected =
      std::any_of(report.devices.begin(), report.devices.end(),
                  [](const auto& r) { return r.expected.has_value(); }) ||
      std::any_of(report.aggregates.begin(), report.aggregates.end(),
                  [](const auto& r) { return r.expected.has_value(); });

  auto row = [&](const std::string& label, const std::optional<Rational>& value,
                 const std::optional<Hundredths>& expected) {
    std::vector<std::string> fields{label, value ? format_percent(*value) : ""};
    if (with_expected) {
      fields.push_back(expected ? expected->to_string() : "");
      fields.push_back(value && expected ? format_percent(*value - expected->to_rational()) : "");
    }
    return csv_row(fields);
  };

  std::string out = with_expected ? csv_row({"label", "iqa_percent", "expected_percent", "delta"})
                                   : csv_row({"label", "iqa_percent"});
  for (const auto& d : report.devices) out += row(device_label(d.device_id), d.iqa, d.expected);
  for (const auto& a : report.aggregates) out += row(a.label, a.value, a.expected);
  return out;
}

}  // namespace iqa
