#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "iqa/iqa.hpp"
#include "support/properties.hpp"
#include "support/temp_dir.hpp"

using namespace iqa;
using nlohmann::json;

namespace {

const std::string kFixture = read_file(IQA_FIXTURE_PATH);

std::vector<Finding> findings_of(const std::string& text, ErrorCode expected) {
  try {
    parse_case(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), expected) << e.what();
    return e.findings();
  }
  ADD_FAILURE() << "parse succeeded";
  return {};
}

bool has_locator(const std::vector<Finding>& fs, const std::string& loc) {
  for (const auto& f : fs) {
    if (f.locator == loc) return true;
  }
  return false;
}

json fixture_json() { return json::parse(kFixture); }

}  // namespace

TEST(CaseIo, FixtureParses) {
  const CaseFile c = parse_case(kFixture);
  EXPECT_EQ(c.case_id(), "case_study_2");
  EXPECT_EQ(c.devices().size(), 6u);
  EXPECT_EQ(c.missing_policy(), MissingPolicy::AvailableOnly);
  ASSERT_TRUE(c.expected());
  EXPECT_EQ(c.expected()->device_iqa.at("4").units(), 8979);
  EXPECT_EQ(c.expected()->aggregates.at("IQA_II").units(), 5630);
  EXPECT_FALSE(c.expected()->notes.empty());
}

TEST(CaseIo, FixtureIsCanonical) {
  EXPECT_EQ(serialize_case(parse_case(kFixture)), kFixture);
}

TEST(CaseIo, RoundTripRandomCases) {
  EXPECT_EQ(iqa::testing::check_round_trip(11, 200), "");
}

TEST(CaseIo, SyntaxError) {
  findings_of("{\"case_id\": ", ErrorCode::SyntaxError);
}

TEST(CaseIo, ScoreOutOfRangeNamesDeviceAndFactor) {
  json j = fixture_json();
  j["devices"][2]["scores"]["SR"]["value"] = "1.5";
  const auto fs = findings_of(j.dump(), ErrorCode::ValidationError);
  EXPECT_TRUE(has_locator(fs, "devices[device:3]/scores/SR/value"));
}

TEST(CaseIo, PrecisionAndTypeFindings) {
  json j = fixture_json();
  j["devices"][0]["scores"]["DTC"]["value"] = "0.565";
  j["devices"][1]["scores"]["OS"]["value"] = 0.5;
  j["devices"][1]["scores"]["OT"]["justification"] = "";
  const auto fs = findings_of(j.dump(), ErrorCode::SchemaError);
  EXPECT_TRUE(has_locator(fs, "devices[device:1]/scores/DTC/value"));
  EXPECT_TRUE(has_locator(fs, "devices[device:2]/scores/OS/value"));
  EXPECT_TRUE(has_locator(fs, "devices[device:2]/scores/OT/justification"));
}

TEST(CaseIo, StructuralFindings) {
  json j = fixture_json();
  j["devices"][1]["device_id"] = "1";
  j["surprise"] = true;
  j["devices"][0]["scores"]["XYZ"] = j["devices"][0]["scores"]["DTC"];
  j["schema_version"] = 2;
  const auto fs = findings_of(j.dump(), ErrorCode::SchemaError);
  EXPECT_TRUE(has_locator(fs, "surprise"));
  EXPECT_GE(fs.size(), 4u);
}

TEST(CaseIo, MissingRequiredFields) {
  const auto fs = findings_of(R"({"schema_version": 1, "devices": [{"kind": "x"}]})", ErrorCode::SchemaError);
  EXPECT_TRUE(has_locator(fs, "case_id"));
}

TEST(CaseIo, ThresholdNeedsJustification) {
  json j = fixture_json();
  j["threshold"] = {{"cutoff_percent", "50"}, {"justification", " "}};
  const auto fs = findings_of(j.dump(), ErrorCode::ValidationError);
  EXPECT_TRUE(has_locator(fs, "threshold/justification"));
}

TEST(CaseIo, LayeredScoresRoundTrip) {
  json j = fixture_json();
  j["devices"][0]["layered_scores"] = {
      {"DTC", {{"physical", {{"value", "0.40"}, {"justification", "j"}, {"provenance", "p"}}}}}};
  const CaseFile c = parse_case(j.dump());
  ASSERT_NE(c.devices()[0].layered_score(FactorId::DTC, Layer::Physical), nullptr);
  EXPECT_EQ(parse_case(serialize_case(c)), c);
}

TEST(CaseIo, WeightsDocument) {
  const Weights w = parse_weights(R"({"CS": "0", "OS": "3/2", "DTC": 2})");
  EXPECT_EQ(w.weight(FactorId::CS), Rational(0));
  EXPECT_EQ(w.weight(FactorId::OS), Rational(3, 2));
  EXPECT_EQ(w.weight(FactorId::DTC), Rational(2));
  EXPECT_EQ(w.weight(FactorId::SR), Rational(1));
  EXPECT_THROW(parse_weights(R"({"ZZ": "1"})"), Error);
  EXPECT_THROW(parse_weights(R"({"CS": "-1"})"), Error);
}

TEST(CaseIo, AtomicWriteReplacesWholeFile) {
  iqa::testing::TempDir dir;
  const auto p = dir / "out.txt";
  write_file_atomic(p, "first version, long");
  write_file_atomic(p, "second");
  EXPECT_EQ(read_file(p), "second");
  std::size_t entries = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir.path())) ++entries;
  EXPECT_EQ(entries, 1u);
  try {
    read_file(dir / "absent.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SinkUnavailable);
  }
}
