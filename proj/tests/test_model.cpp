#include <gtest/gtest.h>

#include <map>
#include <set>

#include "iqa/case_file.hpp"
#include "iqa/errors.hpp"
#include "iqa/factor.hpp"
#include "iqa/score.hpp"

using namespace iqa;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no iqa::Error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Taxonomy, CategoryAndStatusOfEveryFactor) {
  const std::map<FactorId, std::pair<Category, InfoStatus>> expected = {
      {FactorId::DTC, {Category::Intrinsic, InfoStatus::AsReality}},
      {FactorId::DST, {Category::Contextual, InfoStatus::AsReality}},
      {FactorId::CS, {Category::Contextual, InfoStatus::AsReality}},
      {FactorId::CM, {Category::Representational, InfoStatus::AboutReality}},
      {FactorId::SR, {Category::Representational, InfoStatus::AboutReality}},
      {FactorId::PC, {Category::Accessibility, InfoStatus::ForReality}},
      {FactorId::TDA, {Category::Accessibility, InfoStatus::ForReality}},
      {FactorId::OT, {Category::Accessibility, InfoStatus::ForReality}},
      {FactorId::OS, {Category::Accessibility, InfoStatus::ForReality}},
  };
  ASSERT_EQ(expected.size(), kFactorCount);
  for (FactorId f : kAllFactors) {
    EXPECT_EQ(category_of(f), expected.at(f).first) << to_string(f);
    EXPECT_EQ(info_status_of(f), expected.at(f).second) << to_string(f);
  }
}

TEST(Taxonomy, StatusPartitionSizes) {
  std::set<FactorId> seen;
  const std::map<InfoStatus, std::size_t> sizes = {
      {InfoStatus::AsReality, 3}, {InfoStatus::AboutReality, 2}, {InfoStatus::ForReality, 4}};
  for (InfoStatus s : kAllInfoStatuses) {
    const auto members = factors_with_status(s);
    EXPECT_EQ(members.size(), sizes.at(s));
    for (FactorId f : members) {
      EXPECT_EQ(info_status_of(f), s);
      EXPECT_TRUE(seen.insert(f).second);
    }
  }
  EXPECT_EQ(seen.size(), kFactorCount);
}

TEST(Taxonomy, LayerExpansion) {
  for (FactorId f : kAllFactors) {
    const auto cells = expand_layers(f);
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_EQ(cells[i].first, f);
      EXPECT_EQ(cells[i].second, kAllLayers[i]);
    }
  }
}

TEST(Taxonomy, NamesRoundTrip) {
  for (FactorId f : kAllFactors) EXPECT_EQ(parse_factor(to_string(f)), f);
  for (Layer l : kAllLayers) EXPECT_EQ(parse_layer(to_string(l)), l);
  EXPECT_EQ(parse_factor("dtc"), std::nullopt);
  EXPECT_EQ(aggregate_label(InfoStatus::AboutReality), "IQA_II");
  EXPECT_EQ(aggregate_label(Layer::Network), "IQA_n");
}

TEST(FactorScore, ValidatesRangeAndText) {
  const FactorScore ok(FactorId::SR, Hundredths(56), "why", "where");
  EXPECT_EQ(ok.value().units(), 56);
  EXPECT_EQ(code_of([] { FactorScore(FactorId::SR, Hundredths(101), "why", "where"); }),
            ErrorCode::OutOfRange);
  EXPECT_EQ(code_of([] { FactorScore(FactorId::SR, Hundredths(-1), "why", "where"); }),
            ErrorCode::OutOfRange);
  EXPECT_EQ(code_of([] { FactorScore(FactorId::SR, Hundredths(10), " \t", "where"); }),
            ErrorCode::MissingJustification);
  EXPECT_EQ(code_of([] { FactorScore(FactorId::SR, Hundredths(10), "why", ""); }),
            ErrorCode::MissingProvenance);
  EXPECT_EQ(code_of([] { make_score(FactorId::CM, "0.555", "why", "where"); }),
            ErrorCode::PrecisionError);
  EXPECT_EQ(code_of([] { make_score(FactorId::CM, "1.5", "why", "where"); }),
            ErrorCode::OutOfRange);
  EXPECT_EQ(make_score(FactorId::CM, "1", "why", "where").value(), kScoreMax);
  EXPECT_EQ(make_score(FactorId::CM, "0.0", "why", "where").value(), kScoreMin);
}

TEST(DeviceAssessment, SetReplaceErase) {
  DeviceAssessment d("4", "smartTV");
  EXPECT_EQ(d.missing_factors().size(), kFactorCount);
  EXPECT_FALSE(d.set_score(make_score(FactorId::OS, "0.40", "a", "b")));
  const auto prev = d.set_score(make_score(FactorId::OS, "0.50", "c", "d"));
  ASSERT_TRUE(prev);
  EXPECT_EQ(prev->value().units(), 40);
  EXPECT_EQ(d.score(FactorId::OS)->value().units(), 50);
  EXPECT_EQ(d.present_factors(), std::vector<FactorId>{FactorId::OS});
  EXPECT_TRUE(d.erase_score(FactorId::OS));
  EXPECT_FALSE(d.erase_score(FactorId::OS));
  EXPECT_EQ(d.score(FactorId::OS), nullptr);

  EXPECT_FALSE(d.has_layered_scores());
  d.set_layered_score(make_layered_score(FactorId::DTC, Layer::Network, "0.3", "a", "b"));
  EXPECT_TRUE(d.has_layered_scores());
  EXPECT_EQ(d.layered_scores_in(Layer::Network).size(), 1u);
  EXPECT_TRUE(d.layered_scores_in(Layer::Physical).empty());
  EXPECT_NE(d.layered_score(FactorId::DTC, Layer::Network), nullptr);
  EXPECT_EQ(code_of([] { DeviceAssessment("", "x"); }), ErrorCode::InvalidArgument);
}

TEST(Weights, DefaultsAndValidation) {
  const Weights uniform;
  EXPECT_TRUE(uniform.is_uniform());
  for (FactorId f : kAllFactors) EXPECT_EQ(uniform.weight(f), Rational(1));

  const Weights partial({{FactorId::CS, Rational(0)}, {FactorId::OS, Rational(3, 2)}});
  EXPECT_FALSE(partial.is_uniform());
  EXPECT_EQ(partial.weight(FactorId::DTC), Rational(1));
  EXPECT_EQ(partial.weight(FactorId::CS), Rational(0));
  EXPECT_TRUE(Weights({{FactorId::CS, Rational(1)}}).is_uniform());

  EXPECT_EQ(code_of([] { Weights({{FactorId::CS, Rational(-1)}}); }), ErrorCode::InvalidArgument);
  std::map<FactorId, Rational> zeros;
  for (FactorId f : kAllFactors) zeros[f] = Rational(0);
  EXPECT_EQ(code_of([&] { Weights{zeros}; }), ErrorCode::ZeroWeightSum);
}

TEST(ThresholdPolicy, RequiresJustificationAndRange) {
  EXPECT_EQ(ThresholdPolicy(Rational(50), "policy").cutoff(), Rational(50));
  EXPECT_EQ(code_of([] { ThresholdPolicy(Rational(50), ""); }), ErrorCode::MissingJustification);
  EXPECT_EQ(code_of([] { ThresholdPolicy(Rational(101), "x"); }), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of([] { ThresholdPolicy(Rational(-1, 100), "x"); }), ErrorCode::OutOfRange);
}

TEST(MissingPolicy, Names) {
  for (auto p : {MissingPolicy::Strict, MissingPolicy::AvailableOnly, MissingPolicy::ImputeZero}) {
    EXPECT_EQ(parse_missing_policy(to_string(p)), p);
  }
  EXPECT_EQ(parse_missing_policy("available-only"), MissingPolicy::AvailableOnly);
  EXPECT_EQ(parse_missing_policy("impute-zero"), MissingPolicy::ImputeZero);
  EXPECT_EQ(parse_missing_policy("lenient"), std::nullopt);
}

TEST(CaseFile, DeviceIdentity) {
  EXPECT_EQ(code_of([] {
              CaseFile("c", {DeviceAssessment("1", "a"), DeviceAssessment("1", "b")});
            }),
            ErrorCode::DuplicateEntry);
  CaseFile c("c", {DeviceAssessment("1", "a")});
  EXPECT_EQ(code_of([&] { c.add_device(DeviceAssessment("1", "z")); }), ErrorCode::DuplicateEntry);
  EXPECT_EQ(code_of([&] { c.replace_device(DeviceAssessment("9", "z")); }),
            ErrorCode::UnknownDevice);
  c.replace_device(DeviceAssessment("1", "renamed"));
  EXPECT_EQ(c.find_device("1")->kind(), "renamed");
  EXPECT_EQ(c.find_device("2"), nullptr);
  EXPECT_EQ(c.missing_policy(), MissingPolicy::AvailableOnly);
}
