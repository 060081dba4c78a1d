#include <gtest/gtest.h>

#include "iqa/checklist.hpp"
#include "iqa/errors.hpp"

using namespace iqa;

namespace {

// Two-question template used for the pairwise checks.
constexpr FactorId kTwo = FactorId::DTC;

std::int64_t score_levels(FactorId f, std::vector<AnswerLevel> levels) {
  std::vector<Answer> answers;
  for (std::size_t i = 0; i < levels.size(); ++i) answers.emplace_back(i, levels[i], "seen");
  return score_answers(f, answers).value().units();
}

}  // namespace

TEST(Checklist, EveryFactorHasQuestions) {
  const std::map<FactorId, std::size_t> counts = {
      {FactorId::DTC, 2}, {FactorId::DST, 3}, {FactorId::CS, 2}, {FactorId::CM, 1}, {FactorId::SR, 1},
      {FactorId::PC, 1},  {FactorId::TDA, 1}, {FactorId::OT, 1}, {FactorId::OS, 1}};
  for (FactorId f : kAllFactors) {
    const auto& t = checklist_for(f);
    EXPECT_EQ(t.factor, f);
    EXPECT_EQ(t.questions.size(), counts.at(f)) << to_string(f);
    for (const auto& q : t.questions) EXPECT_FALSE(q.empty());
  }
  EXPECT_NE(checklist_for(FactorId::SR).questions[0].find("additional information"), std::string::npos);
  EXPECT_NE(checklist_for(FactorId::OS).questions[0].find("expertise of the observer"), std::string::npos);
}

TEST(Checklist, LevelScale) {
  EXPECT_EQ(level_value(AnswerLevel::No).units(), 0);
  EXPECT_EQ(level_value(AnswerLevel::Poor).units(), 25);
  EXPECT_EQ(level_value(AnswerLevel::Partial).units(), 50);
  EXPECT_EQ(level_value(AnswerLevel::Good).units(), 75);
  EXPECT_EQ(level_value(AnswerLevel::Full).units(), 100);
  EXPECT_EQ(parse_answer_level("good"), AnswerLevel::Good);
  EXPECT_EQ(parse_answer_level("FULL"), AnswerLevel::Full);
  EXPECT_EQ(parse_answer_level("fully"), std::nullopt);
}

TEST(Checklist, RubricExamples) {
  EXPECT_EQ(score_levels(kTwo, {AnswerLevel::Full, AnswerLevel::Full}), 100);
  EXPECT_EQ(score_levels(kTwo, {AnswerLevel::Good, AnswerLevel::Partial}), 63);
  EXPECT_EQ(score_levels(FactorId::OS, {AnswerLevel::No}), 0);
}

TEST(Checklist, JustificationCarriesNotes) {
  const FactorScore s = score_answers(
      kTwo, {Answer(1, AnswerLevel::Partial, "firmware two releases behind"),
             Answer(0, AnswerLevel::Good, "case intact")});
  EXPECT_NE(s.justification().find("Q1 Good: case intact"), std::string::npos);
  EXPECT_NE(s.justification().find("Q2 Partial: firmware two releases behind"), std::string::npos);
  EXPECT_EQ(s.provenance(), "checklist");
}

TEST(Checklist, NumericOverridePassesThrough) {
  EXPECT_EQ(score_answers(FactorId::CM, {Answer(0, Hundredths(37), "measured")}).value().units(), 37);
  // (0.40 + 0.75) / 2 = 0.575 -> 0.58
  EXPECT_EQ(score_answers(kTwo, {Answer(0, Hundredths(40), "a"), Answer(1, AnswerLevel::Good, "b")})
                .value()
                .units(),
            58);
  EXPECT_THROW(Answer(0, Hundredths(101), "x"), Error);
  EXPECT_THROW(Answer(0, AnswerLevel::Full, "  "), Error);
}

TEST(Checklist, ArityErrors) {
  try {
    score_answers(FactorId::DST, {Answer(0, AnswerLevel::Full, "a")});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IncompleteAnswers);
    EXPECT_EQ(e.findings().size(), 2u);
  }
  try {
    score_answers(FactorId::OS, {Answer(0, AnswerLevel::Full, "a"), Answer(1, AnswerLevel::Full, "b")});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MixedArity);
  }
  try {
    score_answers(FactorId::OS, {Answer(0, AnswerLevel::Full, "a"), Answer(0, AnswerLevel::No, "b")});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MixedArity);
  }
}

TEST(Checklist, MonotoneOverAllTwoQuestionCombinations) {
  for (AnswerLevel a : kAllAnswerLevels) {
    for (AnswerLevel b : kAllAnswerLevels) {
      const std::int64_t base = score_levels(kTwo, {a, b});
      // Oracle: (25 i + 25 j) / 2, half-up.
      const std::int64_t doubled = 25 * (static_cast<int>(a) + static_cast<int>(b));
      EXPECT_EQ(base, (doubled + 1) / 2);
      if (a != AnswerLevel::Full) {
        EXPECT_GE(score_levels(kTwo, {static_cast<AnswerLevel>(static_cast<int>(a) + 1), b}), base);
      }
      if (b != AnswerLevel::Full) {
        EXPECT_GE(score_levels(kTwo, {a, static_cast<AnswerLevel>(static_cast<int>(b) + 1)}), base);
      }
      EXPECT_EQ(score_levels(kTwo, {b, a}), base);
    }
  }
}
