#include "iqa/checklist.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

#include "iqa/errors.hpp"

namespace iqa {
namespace {

const std::array<ChecklistTemplate, kFactorCount>& templates() {
  static const std::array<ChecklistTemplate, kFactorCount> kTemplates = {{
      {FactorId::DTC,
       {"What is the technical status of the hardware part of the system?",
        "Is the software part of the system updated to the latest release?"}},
      {FactorId::DST,
       {"Is the hardware set up, wired, and maintained taking into account the security rules "
        "corresponding to the best practices?",
        "Is the software devoted to managing the system provided with proper and up-to-date "
        "antivirus protection?",
        "Are the accesses to the system properly logged?"}},
      {FactorId::CS,
       {"Is easily obtained the information about the channel towards data are broadcasted?",
        "Is the entity from which data originate certified and reliable?"}},
      {FactorId::CM,
       {"Are data stored, even for a short period of time, in a repository that could be "
        "totally or partially accessible by some agent?"}},
      {FactorId::SR,
       {"Does the observer possess, or able to obtain, additional information about the source "
        "where the data originate?"}},
      {FactorId::PC,
       {"Are the footage and related metadata saved and preserved following the most recent "
        "GDPR precepts?"}},
      {FactorId::TDA,
       {"Are the technical specifications regarding the device and the format of the obtained "
        "data easily available, or provided directly by the owner of the data?"}},
      {FactorId::OT,
       {"Is the observer recently acknowledged in some way as a valuable operator in the field?"}},
      {FactorId::OS, {"What is the expertise of the observer as a digital Forensics investigator?"}},
  }};
  return kTemplates;
}

}  // namespace

const ChecklistTemplate& checklist_for(FactorId factor) { return templates()[index_of(factor)]; }

Hundredths level_value(AnswerLevel level) noexcept {
  return Hundredths(static_cast<std::int64_t>(level) * 25);
}

std::string_view to_string(AnswerLevel level) noexcept {
  switch (level) {
    case AnswerLevel::No: return "No";
    case AnswerLevel::Poor: return "Poor";
    case AnswerLevel::Partial: return "Partial";
    case AnswerLevel::Good: return "Good";
    case AnswerLevel::Full: return "Full";
  }
  return "?";
}

std::optional<AnswerLevel> parse_answer_level(std::string_view text) noexcept {
  for (AnswerLevel l : kAllAnswerLevels) {
    const std::string_view name = to_string(l);
    if (name.size() == text.size() &&
        std::equal(name.begin(), name.end(), text.begin(), [](char a, char b) {
          return std::tolower(static_cast<unsigned char>(a)) ==
                 std::tolower(static_cast<unsigned char>(b));
        })) {
      return l;
    }
  }
  return std::nullopt;
}

Answer::Answer(std::size_t question_index, std::variant<AnswerLevel, Hundredths> answer_response,
               std::string answer_note)
    : question(question_index), response(answer_response), note(std::move(answer_note)) {
  if (!has_content(note)) {
    throw Error(ErrorCode::MissingJustification,
                "answer to question " + std::to_string(question + 1) + " has no note");
  }
  if (const auto* v = std::get_if<Hundredths>(&response); v && (*v < kScoreMin || *v > kScoreMax)) {
    throw Error(ErrorCode::OutOfRange, "override " + v->to_string() + " outside [0.00, 1.00]");
  }
}

FactorScore score_answers(FactorId factor, const std::vector<Answer>& answers,
                          std::string provenance) {
  const ChecklistTemplate& tpl = checklist_for(factor);
  const std::size_t n = tpl.questions.size();
  std::vector<const Answer*> by_question(n, nullptr);
  std::vector<Finding> arity;

  for (const Answer& a : answers) {
    const std::string loc = std::string(to_string(factor)) + "/answers[" +
                            std::to_string(a.question) + "]";
    if (a.question >= n) {
      arity.push_back({loc, "no such question (template has " + std::to_string(n) + ")"});
    } else if (by_question[a.question] != nullptr) {
      arity.push_back({loc, "question answered more than once"});
    } else {
      by_question[a.question] = &a;
    }
  }
  if (!arity.empty()) {
    throw Error(ErrorCode::MixedArity, "answers do not match the " +
                                           std::string(to_string(factor)) + " checklist",
                std::move(arity));
  }

  std::vector<Finding> unanswered;
  for (std::size_t q = 0; q < n; ++q) {
    if (by_question[q] == nullptr) {
      unanswered.push_back({std::string(to_string(factor)) + "/answers[" + std::to_string(q) + "]",
                            "unanswered: " + tpl.questions[q]});
    }
  }
  if (!unanswered.empty()) {
    throw Error(ErrorCode::IncompleteAnswers,
                std::to_string(unanswered.size()) + " of " + std::to_string(n) + " " +
                    std::string(to_string(factor)) + " questions unanswered",
                std::move(unanswered));
  }

  std::int64_t total_units = 0;
  std::string justification;
  for (std::size_t q = 0; q < n; ++q) {
    const Answer& a = *by_question[q];
    std::string label;
    if (const auto* level = std::get_if<AnswerLevel>(&a.response)) {
      total_units += level_value(*level).units();
      label = std::string(to_string(*level));
    } else {
      const Hundredths v = std::get<Hundredths>(a.response);
      total_units += v.units();
      label = v.to_string();
    }
    if (!justification.empty()) justification += "; ";
    justification += "Q" + std::to_string(q + 1) + " " + label + ": " + a.note;
  }

  const Hundredths value =
      round_to_hundredths(Rational(total_units, static_cast<std::int64_t>(n)) / Rational(100));
  return FactorScore(factor, value, std::move(justification), std::move(provenance));
}

}  // namespace iqa
