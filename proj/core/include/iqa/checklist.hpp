#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "iqa/decimal.hpp"
#include "iqa/factor.hpp"
#include "iqa/score.hpp"

namespace iqa {

struct ChecklistTemplate {
  FactorId factor;
  std::vector<std::string> questions;
};

// Forensic checklist prompts for a factor. Multi-part items are split into
// one prompt per question.
const ChecklistTemplate& checklist_for(FactorId factor);

// Five-step ordinal scale, equally spaced over [0, 1].
enum class AnswerLevel { No, Poor, Partial, Good, Full };

inline constexpr std::array<AnswerLevel, 5> kAllAnswerLevels = {
    AnswerLevel::No, AnswerLevel::Poor, AnswerLevel::Partial, AnswerLevel::Good, AnswerLevel::Full};

Hundredths level_value(AnswerLevel level) noexcept;
std::string_view to_string(AnswerLevel level) noexcept;
// Case-insensitive ("full", "Full").
std::optional<AnswerLevel> parse_answer_level(std::string_view text) noexcept;

struct Answer {
  std::size_t question = 0;                       // zero-based index into the template
  std::variant<AnswerLevel, Hundredths> response;  // ordinal level or a direct value in [0, 1]
  std::string note;

  // Throws Error(MissingJustification) on a blank note and
  // Error(OutOfRange) for an override outside [0, 1].
  Answer(std::size_t question, std::variant<AnswerLevel, Hundredths> response, std::string note);
};

// Mean of the per-question values, rounded half-up to hundredths. Requires
// exactly one answer per template question: a missing question is
// Error(IncompleteAnswers); an index past the template or a repeated index
// is Error(MixedArity).
FactorScore score_answers(FactorId factor, const std::vector<Answer>& answers,
                          std::string provenance = "checklist");

}  // namespace iqa
