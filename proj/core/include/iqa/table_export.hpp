#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "iqa/assessment_report.hpp"

namespace iqa {

// Comma-separated table, LF line endings, percentages at two decimals:
//
//   label,iqa_percent[,expected_percent,delta]
//   device:1,55.25[,54.37,0.88]
//   ...
//   IQA_I,...  IQA_II,...  IQA_III,...  [IQA_p,... IQA_n,... IQA_a,...]  IQA_tot,...
//
// The expected/delta columns appear only when some row has an expected
// value. Absent values are empty fields.
std::string export_table(const AssessmentReport& report);

// RFC-4180 field quoting: quoted iff the field holds a comma, quote, CR or LF.
std::string csv_field(std::string_view field);
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace iqa
