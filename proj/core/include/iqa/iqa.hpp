#pragma once

#include "iqa/assessment_report.hpp"
#include "iqa/audit_log.hpp"
#include "iqa/case_file.hpp"
#include "iqa/case_io.hpp"
#include "iqa/checklist.hpp"
#include "iqa/decimal.hpp"
#include "iqa/errors.hpp"
#include "iqa/factor.hpp"
#include "iqa/radar.hpp"
#include "iqa/report.hpp"
#include "iqa/score.hpp"
#include "iqa/scoring.hpp"
#include "iqa/table_export.hpp"
