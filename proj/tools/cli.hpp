#pragma once

#include <iosfwd>

namespace iqa::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainFailure = 2,  // validation, scoring, usage
  kIoFailure = 3,
};

// Environment variable naming the default audit log.
inline constexpr const char* kAuditLogEnv = "IQA_AUDIT_LOG";

// Entry point shared by the `iqa` binary and the tests.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace iqa::cli
