#pragma once

// Command-line front end: `graph`, `run`, `audit` and `capacity`.
//
// Exit codes: 0 success / all checks passed, 1 usage or input error, 2 audit
// failure (or a failed retrieval), 3 audit budget exceeded.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace graphspir::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,
  kAuditFailure = 2,
  kBudgetExceeded = 3,
};

inline constexpr const char* kBudgetEnvVar = "GRAPH_SPIR_BUDGET";

struct Environment {
  std::optional<std::string> budget;  // value of GRAPH_SPIR_BUDGET
};

Environment ProcessEnvironment();

// `args` excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = {});

}  // namespace graphspir::cli
