#pragma once

#include <string>

#include "config.hpp"

namespace lgcli {

enum ExitCode : int { kOk = 0, kCheckFailure = 1, kMisuse = 2, kNonConvergence = 3 };

struct RunOptions {
  std::string outDir;
  bool allowNonconverged = false;
};

int cmd_build(const RunConfig& config, const RunOptions& options);
int cmd_verify(const RunConfig& config, const RunOptions& options);
int cmd_solve(const RunConfig& config, const RunOptions& options);
// Validates <out>/report.json and prints one line per check.
int cmd_report(const RunConfig& config, const RunOptions& options);

}  // namespace lgcli
