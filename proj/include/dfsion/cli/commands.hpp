#pragma once

#include <string>

#include "dfsion/cli/config.hpp"
#include "dfsion/cli/report.hpp"

namespace dfsion::cli {

enum ExitCode : int { kExitOk = 0, kExitConfig = 1, kExitPhysics = 2 };

struct CommandResult {
  Report report;
  int exit_code = kExitOk;
  std::string headline;  // one-line verdict for the terminal
};

// Each command expects an already validated config.
CommandResult cmd_cnot_verify(const RunConfig& config);
CommandResult cmd_teleport(const RunConfig& config);
CommandResult cmd_rabi(const RunConfig& config);
CommandResult cmd_timing(const RunConfig& config);
CommandResult cmd_dephase(const RunConfig& config);

// Reference CNOT time quoted for the paper preset, in seconds.
inline constexpr double kPaperCnotTime = 7e-4;

}  // namespace dfsion::cli
