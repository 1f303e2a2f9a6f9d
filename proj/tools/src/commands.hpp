#pragma once

#include <filesystem>
#include <ostream>
#include <vector>

#include "config.hpp"

namespace heatdens::cli {

/// Exit status plus the files a command wrote.
struct CommandResult {
  int exit_code = 0;
  std::vector<std::filesystem::path> files;
};

/// Initial-condition paths phi on [L1, L2], one CSV per draw.
CommandResult cmd_paths(const RunConfig& cfg, std::ostream& log);
/// One density CSV per truncation order, all on a shared grid.
CommandResult cmd_density(const RunConfig& cfg, std::ostream& log);
/// Mean and variance per order from the curve and from direct sampling.
CommandResult cmd_moments(const RunConfig& cfg, std::ostream& log);
/// Sup-norm differences of consecutive orders with the a priori bound.
CommandResult cmd_converge(const RunConfig& cfg, std::ostream& log);
/// Hypothesis report; also printed to `log`.
CommandResult cmd_check(const RunConfig& cfg, std::ostream& log);

}  // namespace heatdens::cli
