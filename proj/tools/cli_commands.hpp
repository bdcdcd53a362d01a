#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "cli_config.hpp"

namespace monosys::cli {

struct RunOptions {
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::string> out;  // primary stream goes to this file when set
  std::string format;              // "csv" | "json" | "" (command default)
};

/// Exit codes shared by every subcommand:
///   0 success, 2 invalid config, 3 inadmissible lambda,
///   4 solve failure / non-convergence, 5 falsified assumption,
///   1 stability-bound violation in a study.
inline constexpr int kExitOk = 0;
inline constexpr int kExitBoundViolated = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitInadmissible = 3;
inline constexpr int kExitSolveFailure = 4;
inline constexpr int kExitFalsified = 5;

int cmd_spectrum(const RunConfig& config, const RunOptions& options, std::ostream& out,
                 std::ostream& err);
int cmd_solve(const RunConfig& config, const RunOptions& options, std::ostream& out,
              std::ostream& err);
int cmd_bvp(const RunConfig& config, const RunOptions& options, std::ostream& out,
            std::ostream& err);
int cmd_study(const RunConfig& config, const RunOptions& options, std::ostream& out,
              std::ostream& err);
int cmd_check(const RunConfig& config, const RunOptions& options, std::ostream& out,
              std::ostream& err);

}  // namespace monosys::cli
