#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "slheat/config.hpp"
#include "slheat/continuation.hpp"

namespace slheat {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolations = 1,
  kExitBlowup = 2,
  kExitNonconvergence = 3,
  kExitIo = 4,
  kExitUsage = 64,
};

struct SolveResult {
  GlobalRun run;
  EnergyReport energy;
};

GlobalOptions options_from(const RunConfig& config);
GridSpec grid_from(const RunConfig& config);

/// Runs global_solve for a configuration. Writes snapshots when
/// config.snapshot_dir is set; warns on `log` when the initial data does not
/// decay towards the box boundary.
SolveResult solve_config(const RunConfig& config, std::ostream& log);

/// Exit code for a run status.
int exit_code_for(RunStatus status);

/// Thresholds verify applies for a configuration.
VerifyThresholds thresholds_for(const RunConfig& config);

/// `solve`: writes the energy and window CSVs, prints a one-line summary.
int run_solve(const RunConfig& config, std::ostream& log);

/// `verify`: solve, then run every runtime check; 0 iff no violations.
int run_verify(const RunConfig& config, std::ostream& log);

/// `verify --report`: checks an existing energy CSV, taking thresholds from the
/// configuration echoed in its header.
int verify_report_file(const std::filesystem::path& report, std::ostream& log);

/// `oracle-compare`: spectral solve and finite-difference solve from the same
/// data; 0 iff the final sup-norm difference is within threshold.
int run_oracle_compare(const RunConfig& config, double threshold, std::ostream& log);

/// `energy-report`: recomputes energy functionals from the snapshot index
/// written by solve (lines "t,window,file") into an energy CSV.
int run_energy_report(const std::filesystem::path& index, const RunConfig& config,
                      const std::filesystem::path& out, std::ostream& log);

}  // namespace slheat
