#pragma once

#include <iosfwd>
#include <string>

#include "slheat/config.hpp"
#include "slheat/continuation.hpp"
#include "slheat/diagnostics.hpp"

namespace slheat {

/// Energy report CSV: "# key = value" config lines, then the column header
///   t,N_u,N_grad,L_rho2,sup,window_index,balance_residual,holder_lhs,
///   holder_factor1,holder_factor2_status
/// and one row per time node. Junction nodes appear once. The per-window
/// columns are filled on the row of each window's final node and left empty
/// elsewhere. Reals use 17 significant digits.
void write_energy_csv(std::ostream& out, const RunConfig& config,
                      const EnergyReport& report);

/// Parses the node rows of write_energy_csv output (per-window columns are
/// read where present). `header` receives the leading comment block.
EnergyReport read_energy_csv(std::istream& in, std::string* header = nullptr);

/// One row per window:
///   window_index,t0,T,T_scheduled,R,F_bound,q,M,iterations,measured_q,
///   converged,final_diff,kernel_exponent,kernel_regularized,kernel_growth
void write_windows_csv(std::ostream& out, const RunConfig& config,
                       const GlobalRun& run, const EnergyReport& report);

/// "%.17g"
std::string format_real(double v);

}  // namespace slheat
