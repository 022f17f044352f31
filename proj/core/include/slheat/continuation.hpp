#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slheat/diagnostics.hpp"
#include "slheat/field.hpp"
#include "slheat/picard.hpp"

namespace slheat {

/// Floor on the ball radius so zero data still yields a positive window.
inline constexpr double kRadiusFloor = 1e-8;

/// R = 2 max(f_bound, 1e-8) and
/// T = min((R - f_bound) / R^(rho+1), q / ((rho+1) R^rho), t_cap).
/// Both the self-map and the contraction conditions then hold by construction.
WindowPlan window_size(double f_bound, double rho, double q, double t_cap,
                       int nodes = 8);

struct DetectorLimits {
  double cap_factor = 1e12;  ///< fire when sup > cap_factor * sup(u0)
  double t_min = 1e-12;      ///< fire when the scheduled window is shorter
};

struct BlowupDiagnosis {
  enum class Cause { sup_cap, window_floor };
  Cause cause = Cause::sup_cap;
  double time = 0.0;
  std::vector<double> sup_history;
  WindowPlan last_plan;
  std::string message;
};

/// Watches a run for the two signatures of finite-time blow-up: the sup norm
/// escaping, or the admissible window length collapsing. For valid inputs the
/// solution is global and bounded, so a diagnosis signals a broken numerical
/// contract.
class BlowupDetector {
 public:
  BlowupDetector(double initial_sup, DetectorLimits limits = {});

  /// Records sup at time t and inspects the plan scheduled from there.
  std::optional<BlowupDiagnosis> inspect(double t, double sup, const WindowPlan& plan);

  const std::vector<double>& sup_history() const noexcept { return history_; }
  double cap() const noexcept { return cap_; }

 private:
  double cap_;
  DetectorLimits limits_;
  std::vector<double> history_;
};

enum class RunStatus { completed, blowup_suspected, nonconvergence };
std::string to_string(RunStatus s);

struct WindowRecord {
  int index = 0;
  double t0 = 0.0;
  WindowPlan plan;              ///< plan.length is the length actually used
  double scheduled_length = 0;  ///< before shortening onto t_max
  PicardReport report;
};

struct GlobalRun {
  std::vector<WindowRecord> windows;
  double final_time = 0.0;
  RunStatus status = RunStatus::completed;
  RealField final_field;
  std::optional<BlowupDiagnosis> blowup;
  std::vector<double> nonconvergence_diffs;
  std::string message;
};

struct GlobalOptions {
  double rho = 1.0;
  double q = 0.5;
  double t_max = 1.0;
  int nodes = 8;
  double tol = 1e-10;
  int max_iter = 200;
  double t_cap = 0.0;  ///< <= 0 means t_max
  DetectorLimits limits;
  Nonlinearity mode = Nonlinearity::absorbing;
  bool holder = true;  ///< evaluate the Hoelder monitor per window

  /// Called with (window index, time, field) at t = 0 and after every window.
  std::function<void(int, double, const RealField&)> on_junction;
};

/// Chains Picard windows from t = 0 to t_max, each window seeded with the
/// previous window's final field. The last window is shortened to land on
/// t_max exactly. Nonconvergence and blow-up end the run early and are
/// reported through GlobalRun::status rather than thrown.
std::pair<GlobalRun, EnergyReport> global_solve(const RealField& u0,
                                                const GlobalOptions& options);

}  // namespace slheat
