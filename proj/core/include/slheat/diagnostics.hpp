#pragma once

#include <span>
#include <string>
#include <vector>

#include "slheat/field.hpp"
#include "slheat/picard.hpp"

namespace slheat {

/// Energy quantities of one time slice.
///   n_u    = integral of u^2
///   n_grad = integral of |grad u|^2, computed as L^3 sum |k|^2 |u_hat|^2
///   l_rho2 = integral of |u|^(rho+2)
///   sup    = max |u|
struct EnergyFunctionals {
  double n_u = 0.0;
  double n_grad = 0.0;
  double l_rho2 = 0.0;
  double sup = 0.0;
};

EnergyFunctionals energy_functionals(const RealField& f, double rho);

struct EnergySample {
  double t = 0.0;
  double n_u = 0.0;
  double n_grad = 0.0;
  double l_rho2 = 0.0;  ///< zero when the absorption term is disabled
  double sup = 0.0;
  int window = 0;
};

/// Status of the kernel-power factor (integral over [0,T] of integral g^p)
/// in the Hoelder bound. The spatial integral is p^{-3/2} (4 pi tau)^{-a}
/// with a = 3(p-1)/2, which is not integrable at tau -> 0 once a >= 1.
struct KernelPowerReport {
  double p = 0.0;
  double exponent = 0.0;      ///< a
  bool divergent = false;
  double cutoff = 0.0;        ///< delta: lower limit of the regularized integral
  double regularized = 0.0;   ///< integral over [delta, T]
  double growth = 0.0;        ///< regularized(delta / 10) / regularized(delta)

  std::string status() const;  ///< "DIVERGENT" or "FINITE"
};

/// Closed form of the spatial integral of g(., tau)^p over R^3.
double kernel_power_integral(double p, double tau);

/// Regularized time integral of kernel_power_integral over [cutoff, length].
KernelPowerReport kernel_power_factor(double rho, double length, double cutoff);

struct HolderReport {
  double lhs = 0.0;      ///< max_x of trapezoid sum_i w_i S(t_M - t_i) |u_i|^(rho+1)
  double factor1 = 0.0;  ///< (integral over the window of l_rho2)^((rho+1)/(rho+2))
  KernelPowerReport factor2;
};

/// Evaluates the quantities of the Hoelder estimate on a converged window.
HolderReport holder_monitor(const WindowState& window, double rho);

struct WindowDiagnostics {
  int window = 0;
  double balance_residual = 0.0;
  HolderReport holder;
};

struct EnergyReport {
  double rho = 1.0;
  std::vector<EnergySample> samples;
  std::vector<WindowDiagnostics> windows;

  /// Samples spanning window w: its own nodes plus the preceding junction.
  std::span<const EnergySample> window_slice(int w) const;
};

/// Relative defect of the integrated energy balance on a slice,
///   |0.5 N(t_b) + trapezoid(N_grad + L_rho2) - 0.5 N(t_a)| / (0.5 N(t_a)),
/// absolute when N(t_a) = 0. Throws std::invalid_argument for < 2 samples.
double balance_residual(std::span<const EnergySample> slice);

/// Trapezoid integral of member over the samples' times.
double time_integral(std::span<const EnergySample> samples,
                     double EnergySample::*member);

/// A-priori bounds, with relative slack tol:
///   (a) N(t) <= N(0)
///   (b) integral of N_grad <= 0.5 N(0)
///   (c) integral of L_rho2 <= 0.5 N(0)
/// Returns one message per violation; empty on success.
std::vector<std::string> apriori_check(const EnergyReport& report, double n_u0,
                                       double tol = 1e-6);

enum class SupCheck {
  monotone,  ///< sup must be nonincreasing node to node (comparison principle)
  bounded,   ///< only max_t sup <= sup(u0) (1 + 1e-8)
};

struct VerifyThresholds {
  double balance = 1e-6;            ///< per-window balance residual bound
  double energy_monotone = 1e-10;   ///< relative slack for N_u nonincreasing
  double sup_bound = 1e-8;          ///< relative slack on max_t sup <= sup(u0)
  double apriori = 1e-6;
  SupCheck sup_check = SupCheck::monotone;
};

/// Balance threshold max(1e-6, C / M^2). C is the pure-heat calibration
/// constant: the single-mode heat run (L = 2 pi, mode 1, windows of 0.125)
/// has a balance defect of 2.47e-3 / M^2, from the trapezoid rule alone.
double default_balance_threshold(int nodes);
inline constexpr double kBalanceCalibration = 2.5e-3;

/// All runtime checks over a completed report; empty on success.
std::vector<std::string> verify_report(const EnergyReport& report,
                                       const VerifyThresholds& thresholds);

}  // namespace slheat
