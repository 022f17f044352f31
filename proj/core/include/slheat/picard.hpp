#pragma once

#include <span>
#include <vector>

#include "slheat/field.hpp"

namespace slheat {

enum class Nonlinearity {
  absorbing,  ///< u' - Laplace(u) + |u|^rho u = 0
  disabled,   ///< pure heat flow; used for linear reference runs
};

/// Ball radius R and window length T chosen so that the Duhamel map sends
/// the ball of radius R into itself with Lipschitz constant <= q:
///   T * R^(rho+1) + f_bound <= R,   T * (rho+1) * R^rho <= q < 1.
struct WindowPlan {
  double radius = 0.0;
  double length = 0.0;
  double q = 0.5;
  int nodes = 8;  ///< M: the window carries M+1 equispaced time nodes
  double f_bound = 0.0;
};

/// Pointwise |f|^rho f. Throws std::invalid_argument unless rho > 0.
RealField nonlinearity(const RealField& f, double rho);

/// Discrete solution on one window [t0, t0 + T] at nodes t0 + j T / M.
struct WindowState {
  double t0 = 0.0;
  double length = 0.0;
  std::vector<RealField> trajectory;  ///< M + 1 fields; [0] is the initial data
  double window_sup = 0.0;            ///< max over nodes of sup_norm

  int nodes() const noexcept { return static_cast<int>(trajectory.size()) - 1; }
  double node_time(int j) const noexcept { return t0 + length * j / nodes(); }
};

struct PicardReport {
  int iterations = 0;
  std::vector<double> successive_diffs;  ///< window-sup distance between iterates
  double measured_q = 0.0;
  bool converged = false;
};

/// Window-sup distance max_j sup|a[j] - b[j]|.
double window_distance(std::span<const RealField> a, std::span<const RealField> b);
double window_sup(std::span<const RealField> trajectory);

/// Geometric mean of the last min(3, n - 1) ratios diffs[i] / diffs[i-1];
/// zero when fewer than two diffs exist.
double measured_contraction(std::span<const double> diffs);

/// The discrete Duhamel map on one window,
///   Q(u)[j] = F[j] - sum_i w_ij S(t_j - t_i) (|u_i|^rho u_i),
/// with F[j] = S(t_j - t0) u(t0) and trapezoid weights w_ij over i = 0..j.
/// S is applied exactly in Fourier space, so the stiff linear part carries no
/// quadrature error and the integrand stays bounded at tau = t_j.
class DuhamelOperator {
 public:
  /// Builds F[j] from the window's initial data.
  static DuhamelOperator from_initial(const RealField& u_init, double length,
                                      int nodes, double rho,
                                      Nonlinearity mode = Nonlinearity::absorbing);

  /// Uses a precomputed free trajectory F (size M + 1, M >= 2).
  DuhamelOperator(std::vector<RealField> free_trajectory, double length,
                  double rho, Nonlinearity mode = Nonlinearity::absorbing);

  int nodes() const noexcept { return static_cast<int>(free_.size()) - 1; }
  double length() const noexcept { return length_; }
  double rho() const noexcept { return rho_; }
  const std::vector<RealField>& free_trajectory() const noexcept { return free_; }

  /// Q(u). Throws NonFiniteError if any node becomes non-finite.
  std::vector<RealField> apply(std::span<const RealField> u) const;

  /// max_j sup|u[j] - Q(u)[j]|; zero exactly at a discrete fixed point.
  double residual(std::span<const RealField> u) const;

 private:
  std::vector<RealField> free_;
  double length_;
  double rho_;
  Nonlinearity mode_;
};

/// Picard iteration u <- Q(u) from u = F until the window-sup distance between
/// iterates drops below tol. Throws NonConvergenceError after max_iter
/// applications, NonFiniteError if the window was mis-sized badly enough for
/// the iterates to overflow.
struct WindowSolution {
  WindowState state;
  PicardReport report;
};
WindowSolution solve_window(const RealField& u_init, double t0,
                            const WindowPlan& plan, double rho, double tol,
                            int max_iter,
                            Nonlinearity mode = Nonlinearity::absorbing);

}  // namespace slheat
