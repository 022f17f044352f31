#pragma once

#include "slheat/field.hpp"
#include "slheat/picard.hpp"

namespace slheat::oracle {

/// Forward-Euler configuration. Construction enforces dt <= h^2 / 6, the
/// stability bound of the periodic 7-point Laplacian.
class FDConfig {
 public:
  FDConfig(const GridSpec& grid, double dt);

  const GridSpec& grid() const noexcept { return grid_; }
  double dt() const noexcept { return dt_; }
  double stability_limit() const noexcept;
  /// Number of steps needed to reach t_max; the last one may be shorter.
  int steps_for(double t_max) const;

 private:
  GridSpec grid_;
  double dt_;
};

/// 7-point periodic Laplacian of f.
RealField laplacian_7pt(const RealField& f);

/// Eigenvalue of -laplacian_7pt on the Fourier mode (m1, m2, m3):
/// (4 / h^2) sum_i sin^2(pi m_i / N).
double stencil_eigenvalue(const GridSpec& grid, int m1, int m2, int m3);

/// f + dt (Lap_h f - |f|^rho f). Throws NonFiniteError on overflow.
RealField fd_step(const RealField& f, double dt, double rho,
                  Nonlinearity mode = Nonlinearity::absorbing);

/// Repeated fd_step from u0 to exactly t_max.
RealField fd_solve(const RealField& u0, double t_max, const FDConfig& config,
                   double rho, Nonlinearity mode = Nonlinearity::absorbing);

/// Exact solution of the spatially homogeneous reduction u' = -|u|^rho u:
/// sign(u0) |u0| (1 + rho |u0|^rho t)^(-1/rho).
double homogeneous_exact(double u0, double rho, double t);

}  // namespace slheat::oracle
