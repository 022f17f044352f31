#include "slheat/oracle_fd.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "slheat/errors.hpp"

namespace slheat::oracle {

FDConfig::FDConfig(const GridSpec& grid, double dt) : grid_(grid), dt_(dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("FD time step must be > 0");
  if (dt > stability_limit())
    throw std::invalid_argument("FD time step " + std::to_string(dt) +
                                " exceeds stability limit h^2/6 = " +
                                std::to_string(stability_limit()));
}

double FDConfig::stability_limit() const noexcept {
  const double h = grid_.spacing();
  return h * h / 6.0;
}

int FDConfig::steps_for(double t_max) const {
  return static_cast<int>(std::ceil(t_max / dt_ * (1.0 - 1e-12)));
}

RealField laplacian_7pt(const RealField& f) {
  const GridSpec& g = f.grid();
  const int n = g.points();
  const double inv_h2 = 1.0 / (g.spacing() * g.spacing());
  std::vector<double> out(g.size());
  for (int i = 0; i < n; ++i) {
    const int ip = (i + 1) % n, im = (i + n - 1) % n;
    for (int j = 0; j < n; ++j) {
      const int jp = (j + 1) % n, jm = (j + n - 1) % n;
      for (int k = 0; k < n; ++k) {
        const int kp = (k + 1) % n, km = (k + n - 1) % n;
        const double c = f(i, j, k);
        out[g.index(i, j, k)] =
            (f(ip, j, k) + f(im, j, k) + f(i, jp, k) + f(i, jm, k) +
             f(i, j, kp) + f(i, j, km) - 6.0 * c) * inv_h2;
      }
    }
  }
  return RealField(g, std::move(out));
}

double stencil_eigenvalue(const GridSpec& grid, int m1, int m2, int m3) {
  const double h = grid.spacing();
  const int n = grid.points();
  double acc = 0.0;
  for (int m : {m1, m2, m3}) {
    const double s = std::sin(std::numbers::pi * m / n);
    acc += s * s;
  }
  return 4.0 / (h * h) * acc;
}

RealField fd_step(const RealField& f, double dt, double rho, Nonlinearity mode) {
  const RealField lap = laplacian_7pt(f);
  std::vector<double> out(f.grid().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double u = f[i];
    const double absorb =
        mode == Nonlinearity::absorbing ? std::pow(std::abs(u), rho) * u : 0.0;
    out[i] = u + dt * (lap[i] - absorb);
  }
  try {
    return RealField(f.grid(), std::move(out));
  } catch (const NonFiniteError&) {
    throw NonFiniteError("FD step overflowed; stability bound violated upstream");
  }
}

RealField fd_solve(const RealField& u0, double t_max, const FDConfig& config,
                   double rho, Nonlinearity mode) {
  if (!(t_max >= 0.0)) throw std::invalid_argument("fd_solve: t_max must be >= 0");
  if (!(u0.grid() == config.grid()))
    throw std::invalid_argument("fd_solve: grid mismatch");
  const int steps = config.steps_for(t_max);
  RealField u = u0;
  for (int s = 0; s < steps; ++s) {
    const double dt = s + 1 < steps ? config.dt() : t_max - config.dt() * (steps - 1);
    u = fd_step(u, dt, rho, mode);
  }
  return u;
}

double homogeneous_exact(double u0, double rho, double t) {
  if (!(rho > 0.0)) throw std::invalid_argument("homogeneous_exact: rho must be > 0");
  const double a = std::abs(u0);
  if (a == 0.0) return 0.0;
  return std::copysign(a * std::pow(1.0 + rho * std::pow(a, rho) * t, -1.0 / rho), u0);
}

}  // namespace slheat::oracle
