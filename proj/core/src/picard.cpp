#include "slheat/picard.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "slheat/errors.hpp"
#include "slheat/semigroup.hpp"

namespace slheat {

RealField nonlinearity(const RealField& f, double rho) {
  if (!(rho > 0.0))
    throw std::invalid_argument("nonlinearity exponent rho must be > 0");
  std::vector<double> out(f.grid().size());
  const auto in = f.values();
  if (rho == 1.0) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::abs(in[i]) * in[i];
  } else if (rho == 2.0) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = in[i] * in[i] * in[i];
  } else {
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = std::pow(std::abs(in[i]), rho) * in[i];
  }
  return RealField(f.grid(), std::move(out));
}

double window_distance(std::span<const RealField> a, std::span<const RealField> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("window_distance: node count mismatch");
  double d = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) d = std::max(d, sup_distance(a[j], b[j]));
  return d;
}

double window_sup(std::span<const RealField> trajectory) {
  double s = 0.0;
  for (const auto& f : trajectory) s = std::max(s, sup_norm(f));
  return s;
}

double measured_contraction(std::span<const double> diffs) {
  if (diffs.size() < 2) return 0.0;
  const std::size_t count = std::min<std::size_t>(3, diffs.size() - 1);
  double log_sum = 0.0;
  for (std::size_t i = diffs.size() - count; i < diffs.size(); ++i) {
    const double ratio = diffs[i] / diffs[i - 1];
    if (ratio == 0.0) return 0.0;
    log_sum += std::log(ratio);
  }
  return std::exp(log_sum / static_cast<double>(count));
}

DuhamelOperator DuhamelOperator::from_initial(const RealField& u_init, double length,
                                              int nodes, double rho,
                                              Nonlinearity mode) {
  if (nodes < 2) throw std::invalid_argument("a window needs at least 2 intervals");
  if (!(length > 0.0)) throw std::invalid_argument("window length must be > 0");
  std::vector<RealField> free;
  free.reserve(nodes + 1);
  free.push_back(u_init);
  const auto base = to_spectral(u_init);
  for (int j = 1; j <= nodes; ++j) {
    auto s = base;
    SemigroupMultiplier(u_init.grid(), length * j / nodes).apply(s);
    free.push_back(from_spectral(s));
  }
  return DuhamelOperator(std::move(free), length, rho, mode);
}

DuhamelOperator::DuhamelOperator(std::vector<RealField> free_trajectory,
                                 double length, double rho, Nonlinearity mode)
    : free_(std::move(free_trajectory)), length_(length), rho_(rho), mode_(mode) {
  if (free_.size() < 3) throw std::invalid_argument("a window needs at least 2 intervals");
  if (!(length > 0.0)) throw std::invalid_argument("window length must be > 0");
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be > 0");
}

std::vector<RealField> DuhamelOperator::apply(std::span<const RealField> u) const {
  const int m = nodes();
  if (static_cast<int>(u.size()) != m + 1)
    throw std::invalid_argument("trajectory node count does not match operator");
  if (mode_ == Nonlinearity::disabled) return free_;

  const GridSpec& grid = free_.front().grid();
  const double h = length_ / m;
  const SemigroupMultiplier step(grid, h);

  std::vector<RealField> out;
  out.reserve(m + 1);
  out.push_back(free_[0]);

  // acc holds sum_{i<j} c_i S((j-i)h) N_i with c_0 = h/2 and c_i = h, so the
  // trapezoid sum at node j is acc + (h/2) N_j and acc advances by
  // acc <- S(h) (acc + h N_j).
  SpectralField acc = to_spectral(nonlinearity(u[0], rho_));
  for (auto& c : acc.half()) c *= 0.5 * h;

  for (int j = 1; j <= m; ++j) {
    const SpectralField nj = to_spectral(nonlinearity(u[j], rho_));
    step.apply(acc);
    SpectralField quad = acc;
    auto q = quad.half();
    const auto nv = nj.half();
    for (std::size_t i = 0; i < q.size(); ++i) q[i] += (0.5 * h) * nv[i];
    const RealField integral = from_spectral(quad);

    std::vector<double> v(grid.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = free_[j][i] - integral[i];
    try {
      out.emplace_back(grid, std::move(v));
    } catch (const NonFiniteError&) {
      throw NonFiniteError("Duhamel map produced a non-finite value at node " +
                           std::to_string(j) + "; window is mis-sized");
    }

    if (j < m) {
      auto a = acc.half();
      for (std::size_t i = 0; i < a.size(); ++i) a[i] += h * nv[i];
    }
  }
  return out;
}

double DuhamelOperator::residual(std::span<const RealField> u) const {
  const auto qu = apply(u);
  return window_distance(u, qu);
}

WindowSolution solve_window(const RealField& u_init, double t0,
                            const WindowPlan& plan, double rho, double tol,
                            int max_iter, Nonlinearity mode) {
  if (!(tol > 0.0)) throw std::invalid_argument("Picard tolerance must be > 0");
  if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  const auto op = DuhamelOperator::from_initial(u_init, plan.length, plan.nodes, rho, mode);

  std::vector<RealField> u = op.free_trajectory();
  PicardReport report;
  for (int it = 1; it <= max_iter; ++it) {
    auto next = op.apply(u);
    const double diff = window_distance(next, u);
    u = std::move(next);
    report.iterations = it;
    report.successive_diffs.push_back(diff);
    if (diff < tol) {
      report.converged = true;
      break;
    }
  }
  report.measured_q = measured_contraction(report.successive_diffs);
  if (!report.converged) {
    throw NonConvergenceError(
        "Picard iteration did not reach tol " + std::to_string(tol) + " in " +
            std::to_string(max_iter) + " iterations",
        report.successive_diffs);
  }

  WindowState state;
  state.t0 = t0;
  state.length = plan.length;
  state.window_sup = window_sup(u);
  state.trajectory = std::move(u);
  return {std::move(state), std::move(report)};
}

}  // namespace slheat
