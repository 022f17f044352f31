#include "slheat/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "slheat/errors.hpp"

namespace slheat {

WindowPlan window_size(double f_bound, double rho, double q, double t_cap, int nodes) {
  if (!(f_bound >= 0.0)) throw std::invalid_argument("window_size: F bound must be >= 0");
  if (!(rho > 0.0)) throw std::invalid_argument("window_size: rho must be > 0");
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("window_size: q must lie in (0, 1)");
  if (!(t_cap > 0.0)) throw std::invalid_argument("window_size: T cap must be > 0");
  WindowPlan plan;
  plan.f_bound = f_bound;
  plan.q = q;
  plan.nodes = nodes;
  plan.radius = 2.0 * std::max(f_bound, kRadiusFloor);
  const double r = plan.radius;
  const double self_map = (r - f_bound) / std::pow(r, rho + 1.0);
  const double contraction = q / ((rho + 1.0) * std::pow(r, rho));
  plan.length = std::min({self_map, contraction, t_cap});
  return plan;
}

BlowupDetector::BlowupDetector(double initial_sup, DetectorLimits limits)
    : cap_(limits.cap_factor * initial_sup), limits_(limits) {}

std::optional<BlowupDiagnosis> BlowupDetector::inspect(double t, double sup,
                                                       const WindowPlan& plan) {
  history_.push_back(sup);
  std::optional<BlowupDiagnosis> d;
  if (!(sup <= cap_)) {
    d.emplace();
    d->cause = BlowupDiagnosis::Cause::sup_cap;
    std::ostringstream os;
    os.precision(17);
    os << "sup norm " << sup << " exceeds cap " << cap_ << " at t = " << t;
    d->message = os.str();
  } else if (plan.length < limits_.t_min) {
    d.emplace();
    d->cause = BlowupDiagnosis::Cause::window_floor;
    std::ostringstream os;
    os.precision(17);
    os << "scheduled window " << plan.length << " below floor " << limits_.t_min
       << " at t = " << t;
    d->message = os.str();
  }
  if (d) {
    d->time = t;
    d->sup_history = history_;
    d->last_plan = plan;
  }
  return d;
}

std::string to_string(RunStatus s) {
  switch (s) {
    case RunStatus::completed: return "completed";
    case RunStatus::blowup_suspected: return "blowup_suspected";
    case RunStatus::nonconvergence: return "nonconvergence";
  }
  return "unknown";
}

namespace {

EnergySample sample_of(const RealField& f, double t, int window, double rho,
                       Nonlinearity mode) {
  const auto e = energy_functionals(f, rho);
  EnergySample s;
  s.t = t;
  s.n_u = e.n_u;
  s.n_grad = e.n_grad;
  s.l_rho2 = mode == Nonlinearity::absorbing ? e.l_rho2 : 0.0;
  s.sup = e.sup;
  s.window = window;
  return s;
}

}  // namespace

std::pair<GlobalRun, EnergyReport> global_solve(const RealField& u0,
                                                const GlobalOptions& opt) {
  u0.validate();
  if (!(opt.t_max > 0.0)) throw std::invalid_argument("global_solve: t_max must be > 0");
  const double t_cap = opt.t_cap > 0.0 ? opt.t_cap : opt.t_max;

  GlobalRun run{.windows = {}, .final_time = 0.0, .status = RunStatus::completed,
                .final_field = u0, .blowup = {}, .nonconvergence_diffs = {}, .message = {}};
  EnergyReport energy;
  energy.rho = opt.rho;
  energy.samples.push_back(sample_of(u0, 0.0, 0, opt.rho, opt.mode));
  if (opt.on_junction) opt.on_junction(0, 0.0, u0);

  BlowupDetector detector(sup_norm(u0), opt.limits);
  RealField current = u0;
  double t = 0.0;
  double sup_now = sup_norm(u0);

  for (int w = 0;; ++w) {
    WindowPlan plan = window_size(sup_norm(current), opt.rho, opt.q, t_cap, opt.nodes);
    if (auto d = detector.inspect(t, sup_now, plan)) {
      run.status = RunStatus::blowup_suspected;
      run.message = d->message;
      run.blowup = std::move(d);
      break;
    }

    const WindowPlan scheduled_plan = plan;
    const double scheduled = plan.length;
    const double remaining = opt.t_max - t;
    // Land exactly on t_max; also absorb a sliver that would leave a
    // round-off-sized final window.
    const bool last = plan.length >= remaining * (1.0 - 1e-12);
    if (last) plan.length = remaining;

    WindowSolution sol;
    try {
      sol = solve_window(current, t, plan, opt.rho, opt.tol, opt.max_iter, opt.mode);
    } catch (const NonConvergenceError& e) {
      run.status = RunStatus::nonconvergence;
      run.message = e.what();
      run.nonconvergence_diffs = e.diffs();
      break;
    } catch (const NonFiniteError& e) {
      run.status = RunStatus::nonconvergence;
      run.message = e.what();
      break;
    }

    const int m = sol.state.nodes();
    for (int j = 1; j <= m; ++j) {
      const double tj = j == m ? (last ? opt.t_max : t + plan.length)
                               : sol.state.node_time(j);
      energy.samples.push_back(sample_of(sol.state.trajectory[j], tj, w, opt.rho, opt.mode));
    }
    WindowDiagnostics diag;
    diag.window = w;
    diag.balance_residual = balance_residual(energy.window_slice(w));
    if (opt.holder && opt.mode == Nonlinearity::absorbing)
      diag.holder = holder_monitor(sol.state, opt.rho);
    energy.windows.push_back(diag);

    run.windows.push_back(WindowRecord{w, t, plan, scheduled, sol.report});
    t = last ? opt.t_max : t + plan.length;
    current = sol.state.trajectory.back();
    sup_now = sol.state.window_sup;
    if (opt.on_junction) opt.on_junction(w + 1, t, current);

    if (last) {
      if (auto d = detector.inspect(t, sup_now, scheduled_plan)) {
        run.status = RunStatus::blowup_suspected;
        run.message = d->message;
        run.blowup = std::move(d);
      }
      break;
    }
  }

  run.final_time = t;
  run.final_field = current;
  return {std::move(run), std::move(energy)};
}

}  // namespace slheat
