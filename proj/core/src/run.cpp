#include "slheat/run.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "slheat/errors.hpp"
#include "slheat/oracle_fd.hpp"
#include "slheat/report_csv.hpp"
#include "slheat/snapshot.hpp"

namespace slheat {

GridSpec grid_from(const RunConfig& c) { return GridSpec(c.L, c.N); }

GlobalOptions options_from(const RunConfig& c) {
  GlobalOptions o;
  o.rho = c.rho;
  o.q = c.q;
  o.t_max = c.t_max;
  o.nodes = c.M;
  o.tol = c.tol;
  o.max_iter = c.max_iter;
  o.t_cap = c.t_cap;
  o.limits.cap_factor = c.blowup_cap;
  o.limits.t_min = c.t_min_window;
  o.mode = c.nonlinearity;
  return o;
}

namespace {

void warn_on_boundary(const RealField& u0, std::ostream& log) {
  const double sup = sup_norm(u0);
  const double shell = boundary_shell_max(u0);
  if (sup > 0.0 && shell > 1e-6 * sup) {
    log << "warning: |u0| on the box boundary is " << format_real(shell)
        << " (> 1e-6 sup|u0|); the periodic box is a poor stand-in for R^3 here\n";
  }
}

std::filesystem::path snapshot_name(int window) {
  std::ostringstream os;
  os << "u_" << window << ".slhf";
  return os.str();
}

}  // namespace

SolveResult solve_config(const RunConfig& c, std::ostream& log) {
  const GridSpec grid = grid_from(c);
  const RealField u0 = make_initial(c.initial_data, grid);
  if (c.initial_data.kind == InitialData::Kind::gaussian_bump) warn_on_boundary(u0, log);

  GlobalOptions opt = options_from(c);
  std::ofstream index;
  if (!c.snapshot_dir.empty()) {
    const std::filesystem::path dir(c.snapshot_dir);
    std::filesystem::create_directories(dir);
    index.open(dir / "index.csv");
    if (!index) throw std::runtime_error("cannot write " + (dir / "index.csv").string());
    index << "t,window,file\n";
    opt.on_junction = [&index, dir](int w, double t, const RealField& f) {
      const auto name = snapshot_name(w);
      write_snapshot(dir / name, f);
      index << format_real(t) << ',' << w << ',' << name.string() << '\n';
    };
  }
  auto [run, energy] = global_solve(u0, opt);
  return {std::move(run), std::move(energy)};
}

int exit_code_for(RunStatus s) {
  switch (s) {
    case RunStatus::completed: return kExitOk;
    case RunStatus::blowup_suspected: return kExitBlowup;
    case RunStatus::nonconvergence: return kExitNonconvergence;
  }
  return kExitNonconvergence;
}

VerifyThresholds thresholds_for(const RunConfig& c) {
  VerifyThresholds th;
  th.balance = c.balance_tol > 0.0 ? c.balance_tol : default_balance_threshold(c.M);
  th.sup_check = c.sup_check;
  return th;
}

namespace {

void write_outputs(const RunConfig& c, const SolveResult& r) {
  if (!c.report.empty()) {
    std::ofstream out(c.report);
    if (!out) throw std::runtime_error("cannot write " + c.report);
    write_energy_csv(out, c, r.energy);
    if (!out) throw std::runtime_error("write failed: " + c.report);
  }
  if (!c.windows.empty()) {
    std::ofstream out(c.windows);
    if (!out) throw std::runtime_error("cannot write " + c.windows);
    write_windows_csv(out, c, r.run, r.energy);
    if (!out) throw std::runtime_error("write failed: " + c.windows);
  }
}

double max_balance(const EnergyReport& e) {
  double m = 0.0;
  for (const auto& w : e.windows) m = std::max(m, w.balance_residual);
  return m;
}

void summarize(const SolveResult& r, std::ostream& log) {
  log << to_string(r.run.status) << ": t = " << format_real(r.run.final_time)
      << ", sup = " << format_real(sup_norm(r.run.final_field))
      << ", max balance residual = " << format_real(max_balance(r.energy))
      << ", windows = " << r.run.windows.size() << '\n';
  if (!r.run.message.empty()) log << "  " << r.run.message << '\n';
}

}  // namespace

int run_solve(const RunConfig& c, std::ostream& log) {
  std::optional<SolveResult> r;
  try {
    r = solve_config(c, log);
    write_outputs(c, *r);
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    if (r) summarize(*r, log);
    return kExitIo;
  }
  summarize(*r, log);
  return exit_code_for(r->run.status);
}

namespace {
int report_violations(const std::vector<std::string>& violations, std::ostream& log) {
  if (violations.empty()) {
    log << "verify: all checks passed\n";
    return kExitOk;
  }
  log << "verify: " << violations.size() << " violation(s)\n";
  for (const auto& v : violations) log << "  - " << v << '\n';
  return kExitViolations;
}
}  // namespace

int run_verify(const RunConfig& c, std::ostream& log) {
  std::optional<SolveResult> r;
  try {
    r = solve_config(c, log);
    write_outputs(c, *r);
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitIo;
  }
  summarize(*r, log);
  if (r->run.status != RunStatus::completed) return exit_code_for(r->run.status);
  return report_violations(verify_report(r->energy, thresholds_for(c)), log);
}

int verify_report_file(const std::filesystem::path& path, std::ostream& log) {
  std::ifstream in(path);
  if (!in) {
    log << "error: cannot open " << path.string() << '\n';
    return kExitIo;
  }
  std::string header;
  EnergyReport report;
  RunConfig c;
  try {
    report = read_energy_csv(in, &header);
    c = config_from_header(header);
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitIo;
  }
  report.rho = c.rho;
  return report_violations(verify_report(report, thresholds_for(c)), log);
}

int run_oracle_compare(const RunConfig& c, double threshold, std::ostream& log) {
  const SolveResult r = solve_config(c, log);
  if (r.run.status != RunStatus::completed) {
    summarize(r, log);
    return exit_code_for(r.run.status);
  }
  const GridSpec grid = grid_from(c);
  const RealField u0 = make_initial(c.initial_data, grid);
  const oracle::FDConfig fd(grid, c.fd_dt > 0.0 ? c.fd_dt : 0.25 * grid.spacing() *
                                                                grid.spacing() / 6.0);
  const RealField reference = oracle::fd_solve(u0, c.t_max, fd, c.rho, c.nonlinearity);
  const double diff = sup_distance(r.run.final_field, reference);
  log << "oracle-compare: t = " << format_real(c.t_max) << ", fd dt = " << format_real(fd.dt())
      << ", sup |spectral - fd| = " << format_real(diff) << " (threshold "
      << format_real(threshold) << ")\n";
  return diff <= threshold ? kExitOk : kExitViolations;
}

int run_energy_report(const std::filesystem::path& index, const RunConfig& c,
                      const std::filesystem::path& out_path, std::ostream& log) {
  std::ifstream in(index);
  if (!in) {
    log << "error: cannot open " << index.string() << '\n';
    return kExitIo;
  }
  EnergyReport report;
  report.rho = c.rho;
  std::string line;
  std::getline(in, line);  // column header
  try {
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::istringstream row(line);
      std::string t, w, file;
      std::getline(row, t, ',');
      std::getline(row, w, ',');
      std::getline(row, file);
      const RealField f = read_snapshot(index.parent_path() / file);
      const auto e = energy_functionals(f, c.rho);
      EnergySample s{std::stod(t), e.n_u, e.n_grad,
                     c.nonlinearity == Nonlinearity::absorbing ? e.l_rho2 : 0.0, e.sup,
                     std::stoi(w)};
      report.samples.push_back(s);
    }
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitIo;
  }
  std::ofstream out(out_path);
  if (!out) {
    log << "error: cannot write " << out_path.string() << '\n';
    return kExitIo;
  }
  write_energy_csv(out, c, report);
  log << "energy-report: " << report.samples.size() << " snapshot(s) -> "
      << out_path.string() << '\n';
  return out ? kExitOk : kExitIo;
}

}  // namespace slheat
