#include "slheat/report_csv.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace slheat {

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {
constexpr const char* kEnergyColumns =
    "t,N_u,N_grad,L_rho2,sup,window_index,balance_residual,holder_lhs,"
    "holder_factor1,holder_factor2_status";
}

void write_energy_csv(std::ostream& out, const RunConfig& config,
                      const EnergyReport& report) {
  out << config_header(config) << kEnergyColumns << '\n';
  const auto& samples = report.samples;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    out << format_real(s.t) << ',' << format_real(s.n_u) << ','
        << format_real(s.n_grad) << ',' << format_real(s.l_rho2) << ','
        << format_real(s.sup) << ',' << s.window << ',';
    const bool window_end =
        i > 0 && (i + 1 == samples.size() || samples[i + 1].window != s.window);
    const WindowDiagnostics* diag = nullptr;
    if (window_end) {
      for (const auto& d : report.windows)
        if (d.window == s.window) diag = &d;
    }
    if (diag) {
      const bool has_holder = diag->holder.factor2.p > 0.0;
      out << format_real(diag->balance_residual) << ',';
      if (has_holder)
        out << format_real(diag->holder.lhs) << ',' << format_real(diag->holder.factor1)
            << ',' << diag->holder.factor2.status();
      else
        out << ",,";
    } else {
      out << ",,,";
    }
    out << '\n';
  }
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double real_cell(const std::string& s, int line) {
  std::size_t used = 0;
  try {
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw std::runtime_error("report line " + std::to_string(line) + ": bad number '" + s + "'");
}

}  // namespace

EnergyReport read_energy_csv(std::istream& in, std::string* header) {
  EnergyReport report;
  std::string line;
  std::ostringstream head;
  int lineno = 0;
  bool columns_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      head << line << '\n';
      continue;
    }
    if (!columns_seen) {
      if (line != kEnergyColumns)
        throw std::runtime_error("report line " + std::to_string(lineno) +
                                 ": unexpected column header");
      columns_seen = true;
      continue;
    }
    const auto cells = split(line);
    if (cells.size() != 10)
      throw std::runtime_error("report line " + std::to_string(lineno) +
                               ": expected 10 columns");
    EnergySample s;
    s.t = real_cell(cells[0], lineno);
    s.n_u = real_cell(cells[1], lineno);
    s.n_grad = real_cell(cells[2], lineno);
    s.l_rho2 = real_cell(cells[3], lineno);
    s.sup = real_cell(cells[4], lineno);
    s.window = static_cast<int>(real_cell(cells[5], lineno));
    report.samples.push_back(s);
    if (!cells[6].empty()) {
      WindowDiagnostics d;
      d.window = s.window;
      d.balance_residual = real_cell(cells[6], lineno);
      if (!cells[7].empty()) {
        d.holder.lhs = real_cell(cells[7], lineno);
        d.holder.factor1 = real_cell(cells[8], lineno);
        d.holder.factor2.divergent = cells[9] == "DIVERGENT";
      }
      report.windows.push_back(d);
    }
  }
  if (!columns_seen) throw std::runtime_error("report has no column header");
  if (header) *header = head.str();
  return report;
}

void write_windows_csv(std::ostream& out, const RunConfig& config,
                       const GlobalRun& run, const EnergyReport& report) {
  out << config_header(config)
      << "window_index,t0,T,T_scheduled,R,F_bound,q,M,iterations,measured_q,"
         "converged,final_diff,kernel_exponent,kernel_regularized,kernel_growth\n";
  for (const auto& w : run.windows) {
    const auto& p = w.plan;
    const double final_diff =
        w.report.successive_diffs.empty() ? 0.0 : w.report.successive_diffs.back();
    out << w.index << ',' << format_real(w.t0) << ',' << format_real(p.length) << ','
        << format_real(w.scheduled_length) << ',' << format_real(p.radius) << ','
        << format_real(p.f_bound) << ',' << format_real(p.q) << ',' << p.nodes << ','
        << w.report.iterations << ',' << format_real(w.report.measured_q) << ','
        << (w.report.converged ? 1 : 0) << ',' << format_real(final_diff) << ',';
    const KernelPowerReport* k = nullptr;
    for (const auto& d : report.windows)
      if (d.window == w.index && d.holder.factor2.p > 0.0) k = &d.holder.factor2;
    if (k)
      out << format_real(k->exponent) << ',' << format_real(k->regularized) << ','
          << format_real(k->growth);
    else
      out << ",,";
    out << '\n';
  }
}

}  // namespace slheat
