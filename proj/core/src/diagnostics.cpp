#include "slheat/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "slheat/reduce.hpp"
#include "slheat/semigroup.hpp"

namespace slheat {

EnergyFunctionals energy_functionals(const RealField& f, double rho) {
  EnergyFunctionals e;
  const double dv = f.grid().volume_element();
  const auto v = f.values();
  e.n_u = pairwise_sum_mapped(v, [](double x) { return x * x; }) * dv;
  e.l_rho2 = pairwise_sum_mapped(v, [rho](double x) {
               return std::pow(std::abs(x), rho + 2.0);
             }) * dv;
  e.sup = sup_norm(f);

  const auto spectrum = to_spectral(f);
  const int n = f.grid().points();
  const int nh = spectrum.half_points();
  std::vector<double> terms(spectrum.half().size());
  std::size_t idx = 0;
  for (int m1 = 0; m1 < n; ++m1)
    for (int m2 = 0; m2 < n; ++m2)
      for (int m3 = 0; m3 < nh; ++m3, ++idx) {
        const double a = std::norm(spectrum.half()[idx]);
        terms[idx] = spectrum.multiplicity(m3) * spectrum.wavenumber_squared(m1, m2, m3) * a;
      }
  e.n_grad = pairwise_sum(terms) * f.grid().volume();
  return e;
}

std::string KernelPowerReport::status() const { return divergent ? "DIVERGENT" : "FINITE"; }

double kernel_power_integral(double p, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("kernel_power_integral: tau must be > 0");
  return std::pow(p, -1.5) * std::pow(4.0 * std::numbers::pi * tau, -1.5 * (p - 1.0));
}

namespace {

// integral over [lo, hi] of p^{-3/2} (4 pi tau)^{-a} d tau
double kernel_power_time_integral(double p, double lo, double hi) {
  const double a = 1.5 * (p - 1.0);
  const double c = std::pow(p, -1.5) * std::pow(4.0 * std::numbers::pi, -a);
  if (std::abs(a - 1.0) < 1e-14) return c * std::log(hi / lo);
  return c * (std::pow(hi, 1.0 - a) - std::pow(lo, 1.0 - a)) / (1.0 - a);
}

}  // namespace

KernelPowerReport kernel_power_factor(double rho, double length, double cutoff) {
  if (!(cutoff > 0.0) || !(cutoff < length))
    throw std::invalid_argument("kernel_power_factor: need 0 < cutoff < length");
  KernelPowerReport r;
  r.p = rho + 2.0;
  r.exponent = 1.5 * (r.p - 1.0);
  r.divergent = r.exponent >= 1.0;
  r.cutoff = cutoff;
  r.regularized = kernel_power_time_integral(r.p, cutoff, length);
  r.growth = kernel_power_time_integral(r.p, cutoff / 10.0, length) / r.regularized;
  return r;
}

HolderReport holder_monitor(const WindowState& window, double rho) {
  const int m = window.nodes();
  const double h = window.length / m;
  HolderReport r;

  const RealField& last = window.trajectory.back();
  RealField acc(last.grid());
  std::vector<double> l_rho2(m + 1);
  for (int i = 0; i <= m; ++i) {
    const auto& u = window.trajectory[i];
    std::vector<double> power(u.grid().size());
    for (std::size_t x = 0; x < power.size(); ++x)
      power[x] = std::pow(std::abs(u[x]), rho + 1.0);
    const RealField propagated =
        apply_semigroup(RealField(u.grid(), std::move(power)), h * (m - i));
    const double w = (i == 0 || i == m) ? 0.5 * h : h;
    acc = axpy(w, propagated, acc);
    l_rho2[i] = energy_functionals(u, rho).l_rho2;
  }
  r.lhs = sup_norm(acc);

  double integral = 0.0;
  for (int i = 0; i < m; ++i) integral += 0.5 * h * (l_rho2[i] + l_rho2[i + 1]);
  r.factor1 = std::pow(integral, (rho + 1.0) / (rho + 2.0));
  r.factor2 = kernel_power_factor(rho, window.length, 1e-3 * window.length);
  return r;
}

std::span<const EnergySample> EnergyReport::window_slice(int w) const {
  auto first = std::find_if(samples.begin(), samples.end(),
                            [w](const EnergySample& s) { return s.window == w; });
  if (first == samples.end()) return {};
  auto last = std::find_if(first, samples.end(),
                           [w](const EnergySample& s) { return s.window != w; });
  if (first != samples.begin()) --first;
  return {&*first, static_cast<std::size_t>(last - first)};
}

double time_integral(std::span<const EnergySample> samples,
                     double EnergySample::*member) {
  double acc = 0.0;
  for (std::size_t i = 1; i < samples.size(); ++i)
    acc += 0.5 * (samples[i].t - samples[i - 1].t) *
           (samples[i].*member + samples[i - 1].*member);
  return acc;
}

double balance_residual(std::span<const EnergySample> slice) {
  if (slice.size() < 2) throw std::invalid_argument("balance_residual needs >= 2 samples");
  const double start = 0.5 * slice.front().n_u;
  const double dissipated = time_integral(slice, &EnergySample::n_grad) +
                            time_integral(slice, &EnergySample::l_rho2);
  const double defect = std::abs(0.5 * slice.back().n_u + dissipated - start);
  return start > 0.0 ? defect / start : defect;
}

namespace {
std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}
}  // namespace

std::vector<std::string> apriori_check(const EnergyReport& report, double n_u0,
                                       double tol) {
  std::vector<std::string> out;
  const double cap = n_u0 * (1.0 + tol);
  for (const auto& s : report.samples) {
    if (s.n_u > cap) {
      out.push_back("N(u) bound: N(u(" + fmt(s.t) + ")) = " + fmt(s.n_u) +
                    " exceeds N(u0) = " + fmt(n_u0));
      break;
    }
  }
  const double half = 0.5 * n_u0 * (1.0 + tol);
  const double grad = time_integral(report.samples, &EnergySample::n_grad);
  if (grad > half)
    out.push_back("gradient bound: integral of N(grad u) = " + fmt(grad) +
                  " exceeds 0.5 N(u0) = " + fmt(0.5 * n_u0));
  const double absorbed = time_integral(report.samples, &EnergySample::l_rho2);
  if (absorbed > half)
    out.push_back("absorption bound: integral of |u|^(rho+2) = " + fmt(absorbed) +
                  " exceeds 0.5 N(u0) = " + fmt(0.5 * n_u0));
  return out;
}

double default_balance_threshold(int nodes) {
  return std::max(1e-6, kBalanceCalibration / (static_cast<double>(nodes) * nodes));
}

std::vector<std::string> verify_report(const EnergyReport& report,
                                       const VerifyThresholds& th) {
  std::vector<std::string> out;
  if (report.samples.empty()) {
    out.push_back("report has no samples");
    return out;
  }
  for (const auto& s : report.samples) {
    if (!(s.n_u >= 0.0) || !(s.n_grad >= 0.0) || !(s.l_rho2 >= 0.0) ||
        !(s.sup >= 0.0) || !std::isfinite(s.n_u + s.n_grad + s.l_rho2 + s.sup)) {
      out.push_back("non-finite or negative functional at t = " + fmt(s.t));
      return out;
    }
  }

  const auto& first = report.samples.front();
  auto apriori = apriori_check(report, first.n_u, th.apriori);
  out.insert(out.end(), apriori.begin(), apriori.end());

  for (std::size_t i = 1; i < report.samples.size(); ++i) {
    const auto& a = report.samples[i - 1];
    const auto& b = report.samples[i];
    if (b.n_u > a.n_u * (1.0 + th.energy_monotone)) {
      out.push_back("energy increased between t = " + fmt(a.t) + " and t = " +
                    fmt(b.t) + ": " + fmt(a.n_u) + " -> " + fmt(b.n_u));
    }
    if (th.sup_check == SupCheck::monotone && b.sup > a.sup * (1.0 + th.sup_bound)) {
      out.push_back("sup norm increased between t = " + fmt(a.t) + " and t = " +
                    fmt(b.t) + ": " + fmt(a.sup) + " -> " + fmt(b.sup));
    }
  }

  double max_sup = 0.0;
  for (const auto& s : report.samples) max_sup = std::max(max_sup, s.sup);
  if (max_sup > first.sup * (1.0 + th.sup_bound))
    out.push_back("uniform bound: max_t sup = " + fmt(max_sup) +
                  " exceeds sup(u0) = " + fmt(first.sup));

  int last_window = report.samples.back().window;
  for (int w = 0; w <= last_window; ++w) {
    const auto slice = report.window_slice(w);
    if (slice.size() < 2) continue;
    const double r = balance_residual(slice);
    if (!(r <= th.balance))
      out.push_back("energy balance defect " + fmt(r) + " in window " +
                    std::to_string(w) + " exceeds " + fmt(th.balance));
  }
  return out;
}

}  // namespace slheat
