#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "slheat/continuation.hpp"
#include "slheat/diagnostics.hpp"
#include "slheat/initial_data.hpp"

using namespace slheat;

namespace {
const double kPi = std::numbers::pi;
const double kTwoPi = 2.0 * kPi;

std::pair<GlobalRun, EnergyReport> pure_heat(int nodes, double t_cap = 0.0) {
  const GridSpec g(kTwoPi, 16);
  GlobalOptions o;
  o.rho = 1.0;
  o.t_max = 0.5;
  o.nodes = nodes;
  o.t_cap = t_cap;
  o.mode = Nonlinearity::disabled;
  return global_solve(make_initial(InitialData::sine(0, 1, 1.0), g), o);
}

double max_balance(const EnergyReport& r) {
  double m = 0.0;
  for (const auto& w : r.windows) m = std::max(m, w.balance_residual);
  return m;
}

// Spherical-shell Simpson rule for the integral of g(., tau)^p over R^3.
double kernel_power_numeric(double p, double tau) {
  const double rmax = 12.0 * std::sqrt(tau);
  const int n = 4000;
  const double h = rmax / n;
  auto f = [&](double r) {
    const double g = std::pow(4.0 * kPi * tau, -1.5) * std::exp(-r * r / (4.0 * tau));
    return 4.0 * kPi * r * r * std::pow(g, p);
  };
  double s = f(0.0) + f(rmax);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return s * h / 3.0;
}
}  // namespace

TEST(EnergyFunctionals, ConstantOnUnitBox) {
  const GridSpec g(1.0, 8);
  const auto e = energy_functionals(make_initial(InitialData::constant(2.0), g), 1.0);
  EXPECT_NEAR(e.n_u, 4.0, 1e-12);
  EXPECT_NEAR(e.n_grad, 0.0, 1e-12);
  EXPECT_NEAR(e.l_rho2, 8.0, 1e-12);
  EXPECT_EQ(e.sup, 2.0);
}

TEST(EnergyFunctionals, SineOnUnitBox) {
  const GridSpec g(1.0, 16);
  const auto e = energy_functionals(make_initial(InitialData::sine(0, 1, 1.0), g), 1.0);
  EXPECT_NEAR(e.n_u, 0.5, 1e-12);
  EXPECT_NEAR(e.n_grad, 19.7392, 1e-4);
  EXPECT_NEAR(e.n_grad, 2.0 * kPi * kPi, 1e-10);
  EXPECT_NEAR(e.sup, 1.0, 1e-15);
}

TEST(EnergyFunctionals, GradientMatchesFiniteSumOfModes) {
  // sin(x) + 0.5 cos(2y) + 0.25 sin(x + 3z) on [0, 2pi)^3.
  const GridSpec g(kTwoPi, 16);
  const auto f = sample(g, [](double x, double y, double z) {
    return std::sin(x) + 0.5 * std::cos(2 * y) + 0.25 * std::sin(x + 3 * z);
  });
  const double vol = std::pow(kTwoPi, 3);
  const auto e = energy_functionals(f, 1.0);
  EXPECT_NEAR(e.n_u, vol * (0.5 + 0.125 + 0.03125), 1e-10 * vol);
  EXPECT_NEAR(e.n_grad, vol * (0.5 * 1 + 0.125 * 4 + 0.03125 * 10), 1e-10 * vol);
}

TEST(KernelPower, ClosedFormValue) {
  EXPECT_NEAR(kernel_power_integral(2.0, 1.0), 7.94e-3, 5e-6);
  EXPECT_NEAR(kernel_power_integral(1.0, 0.3), 1.0, 1e-15);
  EXPECT_THROW(kernel_power_integral(2.0, 0.0), std::invalid_argument);
}

TEST(KernelPower, ClosedFormAgreesWithQuadrature) {
  for (double p : {1.0, 1.5, 2.0, 3.0, 4.5})
    for (double tau : {0.01, 0.3, 2.0}) {
      const double exact = kernel_power_integral(p, tau);
      EXPECT_NEAR(kernel_power_numeric(p, tau), exact, 1e-9 * exact) << p << " " << tau;
    }
}

TEST(KernelPower, FactorIsDivergentForAllAbsorptionExponents) {
  for (double rho : {0.1, 0.5, 1.0, 2.0}) {
    const auto r = kernel_power_factor(rho, 0.1, 1e-4);
    EXPECT_DOUBLE_EQ(r.p, rho + 2.0);
    EXPECT_DOUBLE_EQ(r.exponent, 1.5 * (rho + 1.0));
    EXPECT_TRUE(r.divergent);
    EXPECT_EQ(r.status(), "DIVERGENT");
    EXPECT_GT(r.regularized, 0.0);
    // Shrinking the cutoff tenfold multiplies the integral by about 10^(a-1).
    EXPECT_GT(r.growth, 1.0);
    EXPECT_NEAR(std::log10(r.growth), r.exponent - 1.0, 0.1);
  }
  EXPECT_THROW(kernel_power_factor(1.0, 0.1, 0.2), std::invalid_argument);
}

TEST(KernelPower, RegularizedIntegralMatchesQuadrature) {
  const auto r = kernel_power_factor(0.5, 0.2, 0.002);
  const int n = 20000;
  // Substitute tau = e^s to integrate the power law accurately.
  const double a = std::log(0.002), b = std::log(0.2), h = (b - a) / n;
  double s = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double tau = std::exp(a + i * h);
    const double w = (i == 0 || i == n) ? 0.5 : 1.0;
    s += w * kernel_power_integral(2.5, tau) * tau;
  }
  EXPECT_NEAR(s * h, r.regularized, 1e-6 * r.regularized);
}

TEST(Holder, ZeroWindowGivesZero) {
  const GridSpec g(kTwoPi, 8);
  WindowState w{0.0, 0.1, std::vector<RealField>(5, RealField(g)), 0.0};
  const auto r = holder_monitor(w, 1.0);
  EXPECT_EQ(r.lhs, 0.0);
  EXPECT_EQ(r.factor1, 0.0);
  EXPECT_TRUE(r.factor2.divergent);
}

TEST(Holder, ConstantWindowMatchesHandComputation) {
  // u = 1 everywhere on every node: lhs = T, factor1 = (T L^3)^((rho+1)/(rho+2)).
  const GridSpec g(1.0, 4);
  const auto one = make_initial(InitialData::constant(1.0), g);
  WindowState w{0.0, 0.2, std::vector<RealField>(9, one), 1.0};
  const auto r = holder_monitor(w, 2.0);
  EXPECT_NEAR(r.lhs, 0.2, 1e-14);
  EXPECT_NEAR(r.factor1, std::pow(0.2, 0.75), 1e-14);
}

TEST(Balance, ExactExamples) {
  std::vector<EnergySample> zero(3);
  zero[1].t = 0.1;
  zero[2].t = 0.2;
  EXPECT_EQ(balance_residual(zero), 0.0);
  EXPECT_THROW(balance_residual(std::span(zero).first(1)), std::invalid_argument);

  // N = 2 e^{-2t}, N_grad = 2 e^{-2t}: the trapezoid defect is explicit.
  std::vector<EnergySample> s(2);
  s[0] = {0.0, 2.0, 2.0, 0.0, 1.0, 0};
  s[1] = {0.1, 2.0 * std::exp(-0.2), 2.0 * std::exp(-0.2), 0.0, 1.0, 0};
  const double defect = std::abs(std::exp(-0.2) + 0.05 * (2.0 + 2.0 * std::exp(-0.2)) - 1.0);
  EXPECT_NEAR(balance_residual(s), defect, 1e-15);
}

TEST(Balance, PureHeatAndHomogeneousStayBelowThreshold) {
  auto [run, energy] = pure_heat(32, 0.05);
  ASSERT_EQ(run.status, RunStatus::completed);
  EXPECT_LE(max_balance(energy), 1e-6);

  const GridSpec g(kTwoPi, 4);
  GlobalOptions o;
  o.rho = 2.0;
  o.t_max = 1.0;
  o.nodes = 32;
  auto [hrun, henergy] = global_solve(make_initial(InitialData::constant(1.0), g), o);
  ASSERT_EQ(hrun.status, RunStatus::completed);
  EXPECT_LE(max_balance(henergy), 1e-6);
}

TEST(Balance, CalibrationConstantReproduces) {
  // Pure heat on mode 1 with windows of 0.125: the defect scales as C / M^2.
  for (int m : {8, 16, 32}) {
    auto [run, energy] = pure_heat(m);
    ASSERT_EQ(run.status, RunStatus::completed);
    ASSERT_DOUBLE_EQ(run.windows.front().plan.length, 0.125);
    const double c = max_balance(energy) * m * m;
    EXPECT_NEAR(c, 2.47e-3, 0.05 * 2.47e-3) << "M=" << m;
    EXPECT_LE(max_balance(energy), default_balance_threshold(m));
  }
  EXPECT_DOUBLE_EQ(default_balance_threshold(8), kBalanceCalibration / 64);
  EXPECT_DOUBLE_EQ(default_balance_threshold(1000), 1e-6);
}

TEST(Apriori, CleanRunPassesAndTamperedFails) {
  const GridSpec g(kTwoPi, 8);
  const auto u0 = make_initial(InitialData::gaussian_bump(3.0, 0.8), g);
  GlobalOptions o;
  o.rho = 1.0;
  o.t_max = 0.3;
  auto [run, energy] = global_solve(u0, o);
  const double n0 = energy.samples.front().n_u;
  EXPECT_TRUE(apriori_check(energy, n0).empty());

  auto grown = energy;
  grown.samples[3].n_u = n0 * 1.01;
  const auto v = apriori_check(grown, n0);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NE(v[0].find("N(u) bound"), std::string::npos);

  auto hot = energy;
  for (auto& s : hot.samples) s.n_grad += n0;
  EXPECT_EQ(apriori_check(hot, n0).size(), 1u);
}

TEST(Verify, FlagsEachKindOfViolation) {
  const GridSpec g(kTwoPi, 8);
  GlobalOptions o;
  o.rho = 1.0;
  o.t_max = 0.2;
  o.nodes = 16;
  o.t_cap = 0.01;
  auto [run, energy] = global_solve(make_initial(InitialData::gaussian_bump(2.0, 0.8), g), o);
  VerifyThresholds th;
  th.balance = default_balance_threshold(16);
  const auto clean = verify_report(energy, th);
  ASSERT_TRUE(clean.empty()) << clean.front();

  auto rising = energy;
  rising.samples[5].n_u = rising.samples[4].n_u * 1.001;
  EXPECT_FALSE(verify_report(rising, th).empty());

  auto hot = energy;
  hot.samples[7].sup = hot.samples[6].sup * 1.01;
  EXPECT_FALSE(verify_report(hot, th).empty());
  th.sup_check = SupCheck::bounded;
  EXPECT_TRUE(verify_report(hot, th).empty());

  // The balance is recomputed from the samples, so a stored residual cannot
  // mask a defect.
  auto skewed = energy;
  skewed.windows[2].balance_residual = 0.0;
  const auto slice = skewed.window_slice(2);
  const auto mid = static_cast<std::size_t>(&slice[slice.size() / 2] - skewed.samples.data());
  skewed.samples[mid].n_grad *= 1.1;
  const auto v = verify_report(skewed, th);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NE(v[0].find("window 2"), std::string::npos);
}
