#include <gtest/gtest.h>

#include <sstream>

#include "slheat/config.hpp"
#include "slheat/report_csv.hpp"

using namespace slheat;

namespace {
int error_line(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.line();
  }
  return -1;
}
}  // namespace

TEST(Config, DefaultsFillUnsetKeys) {
  const auto c = parse_config("rho = 1.5\nt_max = 2\n");
  EXPECT_EQ(c.rho, 1.5);
  EXPECT_EQ(c.t_max, 2.0);
  EXPECT_EQ(c.q, 0.5);
  EXPECT_EQ(c.N, 32);
  EXPECT_EQ(c.M, 8);
  EXPECT_EQ(c.tol, 1e-10);
  EXPECT_EQ(c.max_iter, 200);
  EXPECT_EQ(c.t_cap, 2.0);
  EXPECT_EQ(c.initial_data, InitialData::zero());
  EXPECT_EQ(c.nonlinearity, Nonlinearity::absorbing);
  EXPECT_EQ(c.sup_check, SupCheck::monotone);
  EXPECT_EQ(c.balance_tol, 0.0);
  EXPECT_EQ(c.report, "report.csv");
}

TEST(Config, CommentsBlankLinesAndUnicodeMinus) {
  const auto c = parse_config(
      "# run\n\nrho = 2   # exponent\nt_max = 1\ninitial_data = sine(1, 2, \xE2\x88\x92" "0.5)\n");
  EXPECT_EQ(c.initial_data, InitialData::sine(1, 2, -0.5));
}

TEST(Config, RangeErrorsCarryTheLine) {
  EXPECT_EQ(error_line("t_max = 1\nrho = -1\n"), 2);
  EXPECT_EQ(error_line("rho = 1\nt_max = 1\nq = 1.0\n"), 3);
  EXPECT_EQ(error_line("rho = 1\nt_max = 1\nq = 0\n"), 3);
  EXPECT_EQ(error_line("rho = 1\nt_max = 1\nN = 7\n"), 3);
  EXPECT_EQ(error_line("rho = 1\nt_max = 0\n"), 2);
  EXPECT_EQ(error_line("rho = 1\nt_max = 1\nM = 1\n"), 3);
  EXPECT_EQ(error_line("rho = 1\nt_max = 1\nbalance_tol = -1\n"), 3);
  EXPECT_EQ(error_line("rho = abc\nt_max = 1\n"), 1);
  EXPECT_EQ(error_line("rho = 1\nt_max = 1\nN = 16.5\n"), 3);
  try {
    parse_config("rho = 1\nt_max = 1\nq = 2\n");
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("0 < q < 1"), std::string::npos);
  }
}

TEST(Config, InitialDataRangeChecks) {
  // Gaussian width must leave the bump well inside the box, sine mode below N/2.
  EXPECT_EQ(error_line("rho = 1\nt_max = 1\ninitial_data = gaussian_bump(1, 2)\n"), 3);
  EXPECT_NO_THROW(parse_config("rho = 1\nt_max = 1\ninitial_data = gaussian_bump(1, 0.8)\n"));
  EXPECT_EQ(error_line("rho = 1\nt_max = 1\nN = 8\ninitial_data = sine(0, 4, 1)\n"), 4);
  EXPECT_EQ(error_line("rho = 1\nt_max = 1\ninitial_data = sine(3, 1, 1)\n"), 3);
  EXPECT_EQ(error_line("rho = 1\nt_max = 1\ninitial_data = triangle(1)\n"), 3);
}

TEST(Config, StructuralErrors) {
  EXPECT_EQ(error_line("rho = 1\nrho = 2\nt_max = 1\n"), 2);
  EXPECT_EQ(error_line("rho = 1\nt_max = 1\nspeed = 3\n"), 3);
  EXPECT_EQ(error_line("rho = 1\nt_max 1\n"), 2);
  EXPECT_EQ(error_line("t_max = 1\n"), 0);
  EXPECT_EQ(error_line("rho = 1\n"), 0);
}

TEST(Config, OverridesReplaceAndAppend) {
  auto entries = parse_entries("rho = 1\nt_max = 1\nN = 16\n");
  apply_overrides(entries, {{"N", "8"}, {"M", "32"}});
  const auto c = build_config(entries);
  EXPECT_EQ(c.N, 8);
  EXPECT_EQ(c.M, 32);
  apply_overrides(entries, {{"q", "3"}});
  try {
    build_config(entries);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), 0);
  }
}

TEST(Config, HeaderRoundTripIsExact) {
  auto c = parse_config(
      "rho = 0.3\nt_max = 0.7\nq = 0.37\nL = 3.3\nN = 12\nM = 5\nt_cap = 0.011\n"
      "initial_data = gaussian_bump(0.1, 0.3)\nnonlinearity = off\nsup_check = bounded\n"
      "balance_tol = 2e-5\nfd_dt = 1e-4\nsnapshot_dir = snaps\n");
  const auto back = config_from_header(config_header(c));
  EXPECT_EQ(back, c);
  EXPECT_EQ(parse_config(format_config(c)), c);
  for (const auto& key : config_keys())
    EXPECT_NE(format_config(c).find(key + " = "), std::string::npos) << key;
}

TEST(InitialDataText, ParseAndPrint) {
  EXPECT_EQ(InitialData::parse("zero"), InitialData::zero());
  EXPECT_EQ(InitialData::parse("constant(1.25)"), InitialData::constant(1.25));
  EXPECT_EQ(InitialData::parse(" sine( 2 , 3 , -1 ) "), InitialData::sine(2, 3, -1.0));
  EXPECT_EQ(InitialData::parse("gaussian_bump(5,0.8)"), InitialData::gaussian_bump(5, 0.8));
  for (const auto& d : {InitialData::constant(0.1), InitialData::sine(1, 2, 1.0 / 3.0),
                        InitialData::gaussian_bump(1e-7, 0.3)})
    EXPECT_EQ(InitialData::parse(d.to_string()), d);
  EXPECT_THROW(InitialData::parse("constant()"), std::invalid_argument);
  EXPECT_THROW(InitialData::parse("sine(1.5, 2, 1)"), std::invalid_argument);
}

TEST(EnergyCsv, WriteThenReadRecoversSamples) {
  const auto c = parse_config("rho = 1\nt_max = 1\n");
  EnergyReport r;
  r.rho = 1.0;
  r.samples = {{0.0, 1.0, 2.0, 3.0, 4.0, 0},
               {0.5, 0.9, 1.9, 2.9, 3.9, 0},
               {1.0 / 3.0 + 0.5, 0.8, 1.8, 2.8, 3.8, 1}};
  r.windows = {{0, 1.25e-7, {}}, {1, 2.5e-7, {}}};
  std::stringstream s;
  write_energy_csv(s, c, r);
  const std::string text = s.str();
  EXPECT_NE(text.find("\nt,N_u,N_grad,L_rho2,sup,window_index,balance_residual,holder_lhs,"
                      "holder_factor1,holder_factor2_status\n"),
            std::string::npos);
  std::string header;
  const auto back = read_energy_csv(s, &header);
  EXPECT_EQ(config_from_header(header), c);
  ASSERT_EQ(back.samples.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(back.samples[i].t, r.samples[i].t);
    EXPECT_EQ(back.samples[i].n_u, r.samples[i].n_u);
    EXPECT_EQ(back.samples[i].n_grad, r.samples[i].n_grad);
    EXPECT_EQ(back.samples[i].l_rho2, r.samples[i].l_rho2);
    EXPECT_EQ(back.samples[i].sup, r.samples[i].sup);
    EXPECT_EQ(back.samples[i].window, r.samples[i].window);
  }
  ASSERT_EQ(back.windows.size(), 2u);
  EXPECT_EQ(back.windows[1].balance_residual, 2.5e-7);
}

TEST(EnergyCsv, FormatRealRoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, -2.5e17, 0.0})
    EXPECT_EQ(std::stod(format_real(v)), v);
}

TEST(InitialDataText, ErrorsNameTheBadToken) {
  try {
    InitialData::parse("constant(abc)");
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("abc"), std::string::npos);
  }
}
