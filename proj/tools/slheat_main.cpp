// slheat: command-line driver for the semilinear heat solver.
//
//   slheat solve          --config run.cfg [--rho 2 --t-max 1 ...]
//   slheat verify         --config run.cfg | --check report.csv
//   slheat oracle-compare --config run.cfg [--threshold 5e-3]
//   slheat energy-report  --index snapshots/index.csv --rho 1 --out energy.csv
//
// Every config key has a flag of the same name with '_' written as '-';
// flags override values read from --config.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "slheat/config.hpp"
#include "slheat/run.hpp"

namespace {

struct ConfigFlags {
  std::string file;
  std::map<std::string, std::string> values;
};

void add_config_flags(CLI::App* cmd, ConfigFlags& flags) {
  cmd->add_option("-c,--config", flags.file, "key = value configuration file");
  for (const auto& key : slheat::config_keys()) {
    std::string flag = key;
    for (auto& ch : flag)
      if (ch == '_') ch = '-';
    cmd->add_option_function<std::string>(
        "--" + flag, [&flags, key](const std::string& v) { flags.values[key] = v; },
        "override config key '" + key + "'");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<slheat::ConfigEntry> gather(const ConfigFlags& flags) {
  std::vector<slheat::ConfigEntry> entries;
  if (!flags.file.empty()) entries = slheat::parse_entries(read_file(flags.file));
  slheat::apply_overrides(entries, flags.values);
  return entries;
}

std::string last_index_time(const std::string& index) {
  std::ifstream in(index);
  std::string line, last;
  std::getline(in, line);
  while (std::getline(in, line))
    if (!line.empty()) last = line;
  return last.substr(0, last.find(','));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Global solutions of u' - Laplace(u) + |u|^rho u = 0 by windowed Picard iteration"};
  app.require_subcommand(1);

  ConfigFlags solve_flags, verify_flags, oracle_flags, energy_flags;
  auto* solve = app.add_subcommand("solve", "Solve to t_max and write report CSVs");
  add_config_flags(solve, solve_flags);

  auto* verify = app.add_subcommand("verify", "Solve and check every runtime estimate");
  add_config_flags(verify, verify_flags);
  std::string check_file;
  verify->add_option("--check", check_file, "Verify an existing energy report instead of solving");

  auto* oracle = app.add_subcommand("oracle-compare",
                                    "Compare against the finite-difference reference");
  add_config_flags(oracle, oracle_flags);
  double threshold = 5e-3;
  oracle->add_option("--threshold", threshold, "Maximum allowed sup-norm difference");

  auto* energy = app.add_subcommand("energy-report",
                                    "Recompute energy functionals from solve snapshots");
  add_config_flags(energy, energy_flags);
  std::string index, out = "energy.csv";
  energy->add_option("--index", index, "Snapshot index written by solve")->required();
  energy->add_option("--out", out, "Output CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : slheat::kExitUsage;
  }

  try {
    if (*solve) return slheat::run_solve(slheat::build_config(gather(solve_flags)), std::cout);
    if (*verify) {
      if (!check_file.empty()) return slheat::verify_report_file(check_file, std::cout);
      return slheat::run_verify(slheat::build_config(gather(verify_flags)), std::cout);
    }
    if (*oracle)
      return slheat::run_oracle_compare(slheat::build_config(gather(oracle_flags)), threshold,
                                        std::cout);
    if (*energy) {
      auto entries = gather(energy_flags);
      const bool has_t_max = std::any_of(entries.begin(), entries.end(),
                                         [](const auto& e) { return e.key == "t_max"; });
      if (!has_t_max) entries.push_back({"t_max", last_index_time(index), 0});
      return slheat::run_energy_report(index, slheat::build_config(entries), out, std::cout);
    }
  } catch (const slheat::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return slheat::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return slheat::kExitIo;
  }
  return slheat::kExitUsage;
}
