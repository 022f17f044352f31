#pragma once

#include <cstdint>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "slheat/diagnostics.hpp"
#include "slheat/initial_data.hpp"
#include "slheat/picard.hpp"

namespace slheat {

/// Configuration error pinned to a line of the input (0 when the problem is
/// a missing key or a command-line override).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& message);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

struct RunConfig {
  double rho = 0.0;                  // required
  double q = 0.5;
  double L = 2.0 * std::numbers::pi;
  int N = 32;
  double t_max = 0.0;                // required
  int M = 8;
  double tol = 1e-10;
  int max_iter = 200;
  double t_cap = 0.0;                // resolved to t_max when absent
  InitialData initial_data = InitialData::zero();
  std::uint64_t seed = 0;
  Nonlinearity nonlinearity = Nonlinearity::absorbing;
  SupCheck sup_check = SupCheck::monotone;
  double blowup_cap = 1e12;          // relative to sup(u0)
  double t_min_window = 1e-12;
  double balance_tol = 0.0;          // 0: default_balance_threshold(M)
  double fd_dt = 0.0;                // 0: a quarter of the stability limit
  std::string report = "report.csv";
  std::string windows = "windows.csv";
  std::string snapshot_dir;          // empty: no snapshots

  bool operator==(const RunConfig&) const = default;
};

/// Ordered key/value pairs as read from `key = value` text.
struct ConfigEntry {
  std::string key;
  std::string value;
  int line = 0;
};

/// Splits text into entries. '#' starts a comment. Throws ConfigError on a
/// malformed line or a repeated key.
std::vector<ConfigEntry> parse_entries(const std::string& text);

/// Validates entries into a RunConfig. Unknown keys, out-of-range values and
/// missing required keys (rho, t_max) throw ConfigError.
RunConfig build_config(const std::vector<ConfigEntry>& entries);

/// parse_entries followed by build_config.
RunConfig parse_config(const std::string& text);

/// Replaces or appends entries; used for command-line flags that override a
/// config file.
void apply_overrides(std::vector<ConfigEntry>& entries,
                     const std::map<std::string, std::string>& overrides);

/// Every key with its effective value, one `key = value` per line.
std::string format_config(const RunConfig& config);

/// format_config with each line prefixed by "# ".
std::string config_header(const RunConfig& config);

/// Recovers a RunConfig from the "# key = value" lines heading a report.
RunConfig config_from_header(const std::string& text);

/// Recognized keys, in output order.
const std::vector<std::string>& config_keys();

}  // namespace slheat
