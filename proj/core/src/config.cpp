#include "slheat/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>

namespace slheat {

ConfigError::ConfigError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                  : message),
      line_(line) {}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "rho",          "q",         "L",          "N",            "t_max",
      "M",            "tol",       "max_iter",   "t_cap",        "initial_data",
      "seed",         "nonlinearity", "sup_check", "blowup_cap", "t_min_window",
      "balance_tol",  "fd_dt",     "report",     "windows",      "snapshot_dir"};
  return keys;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Accept the Unicode minus sign (U+2212) as '-'.
std::string normalize_minus(std::string s) {
  const std::string minus = "\xE2\x88\x92";
  for (auto pos = s.find(minus); pos != std::string::npos; pos = s.find(minus))
    s.replace(pos, minus.size(), "-");
  return s;
}

double as_double(const ConfigEntry& e) {
  const std::string s = normalize_minus(e.value);
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v))
    throw ConfigError(e.line, e.key + ": expected a finite number, got '" + e.value + "'");
  return v;
}

long long as_integer(const ConfigEntry& e) {
  const std::string s = normalize_minus(e.value);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ConfigError(e.line, e.key + ": expected an integer, got '" + e.value + "'");
  return v;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void require(bool ok, const ConfigEntry& e, const std::string& why) {
  if (!ok) throw ConfigError(e.line, e.key + " = " + e.value + " is out of range: " + why);
}

}  // namespace

std::vector<ConfigEntry> parse_entries(const std::string& text) {
  std::vector<ConfigEntry> out;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw ConfigError(line, "expected 'key = value', got '" + body + "'");
    ConfigEntry e{trim(body.substr(0, eq)), trim(body.substr(eq + 1)), line};
    if (e.key.empty()) throw ConfigError(line, "missing key before '='");
    if (!seen.insert(e.key).second) throw ConfigError(line, "duplicate key '" + e.key + "'");
    out.push_back(std::move(e));
  }
  return out;
}

void apply_overrides(std::vector<ConfigEntry>& entries,
                     const std::map<std::string, std::string>& overrides) {
  for (const auto& [key, value] : overrides) {
    auto it = std::find_if(entries.begin(), entries.end(),
                           [&](const ConfigEntry& e) { return e.key == key; });
    if (it != entries.end()) {
      it->value = value;
      it->line = 0;
    } else {
      entries.push_back({key, value, 0});
    }
  }
}

RunConfig build_config(const std::vector<ConfigEntry>& entries) {
  RunConfig c;
  const auto& keys = config_keys();
  bool have_rho = false, have_t_max = false, have_t_cap = false;
  const ConfigEntry* initial_entry = nullptr;

  for (const auto& e : entries) {
    if (std::find(keys.begin(), keys.end(), e.key) == keys.end())
      throw ConfigError(e.line, "unknown key '" + e.key + "'");
    const std::string& k = e.key;
    if (k == "rho") {
      c.rho = as_double(e);
      require(c.rho > 0.0, e, "the equation assumes a constant exponent rho > 0");
      have_rho = true;
    } else if (k == "q") {
      c.q = as_double(e);
      require(c.q > 0.0 && c.q < 1.0, e,
              "the window contraction factor must satisfy 0 < q < 1");
    } else if (k == "L") {
      c.L = as_double(e);
      require(c.L > 0.0, e, "box length must be > 0");
    } else if (k == "N") {
      const auto n = as_integer(e);
      require(n >= 4 && n % 2 == 0 && n <= 1024, e, "N must be even, >= 4 and <= 1024");
      c.N = static_cast<int>(n);
    } else if (k == "t_max") {
      c.t_max = as_double(e);
      require(c.t_max > 0.0, e, "t_max must be > 0");
      have_t_max = true;
    } else if (k == "M") {
      const auto m = as_integer(e);
      require(m >= 2 && m <= 4096, e, "M must lie in [2, 4096]");
      c.M = static_cast<int>(m);
    } else if (k == "tol") {
      c.tol = as_double(e);
      require(c.tol > 0.0, e, "tol must be > 0");
    } else if (k == "max_iter") {
      const auto m = as_integer(e);
      require(m >= 1 && m <= 1000000, e, "max_iter must lie in [1, 1e6]");
      c.max_iter = static_cast<int>(m);
    } else if (k == "t_cap") {
      c.t_cap = as_double(e);
      require(c.t_cap > 0.0, e, "t_cap must be > 0");
      have_t_cap = true;
    } else if (k == "initial_data") {
      try {
        c.initial_data = InitialData::parse(normalize_minus(e.value));
      } catch (const std::invalid_argument& ex) {
        throw ConfigError(e.line, ex.what());
      }
      initial_entry = &e;
    } else if (k == "seed") {
      const auto s = as_integer(e);
      require(s >= 0, e, "seed must be >= 0");
      c.seed = static_cast<std::uint64_t>(s);
    } else if (k == "nonlinearity") {
      if (e.value == "on") c.nonlinearity = Nonlinearity::absorbing;
      else if (e.value == "off") c.nonlinearity = Nonlinearity::disabled;
      else throw ConfigError(e.line, "nonlinearity must be 'on' or 'off'");
    } else if (k == "sup_check") {
      if (e.value == "monotone") c.sup_check = SupCheck::monotone;
      else if (e.value == "bounded") c.sup_check = SupCheck::bounded;
      else throw ConfigError(e.line, "sup_check must be 'monotone' or 'bounded'");
    } else if (k == "blowup_cap") {
      c.blowup_cap = as_double(e);
      require(c.blowup_cap > 0.0, e, "blowup_cap must be > 0");
    } else if (k == "t_min_window") {
      c.t_min_window = as_double(e);
      require(c.t_min_window >= 0.0, e, "t_min_window must be >= 0");
    } else if (k == "balance_tol") {
      c.balance_tol = as_double(e);
      require(c.balance_tol >= 0.0, e, "balance_tol must be >= 0");
    } else if (k == "fd_dt") {
      c.fd_dt = as_double(e);
      require(c.fd_dt >= 0.0, e, "fd_dt must be >= 0");
    } else if (k == "report") {
      c.report = e.value;
    } else if (k == "windows") {
      c.windows = e.value;
    } else if (k == "snapshot_dir") {
      c.snapshot_dir = e.value;
    }
  }

  if (!have_rho) throw ConfigError(0, "missing required key 'rho'");
  if (!have_t_max) throw ConfigError(0, "missing required key 't_max'");
  if (!have_t_cap) c.t_cap = c.t_max;

  if (initial_entry) {
    const auto& d = c.initial_data;
    const ConfigEntry& e = *initial_entry;
    require(std::isfinite(d.amplitude), e, "amplitude must be finite");
    if (d.kind == InitialData::Kind::sine) {
      require(d.axis >= 0 && d.axis <= 2, e, "sine axis must be 0, 1 or 2");
      require(d.mode >= 1 && d.mode < c.N / 2, e, "sine mode must satisfy 1 <= mode < N/2");
    }
    if (d.kind == InitialData::Kind::gaussian_bump) {
      require(d.width > 0.0 && d.width < c.L / 6.0, e,
              "gaussian width must satisfy 0 < width < L/6 so the bump decays inside the box");
    }
  }
  return c;
}

RunConfig parse_config(const std::string& text) { return build_config(parse_entries(text)); }

std::string format_config(const RunConfig& c) {
  std::ostringstream os;
  os << "rho = " << num(c.rho) << '\n'
     << "q = " << num(c.q) << '\n'
     << "L = " << num(c.L) << '\n'
     << "N = " << c.N << '\n'
     << "t_max = " << num(c.t_max) << '\n'
     << "M = " << c.M << '\n'
     << "tol = " << num(c.tol) << '\n'
     << "max_iter = " << c.max_iter << '\n'
     << "t_cap = " << num(c.t_cap) << '\n'
     << "initial_data = " << c.initial_data.to_string() << '\n'
     << "seed = " << c.seed << '\n'
     << "nonlinearity = " << (c.nonlinearity == Nonlinearity::absorbing ? "on" : "off") << '\n'
     << "sup_check = " << (c.sup_check == SupCheck::monotone ? "monotone" : "bounded") << '\n'
     << "blowup_cap = " << num(c.blowup_cap) << '\n'
     << "t_min_window = " << num(c.t_min_window) << '\n'
     << "balance_tol = " << num(c.balance_tol) << '\n'
     << "fd_dt = " << num(c.fd_dt) << '\n'
     << "report = " << c.report << '\n'
     << "windows = " << c.windows << '\n'
     << "snapshot_dir = " << c.snapshot_dir << '\n';
  return os.str();
}

std::string config_header(const RunConfig& c) {
  std::istringstream in(format_config(c));
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) out << "# " << line << '\n';
  return out.str();
}

RunConfig config_from_header(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream body;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("#", 0) != 0) break;
    const std::string rest = trim(line.substr(1));
    if (rest.find('=') != std::string::npos) body << rest << '\n';
  }
  return parse_config(body.str());
}

}  // namespace slheat
