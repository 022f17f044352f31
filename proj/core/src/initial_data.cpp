#include "slheat/initial_data.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <regex>
#include <stdexcept>

namespace slheat {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double to_double(const std::string& s) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data() + (s.starts_with('+') ? 1 : 0), end, v);
  if (ec == std::errc::result_out_of_range) throw std::out_of_range(s);
  if (ec != std::errc() || ptr != end) throw std::invalid_argument("bad number '" + s + "'");
  return v;
}

int to_int(const std::string& s) {
  int v = 0;
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec == std::errc::result_out_of_range) throw std::out_of_range(s);
  if (ec != std::errc() || ptr != end) throw std::invalid_argument("bad integer '" + s + "'");
  return v;
}

}  // namespace

std::string InitialData::to_string() const {
  switch (kind) {
    case Kind::zero: return "zero";
    case Kind::constant: return "constant(" + num(amplitude) + ")";
    case Kind::sine:
      return "sine(" + std::to_string(axis) + ", " + std::to_string(mode) + ", " +
             num(amplitude) + ")";
    case Kind::gaussian_bump:
      return "gaussian_bump(" + num(amplitude) + ", " + num(width) + ")";
  }
  return "zero";
}

InitialData InitialData::parse(const std::string& text) {
  static const std::regex call(R"(\s*([a-z_]+)\s*(?:\(([^)]*)\))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, call))
    throw std::invalid_argument("cannot parse initial data '" + text + "'");
  const std::string name = m[1];
  std::vector<std::string> args;
  if (m[2].matched) {
    const std::string inner = m[2];
    static const std::regex sep(R"(\s*,\s*)");
    for (std::sregex_token_iterator it(inner.begin(), inner.end(), sep, -1), end;
         it != end; ++it) {
      std::string a = *it;
      const auto b = a.find_first_not_of(" \t");
      const auto e = a.find_last_not_of(" \t");
      args.push_back(b == std::string::npos ? "" : a.substr(b, e - b + 1));
    }
  }
  auto want = [&](std::size_t n) {
    if (args.size() != n)
      throw std::invalid_argument(name + " takes " + std::to_string(n) + " argument(s)");
  };
  try {
    if (name == "zero") {
      if (m[2].matched && !(args.size() == 1 && args[0].empty())) want(0);
      return zero();
    }
    if (name == "constant") {
      want(1);
      return constant(to_double(args[0]));
    }
    if (name == "sine") {
      want(3);
      return sine(to_int(args[0]), to_int(args[1]), to_double(args[2]));
    }
    if (name == "gaussian_bump") {
      want(2);
      return gaussian_bump(to_double(args[0]), to_double(args[1]));
    }
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("number out of range in '" + text + "'");
  }
  throw std::invalid_argument("unknown initial data '" + name +
                              "' (expected zero, constant, sine or gaussian_bump)");
}

RealField make_initial(const InitialData& d, const GridSpec& grid) {
  const double length = grid.box_length();
  switch (d.kind) {
    case InitialData::Kind::zero: return RealField(grid);
    case InitialData::Kind::constant:
      return sample(grid, [&](double, double, double) { return d.amplitude; });
    case InitialData::Kind::sine: {
      const double k = 2.0 * std::numbers::pi * d.mode / length;
      return sample(grid, [&](double x, double y, double z) {
        const double c = d.axis == 0 ? x : d.axis == 1 ? y : z;
        return d.amplitude * std::sin(k * c);
      });
    }
    case InitialData::Kind::gaussian_bump: {
      const double c = 0.5 * length;
      const double inv_w2 = 1.0 / (d.width * d.width);
      return sample(grid, [&](double x, double y, double z) {
        const double r2 = (x - c) * (x - c) + (y - c) * (y - c) + (z - c) * (z - c);
        return d.amplitude * std::exp(-r2 * inv_w2);
      });
    }
  }
  return RealField(grid);
}

double boundary_shell_max(const RealField& f) {
  const int n = f.grid().points();
  double m = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (i == 0 || j == 0 || k == 0) m = std::max(m, std::abs(f(i, j, k)));
  return m;
}

RealField random_field(const GridSpec& grid, double amplitude, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-amplitude, amplitude);
  std::vector<double> v(grid.size());
  for (auto& x : v) x = dist(rng);
  return RealField(grid, std::move(v));
}

RealField random_smooth_field(const GridSpec& grid, double amplitude, int max_mode,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist;
  SpectralField s(grid);
  for (int a = -max_mode; a <= max_mode; ++a)
    for (int b = -max_mode; b <= max_mode; ++b)
      for (int c = 0; c <= max_mode; ++c) {
        // Modes with c = 0 need their mirror set consistently; skip the
        // redundant half of that plane.
        if (c == 0 && (a < 0 || (a == 0 && b < 0))) continue;
        SpectralField::Complex z(dist(rng), (a == 0 && b == 0 && c == 0) ? 0.0 : dist(rng));
        s.set_coeff(a, b, c, z);
        if (c == 0) s.set_coeff(-a, -b, 0, std::conj(z));
      }
  RealField f = from_spectral(s);
  const double scale = amplitude / std::max(sup_norm(f), 1e-300);
  for (auto& x : f.mutable_values()) x *= scale;
  return f;
}

}  // namespace slheat
