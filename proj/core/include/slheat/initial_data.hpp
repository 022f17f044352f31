#pragma once

#include <cstdint>
#include <string>

#include "slheat/field.hpp"

namespace slheat {

/// Initial data generators. All are centered or phased on the grid so their
/// maxima fall on grid points.
struct InitialData {
  enum class Kind { zero, constant, sine, gaussian_bump };
  Kind kind = Kind::zero;
  double amplitude = 0.0;
  int axis = 0;        ///< sine only
  int mode = 1;        ///< sine only
  double width = 1.0;  ///< gaussian_bump only

  static InitialData zero() { return {}; }
  static InitialData constant(double a) { return {Kind::constant, a}; }
  static InitialData sine(int axis, int mode, double a) {
    return {Kind::sine, a, axis, mode};
  }
  static InitialData gaussian_bump(double a, double width) {
    return {Kind::gaussian_bump, a, 0, 1, width};
  }

  /// Config syntax, e.g. "gaussian_bump(5, 0.80000000000000004)".
  std::string to_string() const;
  /// Inverse of to_string. Throws std::invalid_argument.
  static InitialData parse(const std::string& text);

  bool operator==(const InitialData&) const = default;
};

/// zero:          0
/// constant(a):   a
/// sine(d, m, a): a sin(2 pi m x_d / L)
/// gaussian_bump(a, w): a exp(-|x - c|^2 / w^2), c the box center
RealField make_initial(const InitialData& data, const GridSpec& grid);

/// Largest |f| on the faces i = 0, j = 0 or k = 0 of the periodic box.
double boundary_shell_max(const RealField& f);

/// i.i.d. uniform values in [-amplitude, amplitude].
RealField random_field(const GridSpec& grid, double amplitude, std::uint64_t seed);

/// Random trigonometric polynomial with modes |m_i| <= max_mode, scaled so
/// its grid sup norm equals amplitude.
RealField random_smooth_field(const GridSpec& grid, double amplitude, int max_mode,
                              std::uint64_t seed);

}  // namespace slheat
