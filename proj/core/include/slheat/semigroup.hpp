#pragma once

#include <vector>

#include "slheat/field.hpp"

namespace slheat {

/// Diagonal symbol exp(-|k|^2 t) of the periodic heat semigroup, stored on the
/// half spectrum. Entries lie in (0, 1]; the DC entry is exactly 1.
class SemigroupMultiplier {
 public:
  /// Throws std::invalid_argument for negative t.
  SemigroupMultiplier(const GridSpec& grid, double t);

  const GridSpec& grid() const noexcept { return grid_; }
  double time() const noexcept { return t_; }
  const std::vector<double>& entries() const noexcept { return entries_; }

  /// Multiplies `spectrum` in place.
  void apply(SpectralField& spectrum) const;

 private:
  GridSpec grid_;
  double t_;
  std::vector<double> entries_;
};

/// Convolution with the heat kernel (4 pi t)^{-3/2} exp(-|x|^2/(4t)),
/// applied exactly in Fourier space. t = 0 returns f unchanged.
RealField apply_semigroup(const RealField& f, double t);

/// Real-space convolution of the grid function's trigonometric interpolant
/// with the periodized heat kernel, evaluated back on the grid. No FFT is
/// involved: the kernel is separable, so each axis is a circular convolution
/// with weights obtained by fine-grid quadrature of (periodized Gaussian) x
/// (periodic sinc). Periodic images are summed until the remaining tail
/// weight is below 1e-12. Used as an independent check of apply_semigroup.
/// Throws std::invalid_argument for t <= 0.
RealField gaussian_convolve_direct(const RealField& f, double t);

/// One-dimensional periodized Gaussian (4 pi t)^{-1/2} sum_n exp(-(x+nL)^2/(4t)).
double periodized_gaussian_1d(double box_length, double t, double x);

/// Rectangle-rule integral of the periodized 3-D kernel over one period.
/// The quadrature grid is the field grid refined by the smallest integer
/// factor that resolves the kernel (aliasing error < 1e-15), so the result
/// is 1 to round-off for any t > 0. Throws std::invalid_argument for t <= 0.
double kernel_mass(const GridSpec& grid, double t);


}  // namespace slheat
