#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace slheat {

/// Uniform periodic grid on the cube [0, L)^3 with N points per axis.
class GridSpec {
 public:
  /// Throws std::invalid_argument unless L > 0 and N is even and >= 4.
  GridSpec(double box_length, int points_per_axis);

  double box_length() const noexcept { return length_; }
  int points() const noexcept { return n_; }
  std::size_t size() const noexcept {
    return static_cast<std::size_t>(n_) * n_ * n_;
  }
  double spacing() const noexcept { return length_ / n_; }
  double volume_element() const noexcept {
    const double h = spacing();
    return h * h * h;
  }
  double volume() const noexcept { return length_ * length_ * length_; }

  /// Row-major (i, j, k) with k fastest.
  std::size_t index(int i, int j, int k) const noexcept {
    return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
  }
  /// Signed mode number: m for m <= N/2, m - N otherwise.
  int fold(int m) const noexcept { return m <= n_ / 2 ? m : m - n_; }
  /// Angular wavenumber 2*pi*fold(m)/L.
  double wavenumber(int m) const noexcept;

  bool operator==(const GridSpec&) const = default;

 private:
  double length_;
  int n_;
};

/// Real samples of a function on a GridSpec. Values are always finite.
class RealField {
 public:
  /// Zero field.
  explicit RealField(const GridSpec& grid);
  /// Throws NonFiniteError if any value is NaN/Inf, std::invalid_argument
  /// on a size mismatch.
  RealField(const GridSpec& grid, std::vector<double> values);

  const GridSpec& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  double operator()(int i, int j, int k) const noexcept {
    return values_[grid_.index(i, j, k)];
  }
  double operator[](std::size_t flat) const noexcept { return values_[flat]; }

  /// Mutable access bypasses the finiteness check; call validate() after
  /// in-place edits if the source is untrusted.
  std::span<double> mutable_values() noexcept { return values_; }
  void validate() const;

  bool operator==(const RealField&) const = default;

 private:
  GridSpec grid_;
  std::vector<double> values_;
};

/// Fourier coefficients of a real field.
///
/// Normalization: coeff(m) = N^-3 * sum_x f(x) exp(-i k(m).x), so a constant
/// field c maps to coefficient c at m = (0,0,0) and Parseval reads
///   sum f^2 * dV = L^3 * sum_m |coeff(m)|^2.
///
/// Only the half spectrum m3 in [0, N/2] is stored; coeff() for m3 > N/2
/// returns the conjugate of the mirrored mode, so conjugate symmetry holds by
/// construction everywhere except inside the self-mirrored planes m3 = 0 and
/// m3 = N/2, which from_spectral checks.
class SpectralField {
 public:
  using Complex = std::complex<double>;

  explicit SpectralField(const GridSpec& grid);

  const GridSpec& grid() const noexcept { return grid_; }
  int half_points() const noexcept { return grid_.points() / 2 + 1; }

  /// Mode indices are taken modulo N, so negative indices are allowed.
  Complex coeff(int m1, int m2, int m3) const noexcept;
  /// Sets coeff(m) and, for modes outside the stored half, its mirror.
  void set_coeff(int m1, int m2, int m3, Complex value) noexcept;

  /// Stored half spectrum, layout [m1][m2][m3] with m3 in [0, N/2].
  std::span<const Complex> half() const noexcept { return coeffs_; }
  std::span<Complex> half() noexcept { return coeffs_; }
  std::size_t half_index(int m1, int m2, int m3) const noexcept {
    const int n = grid_.points();
    return (static_cast<std::size_t>(m1) * n + m2) * half_points() + m3;
  }

  /// |k|^2 for the stored entry at half_index(m1, m2, m3).
  double wavenumber_squared(int m1, int m2, int m3) const noexcept;

  /// Number of times a stored entry appears in the full spectrum (1 or 2).
  int multiplicity(int m3) const noexcept {
    return (m3 == 0 || m3 == grid_.points() / 2) ? 1 : 2;
  }

 private:
  GridSpec grid_;
  std::vector<Complex> coeffs_;
};

SpectralField to_spectral(const RealField& f);

/// Inverse of to_spectral. Throws SymmetryError when the self-mirrored planes
/// are asymmetric beyond 1e-10 relative to the largest coefficient; smaller
/// defects are dropped along with the imaginary residue.
RealField from_spectral(const SpectralField& spectrum);

/// Grid sup norm, max |f|.
double sup_norm(const RealField& f);

/// Rectangle-rule integral sum f * dV, pairwise reduced.
double integrate(const RealField& f);

/// Samples func(x, y, z) at the grid points.
template <class Func>
RealField sample(const GridSpec& grid, Func&& func) {
  const int n = grid.points();
  const double h = grid.spacing();
  std::vector<double> values(grid.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        values[grid.index(i, j, k)] = func(i * h, j * h, k * h);
  return RealField(grid, std::move(values));
}

/// Pointwise a*x + y.
RealField axpy(double a, const RealField& x, const RealField& y);

/// max |a - b| over the grid.
double sup_distance(const RealField& a, const RealField& b);

}  // namespace slheat
