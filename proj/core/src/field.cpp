#include "slheat/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fft.hpp"
#include "slheat/errors.hpp"
#include "slheat/reduce.hpp"

namespace slheat {

GridSpec::GridSpec(double box_length, int points_per_axis)
    : length_(box_length), n_(points_per_axis) {
  if (!(box_length > 0.0) || !std::isfinite(box_length))
    throw std::invalid_argument("box length must be positive and finite");
  if (points_per_axis < 4 || points_per_axis % 2 != 0)
    throw std::invalid_argument("points per axis must be even and >= 4, got " +
                                std::to_string(points_per_axis));
}

double GridSpec::wavenumber(int m) const noexcept {
  return 2.0 * std::numbers::pi * fold(m) / length_;
}

RealField::RealField(const GridSpec& grid)
    : grid_(grid), values_(grid.size(), 0.0) {}

RealField::RealField(const GridSpec& grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size())
    throw std::invalid_argument("field size does not match grid");
  validate();
}

void RealField::validate() const {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]))
      throw NonFiniteError("non-finite field value at flat index " +
                           std::to_string(i));
  }
}

SpectralField::SpectralField(const GridSpec& grid)
    : grid_(grid),
      coeffs_(static_cast<std::size_t>(grid.points()) * grid.points() *
              (grid.points() / 2 + 1)) {}

namespace {
int wrap(int m, int n) {
  const int r = m % n;
  return r < 0 ? r + n : r;
}
}  // namespace

SpectralField::Complex SpectralField::coeff(int m1, int m2, int m3) const noexcept {
  const int n = grid_.points();
  m1 = wrap(m1, n);
  m2 = wrap(m2, n);
  m3 = wrap(m3, n);
  if (m3 <= n / 2) return coeffs_[half_index(m1, m2, m3)];
  return std::conj(coeffs_[half_index(wrap(-m1, n), wrap(-m2, n), n - m3)]);
}

void SpectralField::set_coeff(int m1, int m2, int m3, Complex value) noexcept {
  const int n = grid_.points();
  m1 = wrap(m1, n);
  m2 = wrap(m2, n);
  m3 = wrap(m3, n);
  if (m3 <= n / 2)
    coeffs_[half_index(m1, m2, m3)] = value;
  else
    coeffs_[half_index(wrap(-m1, n), wrap(-m2, n), n - m3)] = std::conj(value);
}

double SpectralField::wavenumber_squared(int m1, int m2, int m3) const noexcept {
  const double k1 = grid_.wavenumber(m1);
  const double k2 = grid_.wavenumber(m2);
  const double k3 = grid_.wavenumber(m3);
  return k1 * k1 + k2 * k2 + k3 * k3;
}

SpectralField to_spectral(const RealField& f) {
  f.validate();
  SpectralField out(f.grid());
  const int n = f.grid().points();
  detail::forward_r2c(n, f.values(), out.half());
  const double scale = 1.0 / static_cast<double>(f.grid().size());
  for (auto& c : out.half()) c *= scale;
  return out;
}

namespace {

// Largest mismatch between coeff(m) and conj(coeff(-m)) inside the planes
// m3 = 0 and m3 = N/2, where both partners are stored.
double plane_asymmetry(const SpectralField& s) {
  const int n = s.grid().points();
  double worst = 0.0;
  for (int m3 : {0, n / 2}) {
    for (int m1 = 0; m1 < n; ++m1) {
      for (int m2 = 0; m2 < n; ++m2) {
        const auto a = s.half()[s.half_index(m1, m2, m3)];
        const auto b = s.half()[s.half_index(wrap(-m1, n), wrap(-m2, n), m3)];
        worst = std::max(worst, std::abs(a - std::conj(b)));
      }
    }
  }
  return worst;
}

}  // namespace

RealField from_spectral(const SpectralField& spectrum) {
  double largest = 0.0;
  for (const auto& c : spectrum.half()) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw NonFiniteError("non-finite spectral coefficient");
    largest = std::max(largest, std::abs(c));
  }
  const double defect = plane_asymmetry(spectrum);
  if (defect > 1e-10 * largest)
    throw SymmetryError("spectrum violates conjugate symmetry: defect " +
                        std::to_string(defect) + " vs scale " +
                        std::to_string(largest));

  const GridSpec& grid = spectrum.grid();
  std::vector<double> values(grid.size());
  detail::inverse_c2r(grid.points(), spectrum.half(), values);
  return RealField(grid, std::move(values));
}

double sup_norm(const RealField& f) {
  double m = 0.0;
  for (double v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

double integrate(const RealField& f) {
  return pairwise_sum(f.values()) * f.grid().volume_element();
}

RealField axpy(double a, const RealField& x, const RealField& y) {
  if (!(x.grid() == y.grid()))
    throw std::invalid_argument("axpy: grid mismatch");
  std::vector<double> out(x.grid().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a * x[i] + y[i];
  return RealField(x.grid(), std::move(out));
}

double sup_distance(const RealField& a, const RealField& b) {
  if (!(a.grid() == b.grid()))
    throw std::invalid_argument("sup_distance: grid mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.grid().size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace slheat
