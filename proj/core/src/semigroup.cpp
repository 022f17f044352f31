#include "slheat/semigroup.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "slheat/reduce.hpp"

namespace slheat {

SemigroupMultiplier::SemigroupMultiplier(const GridSpec& grid, double t)
    : grid_(grid), t_(t) {
  if (!(t >= 0.0) || !std::isfinite(t))
    throw std::invalid_argument("semigroup time must be finite and >= 0");
  const int n = grid.points();
  const int nh = n / 2 + 1;
  entries_.resize(static_cast<std::size_t>(n) * n * nh);
  // exp(-|k|^2 t) = e1 * e2 * e3, and each factor has only N distinct values.
  std::vector<double> axis(n);
  for (int m = 0; m < n; ++m) {
    const double k = grid.wavenumber(m);
    axis[m] = std::exp(-k * k * t);
  }
  std::size_t idx = 0;
  for (int m1 = 0; m1 < n; ++m1)
    for (int m2 = 0; m2 < n; ++m2)
      for (int m3 = 0; m3 < nh; ++m3) entries_[idx++] = axis[m1] * axis[m2] * axis[m3];
}

void SemigroupMultiplier::apply(SpectralField& spectrum) const {
  if (!(spectrum.grid() == grid_))
    throw std::invalid_argument("multiplier grid mismatch");
  auto coeffs = spectrum.half();
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] *= entries_[i];
}

RealField apply_semigroup(const RealField& f, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("apply_semigroup: negative time");
  if (t == 0.0) return f;
  auto spectrum = to_spectral(f);
  SemigroupMultiplier(f.grid(), t).apply(spectrum);
  return from_spectral(spectrum);
}

namespace {

// exp(-x^2/(4t)) summed over images; tail weight beyond |x| > r is
// erfc(r / (2 sqrt t)) <= 1e-12 for r = 5.1 * 2 sqrt(t).
double periodized_gaussian(double length, double t, double x) {
  const double reach = 5.1 * 2.0 * std::sqrt(t);
  const int images = static_cast<int>(std::ceil(reach / length)) + 1;
  x = x - length * std::floor(x / length);
  double acc = 0.0;
  for (int n = -images; n <= images; ++n) {
    const double d = x + n * length;
    acc += std::exp(-d * d / (4.0 * t));
  }
  return acc / std::sqrt(4.0 * std::numbers::pi * t);
}

// Periodic sinc for even N: the trigonometric interpolant of a unit spike at
// the origin, (1/N) sin(N theta/2) cot(theta/2) with theta = 2 pi y / L.
double periodic_sinc(int n, double length, double y) {
  const double theta = 2.0 * std::numbers::pi * y / length;
  const double s = std::sin(0.5 * theta);
  if (std::abs(s) < 1e-14) return 1.0;
  return std::sin(0.5 * n * theta) * std::cos(0.5 * theta) / (s * n);
}

// Smallest refinement factor r so that the rectangle rule on an (N r)-point
// grid aliases the kernel's spectrum by less than exp(-35).
int refinement_for(const GridSpec& grid, double t, int band) {
  const double need = std::sqrt(35.0 / t);
  const double dk = 2.0 * std::numbers::pi / grid.box_length();
  int r = 1;
  while (dk * (grid.points() * r - band) < need) ++r;
  return r;
}

// Axis weights w[d] = integral over one period of G(d h - y) * sinc(y) dy.
std::vector<double> axis_weights(const GridSpec& grid, double t) {
  const int n = grid.points();
  const double length = grid.box_length();
  const int fine = n * refinement_for(grid, t, n / 2);
  const double hf = length / fine;
  std::vector<double> sinc(fine);
  for (int s = 0; s < fine; ++s) sinc[s] = periodic_sinc(n, length, s * hf);

  std::vector<double> weights(n);
  std::vector<double> terms(fine);
  for (int d = 0; d < n; ++d) {
    const double x = d * grid.spacing();
    for (int s = 0; s < fine; ++s)
      terms[s] = periodized_gaussian(length, t, x - s * hf) * sinc[s];
    weights[d] = pairwise_sum(terms) * hf;
  }
  return weights;
}

}  // namespace

double periodized_gaussian_1d(double box_length, double t, double x) {
  if (!(t > 0.0)) throw std::invalid_argument("kernel time must be > 0");
  return periodized_gaussian(box_length, t, x);
}

RealField gaussian_convolve_direct(const RealField& f, double t) {
  if (!(t > 0.0))
    throw std::invalid_argument("gaussian_convolve_direct: t must be > 0");
  const GridSpec& grid = f.grid();
  const int n = grid.points();
  const auto w = axis_weights(grid, t);

  std::vector<double> cur(f.values().begin(), f.values().end());
  std::vector<double> next(cur.size());
  std::vector<double> line(n);
  for (int axis = 0; axis < 3; ++axis) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        auto at = [&](int c) {
          switch (axis) {
            case 0: return grid.index(c, a, b);
            case 1: return grid.index(a, c, b);
            default: return grid.index(a, b, c);
          }
        };
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) line[j] = w[(i - j + n) % n] * cur[at(j)];
          next[at(i)] = pairwise_sum(line);
        }
      }
    }
    cur.swap(next);
  }
  return RealField(grid, std::move(cur));
}

double kernel_mass(const GridSpec& grid, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("kernel_mass: t must be > 0");
  const int fine = grid.points() * refinement_for(grid, t, 0);
  const double hf = grid.box_length() / fine;
  std::vector<double> samples(fine);
  for (int s = 0; s < fine; ++s)
    samples[s] = periodized_gaussian(grid.box_length(), t, s * hf);
  // The periodized 3-D kernel is a product of 1-D factors, so its
  // rectangle-rule integral is the cube of the 1-D one.
  const double axis_mass = pairwise_sum(samples) * hf;
  return axis_mass * axis_mass * axis_mass;
}

}  // namespace slheat
