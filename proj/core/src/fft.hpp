#pragma once

#include <complex>
#include <span>

namespace slheat::detail {

// Unnormalized real<->half-complex 3-D transforms of an n^3 grid.
// Plans are created with FFTW_ESTIMATE so the chosen algorithm, and therefore
// every rounding, is the same from run to run.
void forward_r2c(int n, std::span<const double> in,
                 std::span<std::complex<double>> out);
void inverse_c2r(int n, std::span<const std::complex<double>> in,
                 std::span<double> out);

}  // namespace slheat::detail
