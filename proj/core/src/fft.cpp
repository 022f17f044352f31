#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>

namespace slheat::detail {
namespace {

// The FFTW planner is not thread-safe; execution of distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class PlanPair {
 public:
  explicit PlanPair(int n) {
    const std::size_t real_size = static_cast<std::size_t>(n) * n * n;
    const std::size_t half_size = static_cast<std::size_t>(n) * n * (n / 2 + 1);
    real_ = fftw_alloc_real(real_size);
    half_ = fftw_alloc_complex(half_size);
    std::lock_guard lock(planner_mutex());
    r2c_ = fftw_plan_dft_r2c_3d(n, n, n, real_, half_, FFTW_ESTIMATE);
    c2r_ = fftw_plan_dft_c2r_3d(n, n, n, half_, real_, FFTW_ESTIMATE);
  }
  PlanPair(const PlanPair&) = delete;
  PlanPair& operator=(const PlanPair&) = delete;
  ~PlanPair() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(r2c_);
    fftw_destroy_plan(c2r_);
    fftw_free(real_);
    fftw_free(half_);
  }

  void forward(std::span<const double> in, std::span<std::complex<double>> out) {
    std::copy(in.begin(), in.end(), real_);
    fftw_execute(r2c_);
    std::memcpy(static_cast<void*>(out.data()), half_, out.size_bytes());
  }

  void inverse(std::span<const std::complex<double>> in, std::span<double> out) {
    // c2r overwrites its input, so always go through the owned buffer.
    std::memcpy(half_, in.data(), in.size_bytes());
    fftw_execute(c2r_);
    std::copy(real_, real_ + out.size(), out.begin());
  }

 private:
  double* real_ = nullptr;
  fftw_complex* half_ = nullptr;
  fftw_plan r2c_ = nullptr;
  fftw_plan c2r_ = nullptr;
};

PlanPair& plans_for(int n) {
  thread_local std::map<int, std::unique_ptr<PlanPair>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<PlanPair>(n);
  return *slot;
}

}  // namespace

void forward_r2c(int n, std::span<const double> in,
                 std::span<std::complex<double>> out) {
  plans_for(n).forward(in, out);
}

void inverse_c2r(int n, std::span<const std::complex<double>> in,
                 std::span<double> out) {
  plans_for(n).inverse(in, out);
}

}  // namespace slheat::detail
