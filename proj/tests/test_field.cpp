#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <random>
#include <sstream>

#include "slheat/errors.hpp"
#include "slheat/field.hpp"
#include "slheat/initial_data.hpp"
#include "slheat/reduce.hpp"
#include "slheat/snapshot.hpp"

using namespace slheat;

namespace {
const double kTwoPi = 2.0 * std::numbers::pi;

double relative_sup_error(const RealField& a, const RealField& b) {
  return sup_distance(a, b) / std::max(sup_norm(b), 1e-300);
}
}  // namespace

TEST(GridSpec, RejectsOddOrTinyGrids) {
  EXPECT_THROW(GridSpec(1.0, 3), std::invalid_argument);
  EXPECT_THROW(GridSpec(1.0, 2), std::invalid_argument);
  EXPECT_THROW(GridSpec(1.0, 7), std::invalid_argument);
  EXPECT_THROW(GridSpec(0.0, 8), std::invalid_argument);
  EXPECT_THROW(GridSpec(-1.0, 8), std::invalid_argument);
  EXPECT_NO_THROW(GridSpec(1.0, 4));
}

TEST(GridSpec, FoldedWavenumbers) {
  const GridSpec g(kTwoPi, 8);
  EXPECT_EQ(g.fold(0), 0);
  EXPECT_EQ(g.fold(4), 4);
  EXPECT_EQ(g.fold(5), -3);
  EXPECT_EQ(g.fold(7), -1);
  EXPECT_DOUBLE_EQ(g.wavenumber(7), -1.0);
  EXPECT_DOUBLE_EQ(g.volume_element(), std::pow(kTwoPi / 8, 3));
}

TEST(RealField, RejectsNonFiniteValues) {
  const GridSpec g(1.0, 4);
  std::vector<double> v(g.size(), 0.0);
  v[5] = std::nan("");
  EXPECT_THROW(RealField(g, v), NonFiniteError);
  v[5] = INFINITY;
  EXPECT_THROW(RealField(g, v), NonFiniteError);
  EXPECT_THROW(RealField(g, std::vector<double>(3)), std::invalid_argument);
}

TEST(Transform, ConstantMapsToDcOnly) {
  const GridSpec g(kTwoPi, 8);
  const auto s = to_spectral(make_initial(InitialData::constant(3.0), g));
  EXPECT_NEAR(s.coeff(0, 0, 0).real(), 3.0, 1e-15);
  EXPECT_NEAR(s.coeff(0, 0, 0).imag(), 0.0, 1e-15);
  double rest = 0.0;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int c = 0; c < 8; ++c)
        if (a || b || c) rest = std::max(rest, std::abs(s.coeff(a, b, c)));
  EXPECT_LT(rest, 1e-15);
}

TEST(Transform, SineMapsToPlusMinusOneModes) {
  const GridSpec g(kTwoPi, 8);
  const auto s = to_spectral(make_initial(InitialData::sine(0, 1, 1.0), g));
  EXPECT_NEAR(s.coeff(1, 0, 0).real(), 0.0, 1e-15);
  EXPECT_NEAR(s.coeff(1, 0, 0).imag(), -0.5, 1e-15);
  EXPECT_NEAR(s.coeff(-1, 0, 0).imag(), 0.5, 1e-15);
  double rest = 0.0;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int c = 0; c < 8; ++c)
        if (!((a == 1 || a == 7) && b == 0 && c == 0))
          rest = std::max(rest, std::abs(s.coeff(a, b, c)));
  EXPECT_LT(rest, 1e-15);
}

TEST(Transform, InverseOfElementarySpectra) {
  const GridSpec g(kTwoPi, 8);
  SpectralField dc(g);
  dc.set_coeff(0, 0, 0, 2.5);
  const auto f = from_spectral(dc);
  for (double v : f.values()) EXPECT_NEAR(v, 2.5, 1e-15);

  EXPECT_EQ(sup_norm(from_spectral(SpectralField(g))), 0.0);

  SpectralField sine(g);
  sine.set_coeff(1, 0, 0, {0.0, -0.5});
  sine.set_coeff(-1, 0, 0, {0.0, 0.5});
  EXPECT_LE(sup_distance(from_spectral(sine), make_initial(InitialData::sine(0, 1, 1.0), g)),
            1e-12);
}

TEST(Transform, MirroredStorageIsConjugate) {
  const GridSpec g(1.0, 8);
  SpectralField s(g);
  s.set_coeff(1, 2, 6, {0.3, 0.7});
  EXPECT_EQ(s.coeff(-1, -2, 2), std::complex<double>(0.3, -0.7));
}

TEST(Transform, AsymmetricSpectrumIsRejected) {
  const GridSpec g(1.0, 8);
  SpectralField s(g);
  s.set_coeff(1, 0, 0, {1.0, 0.0});  // partner (-1,0,0) left at zero
  EXPECT_THROW(from_spectral(s), SymmetryError);

  SpectralField dc(g);
  dc.set_coeff(0, 0, 0, {1.0, 1e-3});  // DC must be real
  EXPECT_THROW(from_spectral(dc), SymmetryError);

  SpectralField tiny(g);
  tiny.set_coeff(1, 0, 0, {1.0, 0.0});
  tiny.set_coeff(-1, 0, 0, {1.0, 1e-13});  // below tolerance: dropped
  EXPECT_NO_THROW(from_spectral(tiny));
}

class TransformProperty : public ::testing::TestWithParam<int> {};

TEST_P(TransformProperty, RoundTripAndParseval) {
  const int n = GetParam();
  const GridSpec g(kTwoPi, n);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto f = random_field(g, 1.0, 1000 * n + seed);
    const auto s = to_spectral(f);
    EXPECT_LE(relative_sup_error(from_spectral(s), f), 1e-12) << "seed " << seed;

    std::vector<double> terms;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) terms.push_back(std::norm(s.coeff(a, b, c)));
    const double spectral = pairwise_sum(terms) * g.volume();
    const double physical =
        pairwise_sum_mapped(f.values(), [](double x) { return x * x; }) * g.volume_element();
    EXPECT_NEAR(spectral / physical, 1.0, 1e-10);
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, TransformProperty, ::testing::Values(4, 8, 16, 32));

TEST(SupNorm, ElementaryValues) {
  const GridSpec g(kTwoPi, 64);
  EXPECT_EQ(sup_norm(make_initial(InitialData::constant(-2.0), g)), 2.0);
  EXPECT_EQ(sup_norm(RealField(g)), 0.0);
  EXPECT_NEAR(sup_norm(make_initial(InitialData::sine(0, 1, 1.0), g)), 1.0, 1e-15);
}

TEST(SupNorm, IsANormOnRandomPairs) {
  const GridSpec g(1.0, 8);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> scale(-10.0, 10.0);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto a = random_field(g, 1.0, 2 * seed);
    const auto b = random_field(g, 3.0, 2 * seed + 1);
    const double s = scale(rng);
    EXPECT_NEAR(sup_norm(axpy(s, a, RealField(g))), std::abs(s) * sup_norm(a),
                1e-15 * std::abs(s) * sup_norm(a));
    EXPECT_LE(sup_norm(axpy(1.0, a, b)), sup_norm(a) + sup_norm(b) + 1e-15);
    EXPECT_GE(sup_norm(a), 0.0);
  }
}

TEST(Reduce, PairwiseSumIsOrderFixedAndAccurate) {
  std::vector<double> v(100000, 0.1);
  const double s = pairwise_sum(v);
  EXPECT_NEAR(s, 10000.0, 1e-9);
  EXPECT_EQ(s, pairwise_sum(v));
  EXPECT_EQ(pairwise_sum({}), 0.0);
}

TEST(Snapshot, HeaderLayoutAndRoundTrip) {
  const GridSpec g(3.5, 4);
  const auto f = random_field(g, 2.0, 11);
  std::stringstream buf;
  write_snapshot(buf, f);
  const std::string bytes = buf.str();
  ASSERT_EQ(bytes.size(), kSnapshotHeaderBytes + 64 * 8);
  EXPECT_EQ(bytes.substr(0, 6), std::string("SLHF1\0", 6));
  std::uint32_t n = 0;
  std::memcpy(&n, bytes.data() + 8, 4);
  EXPECT_EQ(n, 4u);
  double length = 0.0;
  std::memcpy(&length, bytes.data() + 16, 8);
  EXPECT_EQ(length, 3.5);
  double first = 0.0;
  std::memcpy(&first, bytes.data() + 24, 8);
  EXPECT_EQ(first, f(0, 0, 0));
  double second = 0.0;
  std::memcpy(&second, bytes.data() + 32, 8);
  EXPECT_EQ(second, f(0, 0, 1));  // k runs fastest

  const auto back = read_snapshot(buf);
  EXPECT_EQ(back, f);
}

TEST(Snapshot, RejectsCorruptInput) {
  std::stringstream bad("NOTASNAPSHOT-----------------");
  EXPECT_THROW(read_snapshot(bad), std::runtime_error);

  const GridSpec g(1.0, 4);
  std::stringstream buf;
  write_snapshot(buf, RealField(g));
  std::string truncated = buf.str().substr(0, 100);
  std::stringstream t(truncated);
  EXPECT_THROW(read_snapshot(t), std::runtime_error);
}
