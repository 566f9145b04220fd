#include <doctest.h>

#include <cmath>

#include "landau/config.hpp"
#include "landau/oscillator.hpp"

using namespace landau;

namespace {

// Raw physicists' Hermite polynomials times the Gaussian, fine for small n.
double raw_hermite_function(int n, double x) {
  double h0 = 1.0, h1 = 2.0 * x;
  if (n == 0) return std::exp(-x * x / 2) / std::pow(kPi, 0.25);
  for (int k = 1; k < n; ++k) {
    const double h2 = 2.0 * x * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1 * std::exp(-x * x / 2) / std::sqrt(std::pow(2.0, n) * std::tgamma(n + 1.0) * std::sqrt(kPi));
}

}  // namespace

TEST_CASE("recurrence matches raw polynomial form") {
  for (int n = 0; n <= 10; ++n) {
    for (double x : {-3.1, -0.4, 0.0, 0.9, 2.5}) {
      CHECK(hermite_function(n, x) == doctest::Approx(raw_hermite_function(n, x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("parity and maximum") {
  const OscillatorBasis b(1.0, 10);
  CHECK(b(1, 0.0) == 0.0);
  const double peak = b(0, 0.0);
  for (double u = -3; u <= 3; u += 0.1) CHECK(std::abs(b(0, u)) <= peak);
  CHECK_THROWS_AS(b(11, 0.0), std::out_of_range);
  CHECK_THROWS_AS(b(-1, 0.0), std::out_of_range);
}

TEST_CASE("normalization and Gram matrix by quadrature") {
  const OscillatorBasis b(1.0, 10);
  const UniformGrid1D grid{-12.0, 24.0 / 2400, 2401};
  for (int n = 0; n <= 10; ++n) {
    const auto s = sample_1d(grid, [&](double u) { return b(n, u); });
    CHECK(std::abs(quadrature_inner_product(s, s) - 1.0) < 1e-10);
  }
  const auto g0 = sample_1d(grid, [&](double u) { return b(0, u); });
  const auto g1 = sample_1d(grid, [&](double u) { return b(1, u); });
  CHECK(std::abs(quadrature_inner_product(g0, g1)) < 1e-10);

  const OscillatorBasis wide(2.5, 8);
  const auto wg = symmetric_grid(0.3, wide.cutoff(8), wide.length());
  double worst = 0.0;
  for (int m = 0; m <= 8; ++m) {
    const auto sm = sample_1d(wg, [&](double u) { return wide(m, u - 0.3); });
    for (int n = 0; n <= 8; ++n) {
      const auto sn = sample_1d(wg, [&](double u) { return wide(n, u - 0.3); });
      worst = std::max(worst, std::abs(quadrature_inner_product(sm, sn) - (m == n ? 1.0 : 0.0)));
    }
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("recurrence stays bounded and finite") {
  double worst = 0.0;
  for (double x = -40.0; x <= 40.0; x += 0.37) {
    const auto v = hermite_functions(50, x);
    worst = std::max(worst, v.cwiseAbs().maxCoeff());
  }
  CHECK(worst <= 10.0);
  const OscillatorBasis b(3.0, 200);
  for (double u : {-40.0, -7.0, 0.0, 13.0, 40.0}) {
    for (int n : {0, 50, 120, 200}) CHECK(std::isfinite(b(n, u / std::sqrt(3.0))));
  }
}

TEST_CASE("grid mismatch is rejected") {
  const Sampled1D a = sample_1d(UniformGrid1D{0.0, 0.1, 11}, [](double) { return 1.0; });
  const Sampled1D b = sample_1d(UniformGrid1D{0.0, 0.1, 12}, [](double) { return 1.0; });
  CHECK_THROWS_AS(quadrature_inner_product(a, b), std::invalid_argument);
}
