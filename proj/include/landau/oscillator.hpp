#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>

namespace landau {

/// Normalized Hermite functions φ_k(ξ) = (2^k k! √π)^{-1/2} H_k(ξ) e^{-ξ²/2}
/// for k = 0..n, via the normalized three-term recurrence
///   φ_{k+1} = √(2/(k+1)) ξ φ_k − √(k/(k+1)) φ_{k−1}.
/// Every intermediate stays bounded by π^{-1/4}, so nothing overflows.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> hermite_functions(int n, Scalar xi) {
  using std::exp;
  using std::sqrt;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> phi(n + 1);
  const Scalar pi = std::numbers::pi_v<Scalar>;
  phi(0) = exp(-xi * xi / Scalar(2)) / sqrt(sqrt(pi));
  if (n == 0) return phi;
  phi(1) = sqrt(Scalar(2)) * xi * phi(0);
  for (int k = 1; k < n; ++k) {
    phi(k + 1) = sqrt(Scalar(2) / Scalar(k + 1)) * xi * phi(k) -
                 sqrt(Scalar(k) / Scalar(k + 1)) * phi(k - 1);
  }
  return phi;
}

template <typename Scalar>
Scalar hermite_function(int n, Scalar xi) {
  return hermite_functions<Scalar>(n, xi)(n);
}

/// Eigenfunctions ψ_n(u) of the 1-D oscillator with mass·frequency Mω,
/// normalized to ∫|ψ_n|² du = 1.
class OscillatorBasis {
 public:
  explicit OscillatorBasis(double mass_frequency, int max_level = 64);

  double mass_frequency() const { return mass_frequency_; }
  int max_level() const { return max_level_; }
  /// Oscillator length 1/√(Mω).
  double length() const { return 1.0 / std::sqrt(mass_frequency_); }

  /// ψ_n(u). Throws std::out_of_range if n ∉ [0, max_level].
  double operator()(int n, double u) const;

  /// ψ_0(u) .. ψ_n(u).
  Eigen::VectorXd all(int n, double u) const;

  /// Half-width beyond which ψ_n is below ~1e−14: (√(2n+1) + 8)/√(Mω).
  double cutoff(int n) const;

 private:
  void check_level(int n) const;

  double mass_frequency_;
  int max_level_;
  double scale_;
};

/// Uniform 1-D grid: start + i·step for i in [0, count).
struct UniformGrid1D {
  double start = 0.0;
  double step = 1.0;
  Eigen::Index count = 0;

  double at(Eigen::Index i) const { return start + static_cast<double>(i) * step; }
  bool operator==(const UniformGrid1D&) const = default;
};

/// Grid symmetric about `center` with at least `points_per_length` points
/// per `length` covering [center − half_width, center + half_width].
UniformGrid1D symmetric_grid(double center, double half_width, double length,
                             int points_per_length = 12);

struct Sampled1D {
  UniformGrid1D grid;
  Eigen::VectorXcd values;
};

template <typename Fn>
Sampled1D sample_1d(const UniformGrid1D& grid, Fn&& fn) {
  Sampled1D s{grid, Eigen::VectorXcd(grid.count)};
  for (Eigen::Index i = 0; i < grid.count; ++i) s.values(i) = fn(grid.at(i));
  return s;
}

/// Trapezoidal approximation of ∫ f* g. Throws std::invalid_argument when the
/// grids differ.
std::complex<double> quadrature_inner_product(const Sampled1D& f, const Sampled1D& g);

}  // namespace landau
