#include "landau/oscillator.hpp"

#include <stdexcept>
#include <string>

namespace landau {

OscillatorBasis::OscillatorBasis(double mass_frequency, int max_level)
    : mass_frequency_(mass_frequency), max_level_(max_level) {
  if (!(mass_frequency > 0.0) || !std::isfinite(mass_frequency)) {
    throw std::invalid_argument("mass_frequency must be finite and > 0");
  }
  if (max_level < 0) throw std::invalid_argument("max_level must be >= 0");
  scale_ = std::sqrt(std::sqrt(mass_frequency_));
}

void OscillatorBasis::check_level(int n) const {
  if (n < 0 || n > max_level_) {
    throw std::out_of_range("oscillator level " + std::to_string(n) + " outside [0, " +
                            std::to_string(max_level_) + "]");
  }
}

double OscillatorBasis::operator()(int n, double u) const {
  check_level(n);
  return scale_ * hermite_function(n, u * std::sqrt(mass_frequency_));
}

Eigen::VectorXd OscillatorBasis::all(int n, double u) const {
  check_level(n);
  return scale_ * hermite_functions(n, u * std::sqrt(mass_frequency_));
}

double OscillatorBasis::cutoff(int n) const {
  return (std::sqrt(2.0 * n + 1.0) + 8.0) * length();
}

UniformGrid1D symmetric_grid(double center, double half_width, double length,
                             int points_per_length) {
  if (!(half_width > 0.0) || !(length > 0.0) || points_per_length < 1) {
    throw std::invalid_argument("symmetric_grid: bad extent");
  }
  const double max_step = length / points_per_length;
  const auto half_cells = static_cast<Eigen::Index>(std::ceil(half_width / max_step));
  const double step = half_width / static_cast<double>(half_cells);
  return {center - half_width, step, 2 * half_cells + 1};
}

std::complex<double> quadrature_inner_product(const Sampled1D& f, const Sampled1D& g) {
  if (!(f.grid == g.grid) || f.values.size() != g.values.size() ||
      f.values.size() != f.grid.count) {
    throw std::invalid_argument("quadrature_inner_product: grid mismatch");
  }
  const Eigen::Index n = f.values.size();
  if (n < 2) return {0.0, 0.0};
  std::complex<double> sum = f.values.dot(g.values);  // conjugates the first argument
  sum -= 0.5 * (std::conj(f.values(0)) * g.values(0) +
                std::conj(f.values(n - 1)) * g.values(n - 1));
  return sum * f.grid.step;
}

}  // namespace landau
