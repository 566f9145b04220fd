#include "landau/landau_inf.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace landau {

namespace {

double cyclotron(const InfiniteConfig& cfg) { return cfg.charge * cfg.field / cfg.mass; }
double mass_frequency(const InfiniteConfig& cfg) { return cfg.charge * cfg.field; }

void require_level(int n, int min_level) {
  if (n < min_level) {
    throw std::invalid_argument("level " + std::to_string(n) + " below minimum " +
                                std::to_string(min_level));
  }
}

void accumulate(FockState& out, FockLabel label, cplx value) {
  if (value == cplx{}) return;
  auto [it, inserted] = out.try_emplace(label, value);
  if (!inserted) {
    it->second += value;
    if (it->second == cplx{}) out.erase(it);
  }
}

// ∫ exp(−(Mω/2)(u − mean)²) du by trapezoid.
double gaussian_weight(double mass_freq, double mean) {
  const double len = 1.0 / std::sqrt(mass_freq);
  const UniformGrid1D g = symmetric_grid(mean, 13.0 * len, len, 16);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < g.count; ++i) {
    const double d = g.at(i) - mean;
    const double w = (i == 0 || i == g.count - 1) ? 0.5 : 1.0;
    sum += w * std::exp(-0.5 * mass_freq * d * d);
  }
  return sum * g.step;
}

}  // namespace

double landau_energy(const InfiniteConfig& cfg, int n) {
  require_level(n, 0);
  return cyclotron(cfg) * (n + 0.5);
}

double semiclassical_radius(const InfiniteConfig& cfg, int n) {
  require_level(n, 1);
  return std::sqrt(2.0 * n / (cfg.charge * cfg.field));
}

double semiclassical_energy(const InfiniteConfig& cfg, int n) {
  require_level(n, 1);
  return n * cyclotron(cfg);
}

FockState ladder_apply(Ladder which, const FockState& s) {
  FockState out;
  for (const auto& [label, c] : s) {
    switch (which) {
      case Ladder::A:
        if (label.n > 0) accumulate(out, {label.n - 1, label.n_prime}, std::sqrt(double(label.n)) * c);
        break;
      case Ladder::ADag:
        accumulate(out, {label.n + 1, label.n_prime}, std::sqrt(label.n + 1.0) * c);
        break;
      case Ladder::B:
        if (label.n_prime > 0) {
          accumulate(out, {label.n, label.n_prime - 1}, std::sqrt(double(label.n_prime)) * c);
        }
        break;
      case Ladder::BDag:
        accumulate(out, {label.n, label.n_prime + 1}, std::sqrt(label.n_prime + 1.0) * c);
        break;
    }
  }
  return out;
}

FockState subtract(const FockState& lhs, const FockState& rhs) {
  FockState out = lhs;
  for (const auto& [label, c] : rhs) accumulate(out, label, -c);
  return out;
}

FockState commutator(Ladder x, Ladder y, const FockState& s) {
  return subtract(ladder_apply(x, ladder_apply(y, s)), ladder_apply(y, ladder_apply(x, s)));
}

double max_abs(const FockState& s) {
  double m = 0.0;
  for (const auto& [label, c] : s) m = std::max(m, std::abs(c));
  return m;
}

EnergyAndMomentum fock_energy_and_angular_momentum(const InfiniteConfig& cfg, FockLabel label) {
  if (label.n < 0 || label.n_prime < 0) throw std::invalid_argument("negative Fock label");
  return {landau_energy(cfg, label.n), label.angular_momentum()};
}

Wavefunction eigenstate_py(const InfiniteConfig& cfg, int n, double p_y) {
  require_level(n, 0);
  const double mw = mass_frequency(cfg);
  const OscillatorBasis basis(mw, std::max(n, 1));
  const double shift = p_y / mw;
  return [basis, n, shift, p_y](double x, double y) {
    return basis(n, x + shift) * std::polar(1.0, p_y * y);
  };
}

Wavefunction eigenstate_px(const InfiniteConfig& cfg, int n, double p_x) {
  require_level(n, 0);
  const double mw = mass_frequency(cfg);
  const double eb = cfg.charge * cfg.field;
  const OscillatorBasis basis(mw, std::max(n, 1));
  const double shift = p_x / mw;
  return [basis, n, shift, p_x, eb](double x, double y) {
    return basis(n, y - shift) * std::polar(1.0, p_x * x - eb * x * y);
  };
}

CoherentAmplitude::CoherentAmplitude(const InfiniteConfig& cfg, CoherentLabel label)
    : cfg_(cfg), label_(label) {
  const double mw = mass_frequency(cfg);
  const double c = std::sqrt(mw / 2.0);
  const cplx sum = label.lambda + label.lambda_prime;
  const cplx diff = label.lambda - label.lambda_prime;
  mean_x_ = 2.0 * c * sum.real() / mw;
  mean_y_ = -2.0 * c * diff.imag() / mw;
  log_norm_ = 0.0;
  const double peak = log_value(mean_x_, mean_y_).real();
  const double weight = gaussian_weight(mw, mean_x_) * gaussian_weight(mw, mean_y_);
  log_norm_ = -peak - 0.5 * std::log(weight);
}

cplx CoherentAmplitude::log_value(double x, double y) const {
  const double mw = mass_frequency(cfg_);
  const double c = std::sqrt(mw / 2.0);
  const cplx i{0.0, 1.0};
  const cplx quad = -(mw / 4.0) * (x * x + 2.0 * i * x * y + y * y);
  const cplx lin = c * (x * (label_.lambda + label_.lambda_prime) +
                        i * y * (label_.lambda - label_.lambda_prime));
  return quad + lin + log_norm_;
}

CoherentAmplitude coherent_amplitude(const InfiniteConfig& cfg, CoherentLabel label) {
  return CoherentAmplitude(cfg, label);
}

CoherentExpectations coherent_expectations(const InfiniteConfig& cfg, CoherentLabel label) {
  const double mw = mass_frequency(cfg);
  const double w = cyclotron(cfg);
  const double r = std::sqrt(2.0 / mw);
  const double dr = 1.0 / std::sqrt(2.0 * mw);
  const double v = std::sqrt(2.0 * mw);
  const double dv = std::sqrt(mw / 2.0);
  const cplx l = label.lambda;
  const cplx lp = label.lambda_prime;
  CoherentExpectations e{};
  e.center_x = r * lp.real();
  e.center_x_spread = dr;
  e.center_y = r * lp.imag();
  e.center_y_spread = dr;
  e.relative_x = r * l.real();
  e.relative_x_spread = dr;
  e.relative_y = -r * l.imag();
  e.relative_y_spread = dr;
  e.velocity_x = v * l.imag();
  e.velocity_x_spread = dv;
  e.velocity_y = v * l.real();
  e.velocity_y_spread = dv;
  e.energy = w * (std::norm(l) + 0.5);
  e.energy_spread = w * std::abs(l);
  return e;
}

CoherentLabel evolve_coherent(const InfiniteConfig& cfg, CoherentLabel label, double t) {
  return {label.lambda * std::polar(1.0, -cyclotron(cfg) * t), label.lambda_prime};
}

Eigen::Vector2d coherent_mean_position(const InfiniteConfig& cfg, CoherentLabel label) {
  const double r = std::sqrt(2.0 / mass_frequency(cfg));
  return {r * (label.lambda_prime.real() + label.lambda.real()),
          r * (label.lambda_prime.imag() - label.lambda.imag())};
}

Moment measure(Operator op, const PlaneState& state, const InfiniteConfig& cfg) {
  const PlaneState applied = apply_operator(op, state, cfg);
  const double nn = inner_product(state, state).real();
  const double mean = inner_product(state, applied).real() / nn;
  const double second = inner_product(applied, applied).real() / nn;
  return {mean, std::sqrt(std::max(0.0, second - mean * mean))};
}

PlaneGrid coherent_grid(const InfiniteConfig& cfg, CoherentLabel label,
                        double h2_mass_frequency) {
  const double mw = mass_frequency(cfg);
  const Eigen::Vector2d c = coherent_mean_position(cfg, label);
  const double half = 12.5 / std::sqrt(mw);
  return centered_grid(c.x(), c.y(), half, half, std::sqrt(h2_mass_frequency / mw));
}

ClassicalOrbit orbit_from_phase_space(const InfiniteConfig& cfg, Eigen::Vector2d position,
                                      Eigen::Vector2d velocity) {
  ClassicalOrbit o;
  o.omega = cyclotron(cfg);
  o.center = {position.x() - velocity.y() / o.omega, position.y() + velocity.x() / o.omega};
  const Eigen::Vector2d rel = position - o.center;
  o.radius = rel.norm();
  o.phase0 = std::atan2(rel.y(), rel.x());
  return o;
}

std::vector<Eigen::Vector2d> classical_orbit_trace(const ClassicalOrbit& orbit,
                                                   std::span<const double> times) {
  if (orbit.radius < 0.0) throw std::invalid_argument("orbit radius must be >= 0");
  std::vector<Eigen::Vector2d> out;
  out.reserve(times.size());
  for (double t : times) {
    const double phi = orbit.omega * t + orbit.phase0;
    out.emplace_back(orbit.center + orbit.radius * Eigen::Vector2d(std::cos(phi), std::sin(phi)));
  }
  return out;
}

std::vector<Eigen::Vector2d> wrap_to_torus(std::span<const Eigen::Vector2d> points, double lx,
                                           double ly) {
  std::vector<Eigen::Vector2d> out;
  out.reserve(points.size());
  auto wrap = [](double v, double l) {
    double r = std::fmod(v, l);
    if (r < 0.0) r += l;
    return r >= l ? 0.0 : r;
  };
  for (const auto& p : points) out.emplace_back(wrap(p.x(), lx), wrap(p.y(), ly));
  return out;
}

double orbit_energy(const InfiniteConfig& cfg, const ClassicalOrbit& orbit) {
  return 0.5 * cfg.mass * orbit.omega * orbit.omega * orbit.radius * orbit.radius;
}

}  // namespace landau
