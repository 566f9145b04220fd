#pragma once

#include <Eigen/Dense>
#include <compare>
#include <map>
#include <span>
#include <vector>

#include "landau/config.hpp"
#include "landau/operators.hpp"
#include "landau/oscillator.hpp"
#include "landau/sampled.hpp"

namespace landau {

// ---------------------------------------------------------------------------
// Spectrum

/// ω(n + 1/2). Throws std::invalid_argument for n < 0.
double landau_energy(const InfiniteConfig& cfg, int n);

/// Bohr–Sommerfeld radius √(2n/(eB)); requires n ≥ 1.
double semiclassical_radius(const InfiniteConfig& cfg, int n);
/// Bohr–Sommerfeld energy nω; requires n ≥ 1.
double semiclassical_energy(const InfiniteConfig& cfg, int n);

// ---------------------------------------------------------------------------
// Fock labels |n n′⟩ and the two commuting ladder algebras

struct FockLabel {
  int n = 0;        // Landau level
  int n_prime = 0;  // degeneracy quantum number

  int angular_momentum() const { return n - n_prime; }
  auto operator<=>(const FockLabel&) const = default;
};

/// Finitely supported superposition Σ c |n n′⟩.
using FockState = std::map<FockLabel, cplx>;

enum class Ladder { A, ADag, B, BDag };

/// a|n n′⟩ = √n |n−1 n′⟩, a†|n n′⟩ = √(n+1) |n+1 n′⟩, and likewise b, b†
/// on n′. Zero coefficients are dropped.
FockState ladder_apply(Ladder which, const FockState& s);

/// [X, Y] s = X(Y s) − Y(X s).
FockState commutator(Ladder x, Ladder y, const FockState& s);

/// Σ c1 − c2 over the union of supports.
FockState subtract(const FockState& lhs, const FockState& rhs);

/// max |c| over the support (0 for the empty map).
double max_abs(const FockState& s);

struct EnergyAndMomentum {
  double energy;
  int angular_momentum;
};

/// H|n n′⟩ = ω(n + 1/2)|n n′⟩, L|n n′⟩ = (n − n′)|n n′⟩.
EnergyAndMomentum fock_energy_and_angular_momentum(const InfiniteConfig& cfg, FockLabel label);

// ---------------------------------------------------------------------------
// Energy eigenstates labelled by a transverse momentum

/// ψ_n(x + p_y/(Mω)) e^{i p_y y}.
Wavefunction eigenstate_py(const InfiniteConfig& cfg, int n, double p_y);

/// ψ_n(y − p_x/(Mω)) e^{i p_x x} e^{−i eB x y}.
Wavefunction eigenstate_px(const InfiniteConfig& cfg, int n, double p_x);

// ---------------------------------------------------------------------------
// Coherent states

/// Eigenvalues of a (λ) and b (λ′).
struct CoherentLabel {
  cplx lambda{0.0, 0.0};
  cplx lambda_prime{0.0, 0.0};
};

/// Unit-norm coordinate amplitude
///   A exp[−(Mω/4)(x² + 2ixy + y²) + √(Mω/2)(x(λ+λ′) + iy(λ−λ′))],
/// A > 0 fixed by quadrature of the Gaussian density. The amplitude is kept in
/// log form so shifted copies far from the packet stay finite.
class CoherentAmplitude {
 public:
  CoherentAmplitude(const InfiniteConfig& cfg, CoherentLabel label);

  cplx log_value(double x, double y) const;
  cplx operator()(double x, double y) const { return std::exp(log_value(x, y)); }

  const CoherentLabel& label() const { return label_; }
  double mean_x() const { return mean_x_; }
  double mean_y() const { return mean_y_; }
  double log_norm() const { return log_norm_; }

 private:
  InfiniteConfig cfg_;
  CoherentLabel label_;
  double mean_x_;
  double mean_y_;
  double log_norm_;
};

CoherentAmplitude coherent_amplitude(const InfiniteConfig& cfg, CoherentLabel label);

struct CoherentExpectations {
  double center_x, center_x_spread;      // ⟨R_x⟩, ΔR_x
  double center_y, center_y_spread;      // ⟨R_y⟩, ΔR_y
  double relative_x, relative_x_spread;  // ⟨x − R_x⟩, Δ(x − R_x)
  double relative_y, relative_y_spread;  // ⟨y − R_y⟩, Δ(y − R_y)
  double velocity_x, velocity_x_spread;  // ⟨Mv_x⟩, Δ(Mv_x)
  double velocity_y, velocity_y_spread;  // ⟨Mv_y⟩, Δ(Mv_y)
  double energy, energy_spread;          // ⟨H⟩, ΔH
};

/// Closed-form expectation values and uncertainties in |λ λ′⟩.
CoherentExpectations coherent_expectations(const InfiniteConfig& cfg, CoherentLabel label);

/// (λ e^{−iωt}, λ′).
CoherentLabel evolve_coherent(const InfiniteConfig& cfg, CoherentLabel label, double t);

/// (⟨x⟩, ⟨y⟩) of the packet.
Eigen::Vector2d coherent_mean_position(const InfiniteConfig& cfg, CoherentLabel label);

/// ⟨O⟩ and ΔO = √(⟨O†O⟩ − ⟨O⟩²) by quadrature, for Hermitian O.
struct Moment {
  double mean;
  double spread;
};
Moment measure(Operator op, const PlaneState& state, const InfiniteConfig& cfg);

/// Patch centred on the packet, wide enough for the Gaussian tail to fall
/// below 1e−16 and with h²Mω ≤ `h2_mass_frequency`.
PlaneGrid coherent_grid(const InfiniteConfig& cfg, CoherentLabel label,
                        double h2_mass_frequency = 1e-3);

// ---------------------------------------------------------------------------
// Classical cyclotron motion

struct ClassicalOrbit {
  Eigen::Vector2d center{0.0, 0.0};
  double radius = 0.0;
  double phase0 = 0.0;
  double omega = 1.0;
};

/// Orbit through (x, y) with velocity (v_x, v_y); the centre is the
/// Runge–Lenz point (x − v_y/ω, y + v_x/ω).
ClassicalOrbit orbit_from_phase_space(const InfiniteConfig& cfg, Eigen::Vector2d position,
                                      Eigen::Vector2d velocity);

/// center + r(cos(ωt + φ₀), sin(ωt + φ₀)) for each t.
std::vector<Eigen::Vector2d> classical_orbit_trace(const ClassicalOrbit& orbit,
                                                   std::span<const double> times);

/// Reduces points into [0, Lx) × [0, Ly).
std::vector<Eigen::Vector2d> wrap_to_torus(std::span<const Eigen::Vector2d> points, double lx,
                                           double ly);

/// (M/2) ω² r².
double orbit_energy(const InfiniteConfig& cfg, const ClassicalOrbit& orbit);

}  // namespace landau
