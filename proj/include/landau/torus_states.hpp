#pragma once

#include <Eigen/Dense>
#include <span>
#include <utility>
#include <vector>

#include "landau/config.hpp"
#include "landau/landau_inf.hpp"
#include "landau/sampled.hpp"

namespace landau {

enum class DegeneracyBasis { Ly, Lx };

/// |n l_y⟩ (eigenstate of T_y with eigenvalue e^{2πil/nΦ}) or |n l_x⟩
/// (eigenstate of T_x). The index l is not reduced: l → l + nΦ reproduces the
/// same state up to the constant phase e^{iθx} (resp. e^{−iθy}).
struct TorusLabel {
  int n = 0;
  int l = 0;
  DegeneracyBasis basis = DegeneracyBasis::Ly;
};

/// Truncation of the lattice sums over shifted copies. With cutoff = 0 the
/// range is chosen so every omitted copy is below `tolerance` relative to the
/// peak on the fundamental domain; a positive cutoff caps |n_x| (or |n_y|) and
/// the construction throws std::runtime_error if it would drop a copy above
/// tolerance.
struct LatticeSumPolicy {
  int cutoff = 0;
  double tolerance = 1e-16;
};

/// Cells per side, multiples of nΦ, with h²Mω ≤ h2_mass_frequency and at least
/// `min_cells` cells.
std::pair<Eigen::Index, Eigen::Index> torus_cells(const TorusConfig& cfg,
                                                  double h2_mass_frequency = 1e-3,
                                                  Eigen::Index min_cells = 16);

/// Unnormalized lattice sum (A = 1):
///   |n l_y⟩: Σ_{n_x} ψ_n(x + (nΦ n_x + l + θy/2π) a_x) e^{2πi y (nΦ n_x + l + θy/2π)/Ly − iθx n_x}
///   |n l_x⟩: Σ_{n_y} ψ_n(y − (nΦ n_y + l + θx/2π) a_y)
///                 e^{2πi x (nΦ n_y + l + θx/2π − nΦ y/Ly)/Lx + iθy n_y}
Wavefunction torus_eigenfunction(const TorusConfig& cfg, TorusLabel label,
                                 LatticeSumPolicy policy = {});

/// Sampled and unit-normalized eigenstate with positive real A.
SampledState torus_eigenstate(const TorusConfig& cfg, TorusLabel label, Eigen::Index nx,
                              Eigen::Index ny, LatticeSumPolicy policy = {});

/// All nΦ states of level n in one basis.
std::vector<SampledState> torus_level(const TorusConfig& cfg, int n, DegeneracyBasis basis,
                                      Eigen::Index nx, Eigen::Index ny,
                                      LatticeSumPolicy policy = {});

/// T_x Ψ(x, y) = e^{2πiy/Ly − iθx/nΦ} Ψ(x + a_x, y). Requires nx % nΦ == 0.
SampledState apply_tx(const SampledState& state);
/// T_y Ψ(x, y) = e^{−iθy/nΦ} Ψ(x, y + a_y). Requires ny % nΦ == 0.
SampledState apply_ty(const SampledState& state);

/// Phase c with T_x |n l_y⟩ = c |n (l+1 mod nΦ)_y⟩ for the positive-A
/// convention: e^{−iθx/nΦ}, times e^{iθx} when l wraps from nΦ − 1 to 0.
cplx tx_ladder_phase(const TorusConfig& cfg, int l);
/// Phase c with T_y |n l_x⟩ = c |n (l−1 mod nΦ)_x⟩: e^{−iθy/nΦ}, times e^{iθy}
/// when l wraps from 0 to nΦ − 1.
cplx ty_ladder_phase(const TorusConfig& cfg, int l);

// ---------------------------------------------------------------------------
// Coherent states on the torus

/// Σ_{n_x, n_y} T_x^{nΦ n_x} T_y^{nΦ n_y} |λ λ′⟩ with the plane-normalized
/// coherent amplitude (A = 1 in the torus sum).
Wavefunction torus_coherent_sum(const TorusConfig& cfg, CoherentLabel label,
                                LatticeSumPolicy policy = {});

/// Sampled torus coherent state, normalized by grid quadrature.
SampledState torus_coherent(const TorusConfig& cfg, CoherentLabel label, Eigen::Index nx,
                            Eigen::Index ny, LatticeSumPolicy policy = {});

/// 1/|A|² for the torus coherent sum, from the closed-form double sum
///   Σ_{m} (−1)^{nΦ m_x m_y} exp(−π²nΦ²(m_x²/Ly² + m_y²/Lx²)/(Mω))
///         exp(i nΦ m_x φ_x) exp(−i nΦ m_y φ_y),
/// φ_x = 2π⟨R_y⟩/Ly − θx/nΦ, φ_y = 2π⟨R_x⟩/Lx + θy/nΦ.
double coherent_normalization_sum(const TorusConfig& cfg, CoherentLabel label);

enum class Direction { X, Y };

/// B_l prefactor of ⟨T^l⟩ in a normalized torus coherent state, summed
/// directly over (m_x, m_y). Complex in general; B_0 = 1.
cplx translation_prefactor(const TorusConfig& cfg, CoherentLabel label, Direction dir, int l);

/// e^{i l φ_x} (x) or e^{−i l φ_y} (y).
cplx translation_phase(const TorusConfig& cfg, CoherentLabel label, Direction dir, int l);

/// ⟨state| T^l |state⟩ by grid quadrature, l ≥ 0.
cplx translation_expectation(const SampledState& state, Direction dir, int l);

/// Operator norm of P_A − P_B for orthonormal sets A and B. Throws
/// std::invalid_argument if a set deviates from orthonormality by more than
/// `orthonormality_tol`.
double projector_distance(std::span<const SampledState> a, std::span<const SampledState> b,
                          double orthonormality_tol = 1e-6);

/// Probability density on the state's closed grid, normalized so the torus
/// integral is 1, with the location of the maximum.
struct DensityMap {
  Eigen::MatrixXd density;  // (nx + 1) × (ny + 1)
  double lx = 0.0;
  double ly = 0.0;
  Eigen::Index argmax_i = 0;
  Eigen::Index argmax_j = 0;
  double argmax_x = 0.0;
  double argmax_y = 0.0;
  int local_maxima = 0;  // strict maxima among the 8 periodic neighbours
};
DensityMap density_map(const SampledState& state);

}  // namespace landau
