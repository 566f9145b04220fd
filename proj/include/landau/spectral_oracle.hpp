#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <vector>

#include "landau/config.hpp"
#include "landau/sampled.hpp"

namespace landau {

/// Five-point magnetic Laplacian on an Nx × Ny periodic grid with Peierls
/// phases on y-links and the twisted closure on wraparound links.
/// Site (i, j) has index i + Nx j and sits at (i Lx/Nx, j Ly/Ny).
struct DiscreteHamiltonian {
  TorusConfig config;
  Eigen::Index nx = 0;
  Eigen::Index ny = 0;
  bool with_flux = true;
  Eigen::SparseMatrix<cplx> matrix;

  Eigen::Index dimension() const { return nx * ny; }
  Eigen::Index index(Eigen::Index i, Eigen::Index j) const { return i + nx * j; }
};

/// Requires nx, ny ≥ 8 nΦ. With with_flux = false the field and the flux part
/// of the x-twist are dropped, leaving a free particle with Bloch phases θx, θy.
DiscreteHamiltonian build_hamiltonian(const TorusConfig& cfg, Eigen::Index nx,
                                      Eigen::Index ny, bool with_flux = true);

/// max |H − H†| over stored entries.
double hermiticity_defect(const DiscreteHamiltonian& h);

/// Lowest eigenvalue of the free twisted discretization:
///   (1 − cos(kx hx))/(M hx²) + (1 − cos(ky hy))/(M hy²),
/// kx = θx/Lx, ky = θy/Ly, with θ taken in (−π, π].
double free_ground_energy(const TorusConfig& cfg, Eigen::Index nx, Eigen::Index ny);

struct EnergyCluster {
  double mean = 0.0;
  double spread = 0.0;  // max − min
  int multiplicity = 0;
  int level = -1;          // nearest Landau index, −1 without flux
  double reference = 0.0;  // ω(level + 1/2)
  double relative_deviation = 0.0;
};

struct SpectrumReport {
  std::vector<double> eigenvalues;  // ascending
  std::vector<EnergyCluster> clusters;
  Eigen::MatrixXcd eigenvectors;  // dimension × k, orthonormal in ℓ²
  double max_residual = 0.0;      // max ‖Hv − λv‖
  int iterations = 0;             // 0 for the dense path
  bool dense = false;
};

struct SolverOptions {
  Eigen::Index dense_limit = 1024;
  double tolerance = 1e-10;  // residual relative to the largest wanted eigenvalue
  int max_iterations = 500;
  unsigned seed = 12345;
  double cluster_ratio = 10.0;
};

/// k smallest eigenpairs with clustering. Requires 1 ≤ k ≤ dimension/4. Throws
/// std::runtime_error when the iterative solver does not converge.
SpectrumReport low_spectrum(const DiscreteHamiltonian& h, int k, const SolverOptions& opts = {});

/// Groups ascending values: separators are the r largest gaps, with r chosen to
/// maximize min(separator)/max(intra spread); a split is accepted only when the
/// ratio exceeds `ratio`. Without an accepted split all values form one cluster.
std::vector<EnergyCluster> cluster_eigenvalues(const std::vector<double>& values, double ratio);

/// Attaches Landau references ω(n + 1/2) to clusters.
void assign_levels(std::vector<EnergyCluster>& clusters, double omega);

/// Eigenvector column as a unit-norm sampled torus state on the same nodes.
SampledState eigenvector_state(const DiscreteHamiltonian& h, const SpectrumReport& report,
                               Eigen::Index column);

}  // namespace landau
