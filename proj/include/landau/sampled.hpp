#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>

#include "landau/config.hpp"

namespace landau {

using cplx = std::complex<double>;

/// Analytic amplitude Ψ(x, y).
using Wavefunction = std::function<cplx(double, double)>;

/// Uniform rectangular grid of nodes (x0 + i hx, y0 + j hy), i < nx, j < ny.
struct PlaneGrid {
  double x0 = 0.0;
  double y0 = 0.0;
  double hx = 1.0;
  double hy = 1.0;
  Eigen::Index nx = 0;
  Eigen::Index ny = 0;

  double x(Eigen::Index i) const { return x0 + static_cast<double>(i) * hx; }
  double y(Eigen::Index j) const { return y0 + static_cast<double>(j) * hy; }
  bool operator==(const PlaneGrid&) const = default;
};

/// Grid covering [cx − half_x, cx + half_x] × [cy − half_y, cy + half_y] with
/// spacing at most `max_step` in both directions.
PlaneGrid centered_grid(double cx, double cy, double half_x, double half_y, double max_step);

/// Amplitudes on an open patch of the plane. Values outside the patch are
/// treated as zero by the finite-difference operators.
struct PlaneState {
  PlaneGrid grid;
  Eigen::MatrixXcd values;  // values(i, j) = Ψ(x_i, y_j)
};

PlaneState sample_plane(const PlaneGrid& grid, const Wavefunction& fn);

/// 2-D trapezoidal ∫ f* g over the patch.
cplx inner_product(const PlaneState& f, const PlaneState& g);
double norm(const PlaneState& s);

/// ‖lhs − scale·rhs‖ / ‖rhs‖ restricted to nodes at least `margin` away from
/// the patch edge.
double relative_residual(const PlaneState& lhs, const PlaneState& rhs, cplx scale,
                         Eigen::Index margin);

/// Amplitudes on the closed fundamental domain [0, Lx] × [0, Ly] of the torus,
/// (nx + 1) × (ny + 1) nodes including both boundary lines.
struct SampledState {
  TorusConfig config;
  Eigen::MatrixXcd values;  // values(i, j) = Ψ(i hx, j hy)

  Eigen::Index nx() const { return values.rows() - 1; }
  Eigen::Index ny() const { return values.cols() - 1; }
  double hx() const { return config.lx() / static_cast<double>(nx()); }
  double hy() const { return config.ly() / static_cast<double>(ny()); }
  double x(Eigen::Index i) const { return static_cast<double>(i) * hx(); }
  double y(Eigen::Index j) const { return static_cast<double>(j) * hy(); }

  /// Ψ at node (i, j) for any integers, continued from the interior block
  /// [0, nx) × [0, ny) with the twisted boundary condition
  ///   Ψ(x + Lx, y) = e^{iθx − 2πi nΦ y/Ly} Ψ(x, y),  Ψ(x, y + Ly) = e^{iθy} Ψ(x, y).
  cplx extended(Eigen::Index i, Eigen::Index j) const;
};

/// Zero state on an nx × ny cell grid. Throws if nx or ny < 2.
SampledState zero_state(const TorusConfig& cfg, Eigen::Index nx, Eigen::Index ny);

SampledState sample_torus(const TorusConfig& cfg, Eigen::Index nx, Eigen::Index ny,
                          const Wavefunction& fn);

/// Overwrites the boundary lines i = nx and j = ny from the interior block.
void close_boundary(SampledState& s);

/// Periodic trapezoid: hx hy Σ over the interior block, so the duplicated
/// boundary lines are not double counted. Throws on grid/config mismatch.
cplx inner_product(const SampledState& f, const SampledState& g);
double norm(const SampledState& s);

/// Returns s / ‖s‖; throws std::domain_error on a null state.
SampledState normalized(SampledState s);

/// True when the two states share torus parameters and grid dimensions.
bool same_grid(const SampledState& a, const SampledState& b);

}  // namespace landau
