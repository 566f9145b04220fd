#include "landau/sampled.hpp"

#include <cmath>
#include <stdexcept>

namespace landau {

namespace {

Eigen::Index floor_div(Eigen::Index a, Eigen::Index b) {
  Eigen::Index q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

PlaneGrid centered_grid(double cx, double cy, double half_x, double half_y, double max_step) {
  if (!(half_x > 0.0) || !(half_y > 0.0) || !(max_step > 0.0)) {
    throw std::invalid_argument("centered_grid: extents and step must be > 0");
  }
  const auto cells_x = static_cast<Eigen::Index>(std::ceil(2.0 * half_x / max_step));
  const auto cells_y = static_cast<Eigen::Index>(std::ceil(2.0 * half_y / max_step));
  PlaneGrid g;
  g.hx = 2.0 * half_x / static_cast<double>(cells_x);
  g.hy = 2.0 * half_y / static_cast<double>(cells_y);
  g.x0 = cx - half_x;
  g.y0 = cy - half_y;
  g.nx = cells_x + 1;
  g.ny = cells_y + 1;
  return g;
}

PlaneState sample_plane(const PlaneGrid& grid, const Wavefunction& fn) {
  PlaneState s{grid, Eigen::MatrixXcd(grid.nx, grid.ny)};
  for (Eigen::Index j = 0; j < grid.ny; ++j) {
    const double y = grid.y(j);
    for (Eigen::Index i = 0; i < grid.nx; ++i) s.values(i, j) = fn(grid.x(i), y);
  }
  return s;
}

cplx inner_product(const PlaneState& f, const PlaneState& g) {
  if (!(f.grid == g.grid)) throw std::invalid_argument("inner_product: plane grid mismatch");
  const Eigen::Index nx = f.grid.nx;
  const Eigen::Index ny = f.grid.ny;
  Eigen::VectorXd wx = Eigen::VectorXd::Ones(nx);
  Eigen::VectorXd wy = Eigen::VectorXd::Ones(ny);
  wx(0) = wx(nx - 1) = 0.5;
  wy(0) = wy(ny - 1) = 0.5;
  const Eigen::MatrixXcd prod = f.values.conjugate().cwiseProduct(g.values);
  const cplx sum = (wx.transpose().cast<cplx>() * prod * wy.cast<cplx>())(0, 0);
  return sum * f.grid.hx * f.grid.hy;
}

double norm(const PlaneState& s) { return std::sqrt(inner_product(s, s).real()); }

double relative_residual(const PlaneState& lhs, const PlaneState& rhs, cplx scale,
                         Eigen::Index margin) {
  if (!(lhs.grid == rhs.grid)) throw std::invalid_argument("relative_residual: grid mismatch");
  const Eigen::Index nx = lhs.grid.nx - 2 * margin;
  const Eigen::Index ny = lhs.grid.ny - 2 * margin;
  if (nx <= 0 || ny <= 0) throw std::invalid_argument("relative_residual: margin too large");
  const auto a = lhs.values.block(margin, margin, nx, ny);
  const auto b = rhs.values.block(margin, margin, nx, ny);
  const double denom = b.norm();
  if (denom == 0.0) return (a.norm() == 0.0) ? 0.0 : INFINITY;
  return (a - scale * b).norm() / denom;
}

cplx SampledState::extended(Eigen::Index i, Eigen::Index j) const {
  const Eigen::Index n_x = nx();
  const Eigen::Index n_y = ny();
  const Eigen::Index kx = floor_div(i, n_x);
  const Eigen::Index ky = floor_div(j, n_y);
  const Eigen::Index i0 = i - kx * n_x;
  const Eigen::Index j0 = j - ky * n_y;
  cplx v = values(i0, j0);
  if (kx == 0 && ky == 0) return v;
  const double y0 = y(j0);
  const double phase = static_cast<double>(kx) *
                           (config.theta_x() - kTwoPi * config.nphi() * y0 / config.ly()) +
                       static_cast<double>(ky) * config.theta_y();
  return v * std::polar(1.0, phase);
}

SampledState zero_state(const TorusConfig& cfg, Eigen::Index nx, Eigen::Index ny) {
  if (nx < 2 || ny < 2) throw std::invalid_argument("torus grid needs at least 2 cells per side");
  return SampledState{cfg, Eigen::MatrixXcd::Zero(nx + 1, ny + 1)};
}

SampledState sample_torus(const TorusConfig& cfg, Eigen::Index nx, Eigen::Index ny,
                          const Wavefunction& fn) {
  SampledState s = zero_state(cfg, nx, ny);
  for (Eigen::Index j = 0; j <= ny; ++j) {
    const double y = s.y(j);
    for (Eigen::Index i = 0; i <= nx; ++i) s.values(i, j) = fn(s.x(i), y);
  }
  return s;
}

void close_boundary(SampledState& s) {
  const Eigen::Index nx = s.nx();
  const Eigen::Index ny = s.ny();
  for (Eigen::Index j = 0; j <= ny; ++j) s.values(nx, j) = s.extended(nx, j);
  for (Eigen::Index i = 0; i < nx; ++i) s.values(i, ny) = s.extended(i, ny);
}

bool same_grid(const SampledState& a, const SampledState& b) {
  const auto& ca = a.config;
  const auto& cb = b.config;
  return a.values.rows() == b.values.rows() && a.values.cols() == b.values.cols() &&
         ca.mass() == cb.mass() && ca.charge() == cb.charge() && ca.lx() == cb.lx() &&
         ca.ly() == cb.ly() && ca.nphi() == cb.nphi() && ca.theta_x() == cb.theta_x() &&
         ca.theta_y() == cb.theta_y();
}

cplx inner_product(const SampledState& f, const SampledState& g) {
  if (!same_grid(f, g)) throw std::invalid_argument("inner_product: torus grid mismatch");
  const auto a = f.values.topLeftCorner(f.nx(), f.ny());
  const auto b = g.values.topLeftCorner(g.nx(), g.ny());
  return a.conjugate().cwiseProduct(b).sum() * f.hx() * f.hy();
}

double norm(const SampledState& s) { return std::sqrt(inner_product(s, s).real()); }

SampledState normalized(SampledState s) {
  const double n = norm(s);
  if (!(n > 0.0)) throw std::domain_error("cannot normalize a null state");
  s.values /= n;
  return s;
}

}  // namespace landau
