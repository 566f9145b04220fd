#include "landau/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace landau {

namespace {

constexpr Eigen::Index kPad = 2;
const cplx kI{0.0, 1.0};

struct Derivatives {
  Eigen::MatrixXcd dx, dy, dxx;
  // Gauge-covariant derivatives with the Peierls phase folded into the
  // stencil: cov_y = ∂y + ieBx, cov_yy = (∂y + ieBx)², cov_x = ∂x + ieBy.
  Eigen::MatrixXcd cov_x, cov_y, cov_yy;
};

// padded has kPad ghost layers on every side.
Derivatives derivatives(const Eigen::MatrixXcd& padded, const Eigen::VectorXd& xs,
                        const Eigen::VectorXd& ys, double hx, double hy, double eb) {
  const Eigen::Index nx = padded.rows() - 2 * kPad;
  const Eigen::Index ny = padded.cols() - 2 * kPad;
  auto at = [&](Eigen::Index di, Eigen::Index dj) -> Eigen::MatrixXcd {
    return padded.block(kPad + di, kPad + dj, nx, ny);
  };
  // shifted(k) = e^{ieB x k hy} Ψ(x, y + k hy), shifted_x(k) = e^{ieB y k hx} Ψ(x + k hx, y)
  auto shifted_y = [&](Eigen::Index k) -> Eigen::MatrixXcd {
    Eigen::VectorXcd ph(nx);
    for (Eigen::Index i = 0; i < nx; ++i) ph(i) = std::polar(1.0, eb * xs(i) * double(k) * hy);
    return ph.asDiagonal() * at(0, k);
  };
  auto shifted_x = [&](Eigen::Index k) -> Eigen::MatrixXcd {
    Eigen::VectorXcd ph(ny);
    for (Eigen::Index j = 0; j < ny; ++j) ph(j) = std::polar(1.0, eb * ys(j) * double(k) * hx);
    return at(k, 0) * ph.asDiagonal();
  };
  Derivatives d;
  d.dx = (-at(2, 0) + 8.0 * at(1, 0) - 8.0 * at(-1, 0) + at(-2, 0)) / (12.0 * hx);
  d.dy = (-at(0, 2) + 8.0 * at(0, 1) - 8.0 * at(0, -1) + at(0, -2)) / (12.0 * hy);
  d.dxx = (-at(2, 0) + 16.0 * at(1, 0) - 30.0 * at(0, 0) + 16.0 * at(-1, 0) - at(-2, 0)) /
          (12.0 * hx * hx);
  const Eigen::MatrixXcd yp1 = shifted_y(1), ym1 = shifted_y(-1), yp2 = shifted_y(2),
                         ym2 = shifted_y(-2);
  d.cov_y = (-yp2 + 8.0 * yp1 - 8.0 * ym1 + ym2) / (12.0 * hy);
  d.cov_yy = (-yp2 + 16.0 * yp1 - 30.0 * at(0, 0) + 16.0 * ym1 - ym2) / (12.0 * hy * hy);
  d.cov_x = (-shifted_x(2) + 8.0 * shifted_x(1) - 8.0 * shifted_x(-1) + shifted_x(-2)) /
            (12.0 * hx);
  return d;
}

// A discretized patch: node coordinates plus a rule for ghost values.
struct Patch {
  Eigen::VectorXd xs;
  Eigen::VectorXd ys;
  double hx;
  double hy;
  double mass;
  double eb;
  std::function<Eigen::MatrixXcd(const Eigen::MatrixXcd&)> pad;
};

Eigen::MatrixXcd apply_on_patch(Operator op, const Eigen::MatrixXcd& v, const Patch& p) {
  const Eigen::Index nx = v.rows();
  const Eigen::Index ny = v.cols();
  const Derivatives d = derivatives(p.pad(v), p.xs, p.ys, p.hx, p.hy, p.eb);
  const Eigen::MatrixXcd X = p.xs.cast<cplx>().replicate(1, ny);
  const Eigen::MatrixXcd Y = p.ys.transpose().cast<cplx>().replicate(nx, 1);
  const double c = std::sqrt(p.eb / 2.0);  // √(Mω/2), Mω = eB
  const double eb = p.eb;

  // x − R_x = −(i/eB)(∂y + ieBx), R_y = −(i/eB)(∂x + ieBy)
  auto relative_x = [&]() -> Eigen::MatrixXcd { return (-kI / eb) * d.cov_y; };
  auto relative_y = [&]() -> Eigen::MatrixXcd { return (kI / eb) * d.dx; };
  auto center_x = [&]() -> Eigen::MatrixXcd { return (kI / eb) * d.dy; };
  auto center_y = [&]() -> Eigen::MatrixXcd { return (-kI / eb) * d.cov_x; };

  switch (op) {
    case Operator::Hamiltonian:
      return -(d.dxx + d.cov_yy) / (2.0 * p.mass);
    case Operator::AngularMomentum: {
      const Eigen::MatrixXcd ty = -kI * d.dy + 0.5 * eb * X.cwiseProduct(v);
      const Eigen::MatrixXcd tx = -kI * d.dx + 0.5 * eb * Y.cwiseProduct(v);
      return X.cwiseProduct(ty) - Y.cwiseProduct(tx);
    }
    case Operator::MomentumX:
      return -kI * d.cov_x;
    case Operator::MomentumY:
      return -kI * d.dy;
    case Operator::CenterX:
      return center_x();
    case Operator::CenterY:
      return center_y();
    case Operator::RelativeX:
      return relative_x();
    case Operator::RelativeY:
      return relative_y();
    case Operator::VelocityX:
      return -kI * d.dx;
    case Operator::VelocityY:
      return -kI * d.cov_y;
    case Operator::A:
      return c * (relative_x() - kI * relative_y());
    case Operator::ADag:
      return c * (relative_x() + kI * relative_y());
    case Operator::B:
      return c * (center_x() + kI * center_y());
    case Operator::BDag:
      return c * (center_x() - kI * center_y());
    case Operator::RadiusSquared: {
      const Eigen::MatrixXcd rx = relative_x();
      const Eigen::MatrixXcd ry = relative_y();
      return apply_on_patch(Operator::RelativeX, rx, p) +
             apply_on_patch(Operator::RelativeY, ry, p);
    }
  }
  throw std::logic_error("unhandled operator");
}

}  // namespace

std::string_view to_string(Operator op) {
  switch (op) {
    case Operator::Hamiltonian: return "H";
    case Operator::AngularMomentum: return "L";
    case Operator::MomentumX: return "Px";
    case Operator::MomentumY: return "Py";
    case Operator::CenterX: return "Rx";
    case Operator::CenterY: return "Ry";
    case Operator::RelativeX: return "x-Rx";
    case Operator::RelativeY: return "y-Ry";
    case Operator::VelocityX: return "Mvx";
    case Operator::VelocityY: return "Mvy";
    case Operator::A: return "a";
    case Operator::ADag: return "a+";
    case Operator::B: return "b";
    case Operator::BDag: return "b+";
    case Operator::RadiusSquared: return "r2";
  }
  return "?";
}

Eigen::Index stencil_margin(Operator op) {
  return op == Operator::RadiusSquared ? 2 * kPad : kPad;
}

bool defined_on_torus(Operator op) {
  switch (op) {
    case Operator::Hamiltonian:
    case Operator::RelativeX:
    case Operator::RelativeY:
    case Operator::VelocityX:
    case Operator::VelocityY:
    case Operator::A:
    case Operator::ADag:
    case Operator::RadiusSquared:
      return true;
    default:
      return false;
  }
}

PlaneState apply_operator(Operator op, const PlaneState& state, const InfiniteConfig& cfg) {
  const PlaneGrid& g = state.grid;
  if (g.nx < 2 * kPad + 1 || g.ny < 2 * kPad + 1) {
    throw std::invalid_argument("apply_operator: plane grid too small for the stencil");
  }
  Patch p;
  p.xs = Eigen::VectorXd::LinSpaced(g.nx, g.x(0), g.x(g.nx - 1));
  p.ys = Eigen::VectorXd::LinSpaced(g.ny, g.y(0), g.y(g.ny - 1));
  p.hx = g.hx;
  p.hy = g.hy;
  p.mass = cfg.mass;
  p.eb = cfg.charge * cfg.field;
  p.pad = [](const Eigen::MatrixXcd& v) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(v.rows() + 2 * kPad, v.cols() + 2 * kPad);
    out.block(kPad, kPad, v.rows(), v.cols()) = v;
    return out;
  };
  return PlaneState{g, apply_on_patch(op, state.values, p)};
}

SampledState apply_operator(Operator op, const SampledState& state) {
  if (!defined_on_torus(op)) {
    throw std::domain_error(std::string("operator ") + std::string(to_string(op)) +
                            " does not preserve the torus boundary condition");
  }
  const Eigen::Index nx = state.nx();
  const Eigen::Index ny = state.ny();
  if (nx < 2 * kPad + 1 || ny < 2 * kPad + 1) {
    throw std::invalid_argument("apply_operator: torus grid too small for the stencil");
  }
  const TorusConfig& cfg = state.config;
  Patch p;
  p.xs = Eigen::VectorXd(nx);
  p.ys = Eigen::VectorXd(ny);
  for (Eigen::Index i = 0; i < nx; ++i) p.xs(i) = state.x(i);
  for (Eigen::Index j = 0; j < ny; ++j) p.ys(j) = state.y(j);
  p.hx = state.hx();
  p.hy = state.hy();
  p.mass = cfg.mass();
  p.eb = cfg.charge() * cfg.field();
  p.pad = [&cfg, nx, ny](const Eigen::MatrixXcd& v) {
    SampledState tmp{cfg, Eigen::MatrixXcd::Zero(nx + 1, ny + 1)};
    tmp.values.topLeftCorner(nx, ny) = v;
    Eigen::MatrixXcd out(nx + 2 * kPad, ny + 2 * kPad);
    for (Eigen::Index j = 0; j < out.cols(); ++j) {
      for (Eigen::Index i = 0; i < out.rows(); ++i) {
        out(i, j) = tmp.extended(i - kPad, j - kPad);
      }
    }
    return out;
  };
  SampledState out = zero_state(cfg, nx, ny);
  out.values.topLeftCorner(nx, ny) = apply_on_patch(op, state.values.topLeftCorner(nx, ny), p);
  close_boundary(out);
  return out;
}

}  // namespace landau
