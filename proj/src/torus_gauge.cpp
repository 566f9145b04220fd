#include "landau/torus_gauge.hpp"

#include <cmath>

namespace landau {

TransitionFunctions standard_transition_functions(const TorusConfig& cfg) {
  const double e = cfg.charge();
  const double b = cfg.field();
  const double lx = cfg.lx();
  const double tx = cfg.theta_x();
  const double ty = cfg.theta_y();
  return {[=](double y) { return tx / e - b * lx * y; }, [=](double) { return ty / e; }};
}

cplx polyakov_phase_x(const TorusConfig& cfg, double y) {
  return std::polar(1.0, cfg.charge() * cfg.field() * cfg.lx() * y - cfg.theta_x());
}

cplx polyakov_phase_y(const TorusConfig& cfg, double x) {
  return std::polar(1.0, cfg.charge() * cfg.field() * cfg.ly() * x - cfg.theta_y());
}

double cocycle_defect(const TransitionFunctions& tf, const TorusConfig& cfg, double x, double y) {
  return tf.phi_y(x + cfg.lx()) + tf.phi_x(y) - tf.phi_x(y + cfg.ly()) - tf.phi_y(x);
}

double corner_consistency_defect(double charge, double field, double lx, double ly) {
  return std::abs(std::polar(1.0, -charge * field * lx * ly) - 1.0);
}

double field_for_flux(double charge, double lx, double ly, double flux_quanta) {
  return kTwoPi * flux_quanta / (charge * lx * ly);
}

double boundary_residual(const SampledState& state, double flux_quanta) {
  const double scale = state.values.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  const Eigen::Index nx = state.nx();
  const Eigen::Index ny = state.ny();
  const TorusConfig& cfg = state.config;
  double worst = 0.0;
  for (Eigen::Index j = 0; j <= ny; ++j) {
    const cplx twist =
        std::polar(1.0, cfg.theta_x() - kTwoPi * flux_quanta * state.y(j) / cfg.ly());
    worst = std::max(worst, std::abs(state.values(nx, j) - twist * state.values(0, j)));
  }
  const cplx twist_y = std::polar(1.0, cfg.theta_y());
  for (Eigen::Index i = 0; i <= nx; ++i) {
    worst = std::max(worst, std::abs(state.values(i, ny) - twist_y * state.values(i, 0)));
  }
  return worst / scale;
}

double boundary_residual(const SampledState& state) {
  return boundary_residual(state, static_cast<double>(state.config.nphi()));
}

void close_with_flux(SampledState& state, double flux_quanta) {
  const Eigen::Index nx = state.nx();
  const Eigen::Index ny = state.ny();
  const TorusConfig& cfg = state.config;
  for (Eigen::Index i = 0; i < nx; ++i) {
    state.values(i, ny) = std::polar(1.0, cfg.theta_y()) * state.values(i, 0);
  }
  for (Eigen::Index j = 0; j <= ny; ++j) {
    state.values(nx, j) =
        std::polar(1.0, cfg.theta_x() - kTwoPi * flux_quanta * state.y(j) / cfg.ly()) *
        state.values(0, j);
  }
}

}  // namespace landau
