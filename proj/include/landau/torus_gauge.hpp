#pragma once

#include <functional>

#include "landau/config.hpp"
#include "landau/sampled.hpp"

namespace landau {

/// Gauge functions gluing the torus boundaries:
///   A(x + Lx, y) = A(x, y) − ∇φ_x(y),  A(x, y + Ly) = A(x, y) − ∇φ_y(x).
struct TransitionFunctions {
  std::function<double(double)> phi_x;  // function of y
  std::function<double(double)> phi_y;  // function of x
};

/// φ_x(y) = θx/e − B Lx y, φ_y(x) = θy/e.
TransitionFunctions standard_transition_functions(const TorusConfig& cfg);

/// exp(ieΦ_x(y)) = exp(i eB Lx y − iθx).
cplx polyakov_phase_x(const TorusConfig& cfg, double y);
/// exp(ieΦ_y(x)) = exp(i eB Ly x − iθy).
cplx polyakov_phase_y(const TorusConfig& cfg, double x);

/// φ_y(x + Lx) + φ_x(y) − φ_x(y + Ly) − φ_y(x); equals 2π nΦ/e for a
/// consistent bundle.
double cocycle_defect(const TransitionFunctions& tf, const TorusConfig& cfg, double x = 0.0,
                      double y = 0.0);

/// |e^{−ieB Lx Ly} − 1|: mismatch between applying the x- and y-boundary
/// conditions in the two orders. Zero iff the flux e B Lx Ly / 2π is an integer.
double corner_consistency_defect(double charge, double field, double lx, double ly);

/// Field that puts `flux_quanta` (not necessarily integer) through the torus.
double field_for_flux(double charge, double lx, double ly, double flux_quanta);

/// max over boundary nodes of
///   |Ψ(Lx, y) − e^{iθx − 2πi ν y/Ly} Ψ(0, y)|  and  |Ψ(x, Ly) − e^{iθy} Ψ(x, 0)|
/// relative to max |Ψ|, with ν = nΦ. Zero for the null state.
double boundary_residual(const SampledState& state);

/// Same functional with a prescribed (possibly non-integer) flux ν.
double boundary_residual(const SampledState& state, double flux_quanta);

/// Fills the closing lines of `state` from its interior using the x-twist with
/// flux ν first and then the y-twist. With non-integer ν the corner node cannot
/// satisfy both conditions, which boundary_residual then reports.
void close_with_flux(SampledState& state, double flux_quanta);

}  // namespace landau
