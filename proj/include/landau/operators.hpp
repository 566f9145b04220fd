#pragma once

#include <string_view>

#include "landau/sampled.hpp"

namespace landau {

/// Differential operators in the Landau gauge A = (0, Bx) for a particle of
/// charge −e:
///   Mv_x = −i∂x, Mv_y = −i∂y + eBx, P_x = −i∂x + eBy, P_y = −i∂y,
///   R_x = i∂y/(eB), R_y = y − i∂x/(eB),
///   x − R_x = Mv_y/(eB), y − R_y = −Mv_x/(eB),
///   a = √(Mω/2)[(x − R_x) − i(y − R_y)], b = √(Mω/2)(R_x + iR_y),
///   L = x(−i∂y + eBx/2) − y(−i∂x + eBy/2), H = (Mv_x² + Mv_y²)/(2M),
///   r² = (x − R_x)² + (y − R_y)².
enum class Operator {
  Hamiltonian,
  AngularMomentum,
  MomentumX,
  MomentumY,
  CenterX,
  CenterY,
  RelativeX,
  RelativeY,
  VelocityX,
  VelocityY,
  A,
  ADag,
  B,
  BDag,
  RadiusSquared,
};

std::string_view to_string(Operator op);

/// Number of edge nodes whose stencils reach outside a plane patch.
Eigen::Index stencil_margin(Operator op);

/// Fourth-order central finite-difference realization on an open patch. The
/// combinations ∂y + ieBx and ∂x + ieBy are differenced with Peierls phases
/// inside the stencil, so the truncation error does not grow with |x| or |y|.
PlaneState apply_operator(Operator op, const PlaneState& state, const InfiniteConfig& cfg);

/// Same stencils on the torus, with neighbours taken from the twisted periodic
/// continuation. Only gauge-covariant operators (H, a, a†, Mv, x − R_x,
/// y − R_y, r²) map twisted states to twisted states; the others throw
/// std::domain_error.
SampledState apply_operator(Operator op, const SampledState& state);

bool defined_on_torus(Operator op);

}  // namespace landau
