#pragma once

#include "teichlab/hyp/halfplane.hpp"
#include "teichlab/torus/extremal.hpp"

namespace teichlab::torus {

/// Ideal endpoint of the ray that contracts the direction (x, y):
/// the boundary point -x/y (infinity for horizontal slopes). Along the ray
/// Ext(x, y) decays like e^{-2t}.
inline hyp::ExtendedReal slope_boundary_point_dir(double x, double y) {
  if (y == 0.0) return hyp::ExtendedReal::inf();
  return hyp::ExtendedReal::finite(-x / y);
}

inline hyp::ExtendedReal slope_boundary_point(const Slope& s) {
  return slope_boundary_point_dir(static_cast<double>(s.p), static_cast<double>(s.q));
}

/// Point at Teichmueller distance t from tau0 along the geodesic ray toward
/// the boundary point of the direction; calibrated so that
/// Ext_{R(t)}(direction) = e^{-2t} Ext_{tau0}(direction) exactly.
inline TorusPoint teich_ray_dir(const TorusPoint& tau0, double x, double y, double t) {
  require_torus_point(tau0);
  if (t < 0.0) throw input_error("ray parameter must be nonnegative");
  if (x == 0.0 && y == 0.0) throw input_error("ray needs a nonzero direction");
  return hyp::geodesic_ray(tau0, slope_boundary_point_dir(x, y), t);
}

inline TorusPoint teich_ray(const TorusPoint& tau0, const Slope& s, double t) {
  return teich_ray_dir(tau0, static_cast<double>(s.p), static_cast<double>(s.q), t);
}

}  // namespace teichlab::torus
