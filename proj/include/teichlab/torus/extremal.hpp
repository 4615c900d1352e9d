#pragma once

#include <complex>

#include "teichlab/hyp/halfplane.hpp"
#include "teichlab/torus/slope.hpp"

namespace teichlab::torus {

using TorusPoint = std::complex<double>;

/// Default base point x0 of the model.
inline constexpr TorusPoint kBasePoint{0.0, 1.0};

inline void require_torus_point(const TorusPoint& tau) {
  hyp::HalfPlane::require_interior(tau);
}

/// Teichmueller distance between marked flat tori; equals half of the
/// curvature -1 hyperbolic distance, matching Kerckhoff's formula exactly.
inline double teich_distance(const TorusPoint& t1, const TorusPoint& t2) {
  return hyp::hyp_distance(t1, t2);
}

/// Extremal length of the direction vector (x, y): |x + y tau|^2 / Im tau.
/// For a slope this is the reciprocal modulus of its characteristic annulus
/// on the flat torus C / (Z + tau Z).
double ext_length_dir(const TorusPoint& tau, double x, double y);

inline double ext_length(const TorusPoint& tau, const Slope& s) {
  return ext_length_dir(tau, static_cast<double>(s.p), static_cast<double>(s.q));
}

/// Degree-2 homogeneous extension to weighted curves: Ext(t a) = t^2 Ext(a).
inline double ext_length(const TorusPoint& tau, const Slope& s, double weight) {
  return weight * weight * ext_length(tau, s);
}

struct MinskyReport {
  double lhs = 0.0;  // i(s1,s2)^2
  double rhs = 0.0;  // Ext(s1) Ext(s2)
  bool holds = false;
  bool equality = false;
};

/// i(s1,s2)^2 <= Ext_tau(s1) Ext_tau(s2), with equality exactly when
/// (p1 + q1 tau) conj(p2 + q2 tau) is purely imaginary.
MinskyReport minsky_check(const TorusPoint& tau, const Slope& s1, const Slope& s2,
                          double equality_tol = 1e-9);

struct KerckhoffResult {
  double value = 0.0;      // half the log of the best ratio found
  double sup_ratio = 1.0;  // the ratio itself
  Slope witness{1, 0};     // slope attaining the scan maximum
};

/// Distance via the extremal-length ratio supremum: a bounded-denominator
/// scan over slopes with |q| <= max_denominator (each denominator maximized
/// exactly around the critical directions of the ratio), refined by
/// Stern-Brocot mediant descent around the best direction. Monotone
/// non-decreasing in max_denominator.
KerckhoffResult kerckhoff_distance(const TorusPoint& t1, const TorusPoint& t2,
                                   std::int64_t max_denominator);

}  // namespace teichlab::torus
