#pragma once

#include <cmath>
#include <complex>

#include "teichlab/util/error.hpp"

namespace teichlab::hyp {

/// Extended real boundary point of the upper half-plane.
struct ExtendedReal {
  double value = 0.0;
  bool infinite = false;

  static ExtendedReal finite(double x) { return {x, false}; }
  static ExtendedReal inf() { return {0.0, true}; }
};

inline bool same_boundary_point(const ExtendedReal& a, const ExtendedReal& b,
                                double tol = 0.0) {
  if (a.infinite || b.infinite) return a.infinite && b.infinite;
  return std::abs(a.value - b.value) <= tol;
}

/// Upper half-plane with the Teichmueller normalization: distance is one half
/// of the curvature -1 hyperbolic distance, so that e^{2d} equals the
/// extremal-length ratio supremum on the torus model.
class HalfPlane {
 public:
  using Point = std::complex<double>;

  explicit HalfPlane(Point base = Point(0.0, 1.0)) : base_(base) {
    require_interior(base);
  }

  static void require_interior(const Point& tau) {
    if (!(tau.imag() > 0.0)) throw input_error("point not in the upper half-plane");
  }

  double distance(const Point& t1, const Point& t2) const {
    require_interior(t1);
    require_interior(t2);
    const double s = std::norm(t1 - t2) / (2.0 * t1.imag() * t2.imag());
    return 0.5 * std::acosh(1.0 + s);
  }

  Point base() const { return base_; }

 private:
  Point base_;
};

/// Half-plane distance as a free function (the op surface).
inline double hyp_distance(const std::complex<double>& t1,
                           const std::complex<double>& t2) {
  return HalfPlane(std::complex<double>(0.0, 1.0)).distance(t1, t2);
}

/// Real Moebius transformation, optionally precomposed with tau -> conj(tau)
/// (the orientation-reversing case). Coefficients are kept with |det| = 1.
struct Moebius {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
  bool conjugate = false;

  static Moebius from_coeffs(double a, double b, double c, double d) {
    const double det = a * d - b * c;
    if (det == 0.0) throw input_error("Moebius coefficients are singular");
    const double s = 1.0 / std::sqrt(std::abs(det));
    Moebius m{a * s, b * s, c * s, d * s, det < 0.0};
    return m;
  }

  static Moebius identity() { return {}; }

  double det() const { return a * d - b * c; }

  std::complex<double> operator()(std::complex<double> tau) const {
    if (conjugate) tau = std::conj(tau);
    return (a * tau + b) / (c * tau + d);
  }

  ExtendedReal boundary(const ExtendedReal& xi) const {
    if (xi.infinite) {
      if (c == 0.0) return ExtendedReal::inf();
      return ExtendedReal::finite(a / c);
    }
    const double den = c * xi.value + d;
    if (den == 0.0) return ExtendedReal::inf();
    return ExtendedReal::finite((a * xi.value + b) / den);
  }

  /// (f.compose(g))(tau) = f(g(tau)). Real matrices commute with conjugation,
  /// so the matrices multiply and the flags add mod 2.
  Moebius compose(const Moebius& g) const {
    return {a * g.a + b * g.c, a * g.b + b * g.d, c * g.a + d * g.c,
            c * g.b + d * g.d, conjugate != g.conjugate};
  }

  Moebius inverse() const {
    const double dt = det();
    return {d / dt, -b / dt, -c / dt, a / dt, conjugate};
  }
};

/// Point at parameter t >= 0 on the geodesic ray from tau0 toward the
/// boundary point xi, with t measured in the half-distance normalization
/// (so the curvature -1 arclength is 2t).
inline std::complex<double> geodesic_ray(std::complex<double> tau0,
                                         const ExtendedReal& xi, double t) {
  HalfPlane::require_interior(tau0);
  if (t < 0.0) throw input_error("ray parameter must be nonnegative");
  const double growth = std::exp(2.0 * t);
  if (xi.infinite)
    return std::complex<double>(tau0.real(), tau0.imag() * growth);
  // Send xi to infinity by w = -1/(tau - xi), ride the vertical ray, pull back.
  const std::complex<double> w = -1.0 / (tau0 - xi.value);
  const std::complex<double> wt(w.real(), w.imag() * growth);
  return xi.value - 1.0 / wt;
}

}  // namespace teichlab::hyp
