#pragma once

#include <cstdint>

#include "teichlab/torus/extremal.hpp"

namespace teichlab::torus {

/// Integer matrix with det = +-1 acting on the torus model: det +1 by the
/// Moebius rule on tau, det -1 by the conjugate-Moebius rule; linearly on
/// slopes either way. The action is a Teichmueller-distance isometry and
/// satisfies Ext_{A tau}(A s) = Ext_tau(s).
struct McgMatrix {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static McgMatrix of(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    const std::int64_t det = a * d - b * c;
    if (det != 1 && det != -1)
      throw input_error("mapping class matrix must have det = +-1");
    return {a, b, c, d};
  }

  std::int64_t det() const { return a * d - b * c; }

  McgMatrix compose(const McgMatrix& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
            c * o.b + d * o.d};
  }

  McgMatrix inverse() const {
    const std::int64_t dt = det();
    return {d * dt, -b * dt, -c * dt, a * dt};
  }
};

inline TorusPoint mcg_act(const McgMatrix& m, const TorusPoint& tau) {
  require_torus_point(tau);
  const std::complex<double> z = m.det() == 1 ? tau : std::conj(tau);
  return (static_cast<double>(m.a) * z + static_cast<double>(m.b)) /
         (static_cast<double>(m.c) * z + static_cast<double>(m.d));
}

/// Slope action (p, q) -> (a p - b q, d q - c p); equivariant with the
/// boundary identification -p/q -> Moebius(-p/q) of the tau action.
inline Slope mcg_act_slope(const McgMatrix& m, const Slope& s) {
  return Slope::of(m.a * s.p - m.b * s.q, m.d * s.q - m.c * s.p);
}

}  // namespace teichlab::torus
