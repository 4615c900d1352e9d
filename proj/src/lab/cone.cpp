#include "teichlab/lab/cone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace teichlab::lab {

SubadditivityReport subadditivity_check(const std::vector<torus::TorusPoint>& y_points,
                                        const torus::Slope& slope, double t, double u,
                                        const torus::TorusPoint& base) {
  if (y_points.empty()) throw input_error("subadditivity_check needs sample points");
  if (!(t > 0.0) || !(u > 0.0)) throw input_error("weights must be positive");
  SubadditivityReport rep;
  rep.min_upper_gap = std::numeric_limits<double>::infinity();
  for (const auto& y : y_points) {
    const double k_y = std::exp(2.0 * torus::teich_distance(base, y));
    const double e_slope = std::sqrt(torus::ext_length(y, slope) / k_y);
    SubadditivityRow row;
    row.y = y;
    const double f = t * e_slope, g = u * e_slope;
    row.lower = std::sqrt(f * f + g * g);
    row.mid = (t + u) * e_slope;
    row.upper = f + g;
    if (row.lower > row.mid * (1.0 + 1e-12) || row.mid > row.upper * (1.0 + 1e-12))
      rep.holds = false;
    rep.max_lower_gap = std::max(rep.max_lower_gap, row.mid - row.lower);
    rep.min_upper_gap = std::min(rep.min_upper_gap, row.upper - row.mid);
    rep.rows.push_back(row);
  }
  return rep;
}

double interior_functional_ext(const torus::TorusPoint& y, const torus::TorusPoint& z,
                               const torus::TorusPoint& base) {
  const double gp = 0.5 * (torus::teich_distance(base, y) + torus::teich_distance(base, z) -
                           torus::teich_distance(y, z));
  return std::exp(2.0 * torus::teich_distance(base, y)) * std::exp(-4.0 * gp);
}

ConeExtLengthResult cone_ext_length(const torus::TorusPoint& y,
                                    const torus::GMFunctional& functional,
                                    const std::vector<torus::Slope>& slope_set,
                                    const std::vector<torus::TorusPoint>& partners) {
  if (slope_set.empty()) throw input_error("cone_ext_length needs a slope set");
  torus::require_torus_point(y);
  ConeExtLengthResult out;
  for (const auto& s : slope_set) {
    const double v = functional.value(s);
    const double cand = v * v / torus::ext_length(y, s);
    if (cand > out.value) {
      out.value = cand;
      out.witness = s;
    }
  }

  // Generalized Minsky against interior partners: i(a,b)^2 <= Ext_y(a) Ext_y(b),
  // with the interior extremal lengths in closed form and Ext_y(a) realized
  // as the slope-set supremum (an under-estimate, kept on the safe side).
  const auto& base = functional.base();
  for (const auto& z : partners) {
    double pairing = 0.0;
    double ext_a = 0.0;
    if (functional.tag() == torus::GMFunctional::Tag::interior) {
      pairing = torus::i_x0(functional.point(), z, base);
      ext_a = interior_functional_ext(y, functional.point(), base);
    } else {
      // Boundary functional of direction (dx, dy):
      //   i(a, Psi(z)) = sqrt(Ext_z(dir) / K_z) / sqrt(Ext_{x0}(dir))
      //   Ext_y(a)     = Ext_y(dir) / Ext_{x0}(dir)
      const double dx = functional.direction_x(), dy = functional.direction_y();
      const double k_z = std::exp(2.0 * torus::teich_distance(base, z));
      const double ext0 = torus::ext_length_dir(base, dx, dy);
      pairing = std::sqrt(torus::ext_length_dir(z, dx, dy) / k_z) / std::sqrt(ext0);
      ext_a = torus::ext_length_dir(y, dx, dy) / ext0;
    }
    const double ext_b = interior_functional_ext(y, z, base);
    const double ratio = pairing * pairing / (ext_a * ext_b);
    out.worst_minsky_ratio = std::max(out.worst_minsky_ratio, ratio);
    if (ratio > 1.0 + 1e-9) out.generalized_minsky_ok = false;
  }
  return out;
}

}  // namespace teichlab::lab
