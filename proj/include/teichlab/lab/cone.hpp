#pragma once

#include <vector>

#include "teichlab/torus/gm.hpp"

namespace teichlab::lab {

struct SubadditivityRow {
  torus::TorusPoint y{0.0, 1.0};
  double lower = 0.0;  // sqrt(i(a,F)^2 + i(a,G)^2)
  double mid = 0.0;    // i(a, F+G)
  double upper = 0.0;  // i(a,F) + i(a,G)
};

struct SubadditivityReport {
  bool holds = true;
  double max_lower_gap = 0.0;  // max of mid - lower
  double min_upper_gap = 0.0;  // min of upper - mid
  std::vector<SubadditivityRow> rows;
};

/// sqrt(i(a,F)^2 + i(a,G)^2) <= i(a, F+G) <= i(a,F) + i(a,G) for each
/// sampled functional a = E_y, where F = t s and G = u s are parallel
/// weighted curves on one slope (i(F,G) = 0 on the torus forces this).
SubadditivityReport subadditivity_check(const std::vector<torus::TorusPoint>& y_points,
                                        const torus::Slope& slope, double t, double u,
                                        const torus::TorusPoint& base = torus::kBasePoint);

struct ConeExtLengthResult {
  double value = 0.0;            // sup over the slope set of i(a,F)^2 / Ext_y(F)
  torus::Slope witness{1, 0};
  bool generalized_minsky_ok = true;  // checked for sampled functional pairs
  double worst_minsky_ratio = 0.0;    // max i(a,b)^2 / (Ext_y(a) Ext_y(b))
};

/// Extremal length of a Gardiner-Masur cone point on y, realized as the
/// supremum over a finite slope set; asserts the generalized Minsky
/// inequality against companion interior functionals.
ConeExtLengthResult cone_ext_length(const torus::TorusPoint& y,
                                    const torus::GMFunctional& functional,
                                    const std::vector<torus::Slope>& slope_set,
                                    const std::vector<torus::TorusPoint>& partners = {});

/// Closed-form extremal length of the interior functional E_z on y:
/// Ext_y(Psi(z)) = e^{2 d(x0,y)} e^{-4 <y|z>_{x0}}.
double interior_functional_ext(const torus::TorusPoint& y, const torus::TorusPoint& z,
                               const torus::TorusPoint& base = torus::kBasePoint);

}  // namespace teichlab::lab
