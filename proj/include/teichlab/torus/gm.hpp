#pragma once

#include <optional>
#include <string>
#include <vector>

#include "teichlab/metric/coarse.hpp"
#include "teichlab/torus/extremal.hpp"
#include "teichlab/torus/ray.hpp"

namespace teichlab::torus {

/// Base-pointed pairing between interior points: exp(-2 <y|z>_{x0}) with the
/// Gromov product of the Teichmueller distance. Values in (0, 1].
double i_x0(const TorusPoint& y, const TorusPoint& z,
            const TorusPoint& base = kBasePoint);

/// Boundary pairing i(s1,s2) / sqrt(Ext_{x0}(s1) Ext_{x0}(s2)).
double i_x0_boundary(const Slope& s1, const Slope& s2,
                     const TorusPoint& base = kBasePoint);

/// A point of the Gardiner-Masur cone over the torus, tabulated on a slope
/// set. Interior points carry E_y(s) = sqrt(Ext_y(s) / K_y) with
/// K_y = e^{2 d(x0, y)}; boundary points carry i(G, s) / sqrt(Ext_{x0}(G))
/// for a direction G.
class GMFunctional {
 public:
  enum class Tag { interior, boundary };

  static GMFunctional interior(const TorusPoint& y, const std::vector<Slope>& slopes,
                               const TorusPoint& base = kBasePoint);
  static GMFunctional boundary_of_dir(double x, double ydir,
                                      const std::vector<Slope>& slopes,
                                      const TorusPoint& base = kBasePoint);
  static GMFunctional boundary_of(const Slope& g, const std::vector<Slope>& slopes,
                                  const TorusPoint& base = kBasePoint);

  Tag tag() const { return tag_; }
  const TorusPoint& point() const { return point_; }
  double direction_x() const { return dir_x_; }
  double direction_y() const { return dir_y_; }
  const TorusPoint& base() const { return base_; }
  const std::vector<std::pair<Slope, double>>& table() const { return table_; }

  /// Value at a slope, from the defining data (not restricted to the table).
  double value(const Slope& s) const;

  /// max over tabulated slopes of E(s) / sqrt(Ext_{x0}(s)); equals the
  /// normalization sup over unit-extremal-length directions, approached from
  /// below on a finite slope set. At most 1 + tol for consistent data.
  double normalization_max() const;

 private:
  Tag tag_ = Tag::interior;
  TorusPoint point_{0.0, 1.0};  // interior tag
  double dir_x_ = 1.0, dir_y_ = 0.0;  // boundary tag
  TorusPoint base_{0.0, 1.0};
  std::vector<std::pair<Slope, double>> table_;

  void tabulate(const std::vector<Slope>& slopes);
};

struct GmRayLimitReport {
  GMFunctional empirical;   // E_{R(t_max)} on the slope set
  GMFunctional predicted;   // boundary functional of the ray direction
  double sup_gap = 0.0;     // sup over the slope set at t_max
  double sup_gap_mid = 0.0; // same at t_max / 2
  bool converged = false;
};

/// Empirical Gardiner-Masur limit along the ray from x0 toward `g`, against
/// the predicted boundary functional. Not converging at the requested t_max
/// is reported, not thrown.
GmRayLimitReport gm_ray_limit(const Slope& g, const std::vector<Slope>& slopes,
                              double t_max, const TorusPoint& base = kBasePoint,
                              double tol = 1e-3);

struct HomothetyRow {
  std::int64_t n = 0;
  Slope a{1, 0};
  Slope b{0, 1};
  double pairing = 0.0;  // i_{x0}(a, b)
  double value = 0.0;    // pairing^{1-K} (K > 1) or pairing^{K-1} (K < 1)
};

/// Divergence table for the rough-homothety obstruction: along a schedule of
/// slope pairs converging projectively, the quantity i_{x0}(a,b)^{1-K}
/// (exponent K-1 for K < 1) grows without bound, so no constant can bound it.
std::vector<HomothetyRow> homothety_divergence(
    double k, const std::vector<std::pair<Slope, Slope>>& schedule,
    const TorusPoint& base = kBasePoint);

/// Convenience schedule ((1,0),(n,1)) for n in a geometric sweep up to nmax.
std::vector<std::pair<Slope, Slope>> homothety_default_schedule(std::int64_t nmax);

}  // namespace teichlab::torus
