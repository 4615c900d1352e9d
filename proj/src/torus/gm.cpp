#include "teichlab/torus/gm.hpp"

#include <algorithm>
#include <cmath>

namespace teichlab::torus {

double i_x0(const TorusPoint& y, const TorusPoint& z, const TorusPoint& base) {
  const double gp = 0.5 * (teich_distance(base, y) + teich_distance(base, z) -
                           teich_distance(y, z));
  return std::exp(-2.0 * gp);
}

double i_x0_boundary(const Slope& s1, const Slope& s2, const TorusPoint& base) {
  const double denom = std::sqrt(ext_length(base, s1) * ext_length(base, s2));
  return static_cast<double>(inter_num(s1, s2)) / denom;
}

void GMFunctional::tabulate(const std::vector<Slope>& slopes) {
  table_.clear();
  table_.reserve(slopes.size());
  for (const auto& s : slopes) table_.emplace_back(s, value(s));
}

GMFunctional GMFunctional::interior(const TorusPoint& y,
                                    const std::vector<Slope>& slopes,
                                    const TorusPoint& base) {
  require_torus_point(y);
  GMFunctional f;
  f.tag_ = Tag::interior;
  f.point_ = y;
  f.base_ = base;
  f.tabulate(slopes);
  return f;
}

GMFunctional GMFunctional::boundary_of_dir(double x, double ydir,
                                           const std::vector<Slope>& slopes,
                                           const TorusPoint& base) {
  if (x == 0.0 && ydir == 0.0) throw input_error("boundary functional needs a direction");
  GMFunctional f;
  f.tag_ = Tag::boundary;
  f.dir_x_ = x;
  f.dir_y_ = ydir;
  f.base_ = base;
  f.tabulate(slopes);
  return f;
}

GMFunctional GMFunctional::boundary_of(const Slope& g, const std::vector<Slope>& slopes,
                                       const TorusPoint& base) {
  return boundary_of_dir(static_cast<double>(g.p), static_cast<double>(g.q), slopes, base);
}

double GMFunctional::value(const Slope& s) const {
  if (tag_ == Tag::interior) {
    const double k_y = std::exp(2.0 * teich_distance(base_, point_));
    return std::sqrt(ext_length(point_, s) / k_y);
  }
  const double inum = std::abs(dir_x_ * static_cast<double>(s.q) -
                               static_cast<double>(s.p) * dir_y_);
  return inum / std::sqrt(ext_length_dir(base_, dir_x_, dir_y_));
}

double GMFunctional::normalization_max() const {
  double best = 0.0;
  for (const auto& [s, v] : table_)
    best = std::max(best, v / std::sqrt(ext_length(base_, s)));
  return best;
}

GmRayLimitReport gm_ray_limit(const Slope& g, const std::vector<Slope>& slopes,
                              double t_max, const TorusPoint& base, double tol) {
  if (slopes.empty()) throw input_error("gm_ray_limit needs a slope set");
  if (!(t_max > 0.0)) throw input_error("gm_ray_limit needs t_max > 0");
  const TorusPoint at_mid = teich_ray(base, g, 0.5 * t_max);
  const TorusPoint at_end = teich_ray(base, g, t_max);
  GmRayLimitReport rep{GMFunctional::interior(at_end, slopes, base),
                       GMFunctional::boundary_of(g, slopes, base), 0.0, 0.0, false};
  const GMFunctional mid = GMFunctional::interior(at_mid, slopes, base);
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    const double predicted = rep.predicted.table()[i].second;
    rep.sup_gap = std::max(rep.sup_gap,
                           std::abs(rep.empirical.table()[i].second - predicted));
    rep.sup_gap_mid = std::max(rep.sup_gap_mid,
                               std::abs(mid.table()[i].second - predicted));
  }
  rep.converged = rep.sup_gap <= tol && rep.sup_gap <= rep.sup_gap_mid + tol;
  return rep;
}

std::vector<HomothetyRow> homothety_divergence(
    double k, const std::vector<std::pair<Slope, Slope>>& schedule,
    const TorusPoint& base) {
  if (k == 1.0) throw input_error("homothety divergence needs K != 1");
  if (schedule.empty()) throw input_error("homothety divergence needs a schedule");
  const double expo = k > 1.0 ? 1.0 - k : k - 1.0;
  std::vector<HomothetyRow> rows;
  rows.reserve(schedule.size());
  std::int64_t idx = 0;
  for (const auto& [a, b] : schedule) {
    HomothetyRow row;
    row.n = idx++;
    row.a = a;
    row.b = b;
    row.pairing = i_x0_boundary(a, b, base);
    if (row.pairing == 0.0)
      throw input_error("homothety schedule pair with vanishing pairing: " + a.str() +
                        ", " + b.str());
    row.value = std::pow(row.pairing, expo);
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::pair<Slope, Slope>> homothety_default_schedule(std::int64_t nmax) {
  std::vector<std::pair<Slope, Slope>> sched;
  sched.emplace_back(Slope{1, 0}, Slope::of(0, 1));
  for (std::int64_t n = 1; n <= nmax; n = std::max(n + 1, (n * 3) / 2))
    sched.emplace_back(Slope{1, 0}, Slope::of(n, 1));
  if (sched.back().second != Slope::of(nmax, 1))
    sched.emplace_back(Slope{1, 0}, Slope::of(nmax, 1));
  return sched;
}

}  // namespace teichlab::torus
