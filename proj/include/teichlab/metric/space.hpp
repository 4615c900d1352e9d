#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "teichlab/util/error.hpp"

namespace teichlab::metric {

/// A coarse space exposes a distance and a reference point. Point types vary:
/// table indices, tree nodes, half-plane coordinates, ray parameters.
template <class S>
concept CoarseSpace = requires(const S& s, const typename S::Point& p,
                               const typename S::Point& q) {
  { s.distance(p, q) } -> std::convertible_to<double>;
  { s.base() } -> std::convertible_to<typename S::Point>;
};

/// Finite point set with a validated distance table. All invariants are
/// checked at construction: zero diagonal, symmetry, finiteness,
/// nonnegativity, and the triangle inequality within kTriangleTol.
class TableSpace {
 public:
  using Point = std::uint32_t;

  static constexpr double kTriangleTol = 1e-9;

  TableSpace(std::vector<std::string> ids, std::vector<double> dist_row_major,
             const std::string& base_id);

  double distance(Point i, Point j) const { return dist_[i * n_ + j]; }
  Point base() const { return base_; }
  std::size_t size() const { return n_; }
  Point index_of(const std::string& id) const;
  const std::string& id_of(Point i) const { return ids_[i]; }
  const std::vector<std::string>& ids() const { return ids_; }

  /// Same point set with every distance multiplied by lambda > 0.
  TableSpace scaled(double lambda) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::string> ids_;
  std::vector<double> dist_;
  std::unordered_map<std::string, Point> index_;
  Point base_ = 0;
};

/// The ray [0, infinity) with the line metric; an analytic space whose
/// points are arbitrary nonnegative reals.
class RayLine {
 public:
  using Point = double;
  double distance(Point a, Point b) const { return std::abs(a - b); }
  Point base() const { return 0.0; }
};

/// The real line with the usual metric.
class Line {
 public:
  using Point = double;
  double distance(Point a, Point b) const { return std::abs(a - b); }
  Point base() const { return 0.0; }
};

}  // namespace teichlab::metric
