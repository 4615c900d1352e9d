#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "teichlab/util/error.hpp"

namespace teichlab::torus {

/// Primitive slope (p, q) in canonical form: q > 0, or q = 0 and p = 1.
/// One slope per projective class of simple closed curves on the torus.
struct Slope {
  std::int64_t p = 1;
  std::int64_t q = 0;

  static Slope of(std::int64_t p, std::int64_t q);

  bool operator==(const Slope& o) const { return p == o.p && q == o.q; }
  bool operator!=(const Slope& o) const { return !(*this == o); }
  bool operator<(const Slope& o) const {
    return p != o.p ? p < o.p : q < o.q;
  }

  std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }
};

/// Geometric intersection number |p1 q2 - p2 q1|.
std::int64_t inter_num(const Slope& s1, const Slope& s2);

/// Finitely many distinct slopes with positive weights; the rational points
/// of measured-foliation space. Bilinear intersection pairing.
class WeightedMulticurve {
 public:
  WeightedMulticurve() = default;
  explicit WeightedMulticurve(std::vector<std::pair<Slope, double>> parts);

  const std::vector<std::pair<Slope, double>>& parts() const { return parts_; }
  bool single_slope() const { return parts_.size() == 1; }

 private:
  std::vector<std::pair<Slope, double>> parts_;
};

double inter_num(const WeightedMulticurve& a, const WeightedMulticurve& b);

/// All canonical slopes with |p| <= pmax and 0 <= q <= qmax, in a fixed
/// deterministic order. Farey-complete for the given box.
std::vector<Slope> enumerate_slopes(std::int64_t pmax, std::int64_t qmax);

}  // namespace teichlab::torus

template <>
struct std::hash<teichlab::torus::Slope> {
  std::size_t operator()(const teichlab::torus::Slope& s) const noexcept {
    return std::hash<std::int64_t>()(s.p * 0x9e3779b97f4a7c15LL + s.q);
  }
};
