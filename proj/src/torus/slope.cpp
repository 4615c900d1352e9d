#include "teichlab/torus/slope.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace teichlab::torus {

Slope Slope::of(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw input_error("slope (0,0) is not a curve");
  const std::int64_t g = std::gcd(std::abs(p), std::abs(q));
  p /= g;
  q /= g;
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return Slope{p, q};
}

std::int64_t inter_num(const Slope& s1, const Slope& s2) {
  return std::abs(s1.p * s2.q - s2.p * s1.q);
}

WeightedMulticurve::WeightedMulticurve(std::vector<std::pair<Slope, double>> parts)
    : parts_(std::move(parts)) {
  std::set<Slope> seen;
  for (const auto& [s, w] : parts_) {
    if (!(w > 0.0)) throw input_error("multicurve weight must be positive");
    if (!seen.insert(s).second)
      throw input_error("duplicate slope in multicurve: " + s.str());
  }
}

double inter_num(const WeightedMulticurve& a, const WeightedMulticurve& b) {
  double total = 0.0;
  for (const auto& [sa, wa] : a.parts())
    for (const auto& [sb, wb] : b.parts())
      total += wa * wb * static_cast<double>(inter_num(sa, sb));
  return total;
}

std::vector<Slope> enumerate_slopes(std::int64_t pmax, std::int64_t qmax) {
  std::vector<Slope> out;
  out.push_back(Slope{1, 0});
  for (std::int64_t q = 1; q <= qmax; ++q)
    for (std::int64_t p = -pmax; p <= pmax; ++p)
      if (std::gcd(std::abs(p), q) == 1) out.push_back(Slope{p, q});
  return out;
}

}  // namespace teichlab::torus
