#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "teichlab/metric/space.hpp"
#include "teichlab/util/error.hpp"
#include "teichlab/util/parallel.hpp"

namespace teichlab::metric {

/// Gromov product <x1|x2>_z = (d(z,x1) + d(z,x2) - d(x1,x2)) / 2.
template <CoarseSpace S>
double gromov_product(const S& space, const typename S::Point& x1,
                      const typename S::Point& x2, const typename S::Point& z) {
  return 0.5 * (space.distance(z, x1) + space.distance(z, x2) -
                space.distance(x1, x2));
}

template <CoarseSpace S>
double gromov_product_base(const S& space, const typename S::Point& x1,
                           const typename S::Point& x2) {
  return gromov_product(space, x1, x2, space.base());
}

/// Least delta making the four-point condition
///   <x|y> >= min(<x|z>, <y|z>) - delta
/// hold over all ordered triples drawn from `points`, products taken at the
/// space base. Clamped at zero; trees return exactly 0.
template <CoarseSpace S>
double four_point_delta(const S& space, std::span<const typename S::Point> points) {
  const std::size_t n = points.size();
  if (n < 3) throw input_error("four_point_delta needs at least 3 points");
  std::vector<double> gp(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const double v = gromov_product_base(space, points[i], points[j]);
      gp[i * n + j] = v;
      gp[j * n + i] = v;
    }
  std::vector<double> worst(n, 0.0);
  parallel_chunks(n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t x = lo; x < hi; ++x) {
      double w = 0.0;
      for (std::size_t y = 0; y < n; ++y) {
        const double pxy = gp[x * n + y];
        for (std::size_t z = 0; z < n; ++z) {
          const double m = std::min(gp[x * n + z], gp[y * n + z]);
          if (m - pxy > w) w = m - pxy;
        }
      }
      worst[x] = w;
    }
  });
  return *std::max_element(worst.begin(), worst.end());
}

/// Convenience overload for table spaces: all points, base from the space.
inline double four_point_delta(const TableSpace& space) {
  std::vector<TableSpace::Point> pts(space.size());
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = static_cast<TableSpace::Point>(i);
  return four_point_delta(space, std::span<const TableSpace::Point>(pts));
}

/// Finite-horizon record M(N) = min_{n,m >= N} <a_n | b_m> standing in for
/// the "at infinity" limit. M is non-decreasing in N by construction.
struct IndistinguishabilityProfile {
  std::vector<double> m;  // M(N) for N = 0 .. N_max

  std::size_t horizon() const { return m.empty() ? 0 : m.size() - 1; }

  double at(std::size_t n) const {
    if (m.empty()) throw input_error("empty profile");
    return m[std::min(n, m.size() - 1)];
  }

  /// Verdict helper: indistinguishable at (m_star, n_star) iff M(N*) >= M*.
  bool indistinguishable_at(double m_star, std::size_t n_star) const {
    return at(n_star) >= m_star;
  }
};

/// Full profile of two finite sequence prefixes in the same space.
template <CoarseSpace S>
IndistinguishabilityProfile profile(const S& space,
                                    std::span<const typename S::Point> a,
                                    std::span<const typename S::Point> b) {
  const std::size_t la = a.size(), lb = b.size();
  if (la == 0 || lb == 0) throw input_error("profile of an empty sequence");
  const std::size_t nmax = std::min(la, lb) - 1;
  std::vector<double> prod(la * lb);
  std::vector<double> dba(la), dbb(lb);
  const auto z = space.base();
  for (std::size_t i = 0; i < la; ++i) dba[i] = space.distance(z, a[i]);
  for (std::size_t j = 0; j < lb; ++j) dbb[j] = space.distance(z, b[j]);
  for (std::size_t i = 0; i < la; ++i)
    for (std::size_t j = 0; j < lb; ++j)
      prod[i * lb + j] = 0.5 * (dba[i] + dbb[j] - space.distance(a[i], b[j]));

  IndistinguishabilityProfile out;
  out.m.assign(nmax + 1, 0.0);
  double cur = std::numeric_limits<double>::infinity();
  for (std::size_t n = nmax + 1; n-- > 0;) {
    // L-shaped band: row n for columns >= n, column n for rows >= n.
    for (std::size_t j = n; j < lb; ++j) cur = std::min(cur, prod[n * lb + j]);
    for (std::size_t i = n + 1; i < la; ++i) cur = std::min(cur, prod[i * lb + n]);
    out.m[n] = cur;
  }
  return out;
}

/// Tail check without materializing the profile: M(N*) >= M*? Bails out on
/// the first product below the threshold.
template <CoarseSpace S>
bool tail_indistinguishable(const S& space, std::span<const typename S::Point> a,
                            std::span<const typename S::Point> b, double m_star,
                            std::size_t n_star) {
  const std::size_t la = a.size(), lb = b.size();
  if (la == 0 || lb == 0) throw input_error("profile of an empty sequence");
  const std::size_t sa = std::min(n_star, la - 1);
  const std::size_t sb = std::min(n_star, lb - 1);
  const auto z = space.base();
  std::vector<double> dbb(lb - sb);
  for (std::size_t j = sb; j < lb; ++j) dbb[j - sb] = space.distance(z, b[j]);
  for (std::size_t i = sa; i < la; ++i) {
    const double dai = space.distance(z, a[i]);
    for (std::size_t j = sb; j < lb; ++j) {
      const double p = 0.5 * (dai + dbb[j - sb] - space.distance(a[i], b[j]));
      if (p < m_star) return false;
    }
  }
  return true;
}

}  // namespace teichlab::metric
