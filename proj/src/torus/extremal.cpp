#include "teichlab/torus/extremal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <optional>
#include <vector>

namespace teichlab::torus {

double ext_length_dir(const TorusPoint& tau, double x, double y) {
  require_torus_point(tau);
  if (x == 0.0 && y == 0.0) return 0.0;
  const std::complex<double> hol(x + y * tau.real(), y * tau.imag());
  return std::norm(hol) / tau.imag();
}

MinskyReport minsky_check(const TorusPoint& tau, const Slope& s1, const Slope& s2,
                          double equality_tol) {
  require_torus_point(tau);
  MinskyReport r;
  const double inum = static_cast<double>(inter_num(s1, s2));
  r.lhs = inum * inum;
  r.rhs = ext_length(tau, s1) * ext_length(tau, s2);
  r.holds = r.lhs <= r.rhs * (1.0 + 1e-12);
  const std::complex<double> z1(static_cast<double>(s1.p) + static_cast<double>(s1.q) * tau.real(),
                                static_cast<double>(s1.q) * tau.imag());
  const std::complex<double> z2(static_cast<double>(s2.p) + static_cast<double>(s2.q) * tau.real(),
                                static_cast<double>(s2.q) * tau.imag());
  const double re = std::abs((z1 * std::conj(z2)).real());
  r.equality = re <= equality_tol * std::abs(z1) * std::abs(z2);
  return r;
}

namespace {

/// Ratio Ext_{t2}(x,y) / Ext_{t1}(x,y) as a function of the direction (x, y).
double ratio_dir(const TorusPoint& t1, const TorusPoint& t2, double x, double y) {
  return ext_length_dir(t2, x, y) / ext_length_dir(t1, x, y);
}

/// Critical directions of the projectivized ratio. In the slope coordinate
/// s = p/q the ratio is (v1/v2) ((s+u2)^2 + v2^2) / ((s+u1)^2 + v1^2); its
/// critical points solve A s^2 + B s + C = 0 below. At most two real roots.
std::vector<double> critical_directions(const TorusPoint& t1, const TorusPoint& t2) {
  const double u1 = t1.real(), v1 = t1.imag();
  const double u2 = t2.real(), v2 = t2.imag();
  const double a = u1 - u2;
  const double b = u1 * u1 - u2 * u2 + v1 * v1 - v2 * v2;
  const double c = u1 * u2 * (u1 - u2) + v1 * v1 * u2 - v2 * v2 * u1;
  std::vector<double> roots;
  if (std::abs(a) < 1e-300) {
    if (std::abs(b) > 1e-300) roots.push_back(-c / b);
    return roots;
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return roots;
  const double sq = std::sqrt(disc);
  // Numerically stable pair of roots.
  const double q = -0.5 * (b + std::copysign(sq, b));
  roots.push_back(q / a);
  if (q != 0.0) roots.push_back(c / q);
  return roots;
}

struct Best {
  double ratio = 0.0;
  Slope witness{1, 0};

  void offer(double r, std::int64_t p, std::int64_t q) {
    if (r > ratio) {
      ratio = r;
      witness = Slope::of(p, q);
    }
  }
};

}  // namespace

KerckhoffResult kerckhoff_distance(const TorusPoint& t1, const TorusPoint& t2,
                                   std::int64_t max_denominator) {
  require_torus_point(t1);
  require_torus_point(t2);
  if (max_denominator < 1) throw input_error("max_denominator must be >= 1");
  KerckhoffResult out;
  if (t1 == t2) return out;  // all ratios are 1

  Best best;
  best.offer(ratio_dir(t1, t2, 1.0, 0.0), 1, 0);

  const auto crits = critical_directions(t1, t2);
  double x_star = crits.empty() ? 0.0 : crits[0];
  {
    double best_crit = -1.0;
    for (double x : crits) {
      const double r = ratio_dir(t1, t2, x, 1.0);
      if (r > best_crit) {
        best_crit = r;
        x_star = x;
      }
    }
  }

  // Stage 1: bounded-denominator scan. For each q the slope value is the
  // direction function evaluated at p/q, unimodal around the critical
  // direction, so the per-q maximum sits next to q * x_star.
  for (std::int64_t q = 1; q <= max_denominator; ++q) {
    const double target = static_cast<double>(q) * x_star;
    const std::int64_t p0 = static_cast<std::int64_t>(std::floor(target));
    for (std::int64_t p = p0 - 1; p <= p0 + 2; ++p) {
      if (p == 0 && q == 0) continue;
      best.offer(ratio_dir(t1, t2, static_cast<double>(p), static_cast<double>(q)), p, q);
    }
  }

  // Stage 2: Stern-Brocot mediant descent toward the critical direction,
  // independent of max_denominator (so the result stays monotone in it).
  if (!crits.empty()) {
    std::int64_t pl = static_cast<std::int64_t>(std::floor(x_star)), ql = 1;
    std::int64_t pr = pl + 1, qr = 1;
    for (int iter = 0; iter < 256; ++iter) {
      const std::int64_t pm = pl + pr, qm = ql + qr;
      if (qm > (std::int64_t{1} << 40)) break;
      best.offer(ratio_dir(t1, t2, static_cast<double>(pm), static_cast<double>(qm)),
                 pm, qm);
      if (static_cast<double>(pm) < x_star * static_cast<double>(qm)) {
        pl = pm;
        ql = qm;
      } else {
        pr = pm;
        qr = qm;
      }
    }
  }

  out.sup_ratio = best.ratio;
  out.witness = best.witness;
  out.value = 0.5 * std::log(best.ratio);
  if (out.value < 0.0) out.value = 0.0;
  return out;
}

}  // namespace teichlab::torus
