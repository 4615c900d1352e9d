#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "teichlab/metric/coarse.hpp"

namespace teichlab::metric {

/// A tagged pair of sequences used as a test fixture for the map checkers.
template <class P>
struct SequencePair {
  std::string name;
  std::vector<P> a;
  std::vector<P> b;
  bool expected_indistinguishable = false;
};

template <class P>
using PairSuite = std::vector<SequencePair<P>>;

struct AcWitness {
  std::string pair_name;
  bool forward = false;  // true: forward violation, false: reflection violation
  IndistinguishabilityProfile source_profile;
  IndistinguishabilityProfile image_profile;
};

struct AcReport {
  bool forward_ok = true;
  bool reflect_ok = true;
  std::vector<AcWitness> witnesses;
  std::vector<std::string> tag_mismatches;  // pairs whose tag disagrees with the data

  bool ok() const { return forward_ok && reflect_ok; }
};

/// Checks the two halves of the asymptotically-conservative property at the
/// declared horizon: pairs indistinguishable at (M*, N*) must map to pairs
/// indistinguishable at (M* - slack, N*), and pairs whose images are
/// indistinguishable at (M*, N*) must have been indistinguishable at
/// (M* - slack, N*).
template <CoarseSpace SX, CoarseSpace SY, class Fn>
AcReport check_ac(const SX& domain, const SY& codomain, Fn&& map,
                  const PairSuite<typename SX::Point>& suite, double m_star,
                  std::size_t n_star, double slack = 0.0) {
  if (suite.empty()) throw input_error("check_ac: empty pair suite");
  AcReport report;
  using PX = typename SX::Point;
  using PY = typename SY::Point;
  for (const auto& pair : suite) {
    std::vector<PY> fa(pair.a.size()), fb(pair.b.size());
    for (std::size_t i = 0; i < pair.a.size(); ++i) fa[i] = map(pair.a[i]);
    for (std::size_t i = 0; i < pair.b.size(); ++i) fb[i] = map(pair.b[i]);
    const std::span<const PX> a(pair.a), b(pair.b);
    const std::span<const PY> ia(fa), ib(fb);

    const bool src = tail_indistinguishable(domain, a, b, m_star, n_star);
    if (src != pair.expected_indistinguishable)
      report.tag_mismatches.push_back(pair.name);

    if (src && !tail_indistinguishable(codomain, ia, ib, m_star - slack, n_star)) {
      report.forward_ok = false;
      report.witnesses.push_back({pair.name, true, profile(domain, a, b),
                                  profile(codomain, ia, ib)});
    }
    if (tail_indistinguishable(codomain, ia, ib, m_star, n_star) &&
        !tail_indistinguishable(domain, a, b, m_star - slack, n_star)) {
      report.reflect_ok = false;
      report.witnesses.push_back({pair.name, false, profile(domain, a, b),
                                  profile(codomain, ia, ib)});
    }
  }
  return report;
}

struct RoughHomothetyReport {
  bool pass = false;
  double max_deviation = 0.0;        // sup |d(wx1,wx2) - K d(x1,x2)|
  double gromov_deviation = 0.0;     // sup |<wx1,wx2>_{w(x0)} - K <x1,x2>_{x0}|
  double gromov_bound = 0.0;         // 3D/2, the a-priori bound for the above
};

/// Tests |d(w x1, w x2) - K d(x1, x2)| <= D over all sampled pairs. The image
/// Gromov products are taken at reference w(base), which makes the 3D/2
/// deviation bound exact.
template <CoarseSpace SX, CoarseSpace SY, class Fn>
RoughHomothetyReport check_rough_homothety(const SX& domain, const SY& codomain,
                                           Fn&& map,
                                           std::span<const typename SX::Point> points,
                                           double k, double d) {
  if (!(k > 0.0) || d < 0.0) throw input_error("rough homothety needs K>0, D>=0");
  RoughHomothetyReport r;
  using PY = typename SY::Point;
  std::vector<PY> img(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) img[i] = map(points[i]);
  const auto x0 = domain.base();
  const PY y0 = map(x0);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const double dx = domain.distance(points[i], points[j]);
      const double dy = codomain.distance(img[i], img[j]);
      r.max_deviation = std::max(r.max_deviation, std::abs(dy - k * dx));
      const double gx = gromov_product(domain, points[i], points[j], x0);
      const double gy = gromov_product(codomain, img[i], img[j], y0);
      r.gromov_deviation = std::max(r.gromov_deviation, std::abs(gy - k * gx));
    }
  r.pass = r.max_deviation <= d;
  r.gromov_bound = 1.5 * d;
  return r;
}

/// sup over sampled points of d(w1 x, w2 x).
template <CoarseSpace SY, class F1, class F2, class P>
double check_parallel(const SY& codomain, F1&& map1, F2&& map2,
                      std::span<const P> points) {
  double sup = 0.0;
  for (const auto& p : points)
    sup = std::max(sup, codomain.distance(map1(p), map2(p)));
  return sup;
}

struct QuasiInverseReport {
  double sup_disp_domain = 0.0;    // sup d(G(F(x)), x)
  double sup_disp_codomain = 0.0;  // sup d(F(G(y)), y)
};

template <CoarseSpace SX, CoarseSpace SY, class F, class G>
QuasiInverseReport check_quasi_inverse(const SX& domain, const SY& codomain,
                                       F&& fwd, G&& bwd,
                                       std::span<const typename SX::Point> xs,
                                       std::span<const typename SY::Point> ys) {
  QuasiInverseReport r;
  for (const auto& x : xs)
    r.sup_disp_domain = std::max(r.sup_disp_domain, domain.distance(bwd(fwd(x)), x));
  for (const auto& y : ys)
    r.sup_disp_codomain = std::max(r.sup_disp_codomain, codomain.distance(fwd(bwd(y)), y));
  return r;
}

template <class P>
struct NamedMap {
  std::string name;
  std::function<P(const P&)> fn;
  std::optional<std::size_t> inverse;  // index into the harness map list
};

struct SemigroupOptions {
  bool composition_closure = true;
  bool closeness_laws = true;
  bool quasi_inverse = true;
};

struct SemigroupReport {
  bool all_pass_suite = true;
  bool composition_closure = true;
  bool closeness_reflexive = true;
  bool closeness_symmetric = true;
  bool closeness_transitive = true;
  bool quasi_inverse_close_to_identity = true;
  std::vector<std::vector<bool>> closeness;  // relation matrix on the map list
  std::vector<std::string> violations;

  bool ok() const {
    return all_pass_suite && composition_closure && closeness_reflexive &&
           closeness_symmetric && closeness_transitive &&
           quasi_inverse_close_to_identity;
  }
};

namespace detail {

/// Sample-scale closeness at infinity: for every suite pair that is
/// indistinguishable in the domain (and every single sequence against
/// itself), the cross images under the two maps must stay indistinguishable.
template <CoarseSpace S, class P>
bool maps_close(const S& space, const std::function<P(const P&)>& f1,
                const std::function<P(const P&)>& f2, const PairSuite<P>& suite,
                double m_star, std::size_t n_star, double slack) {
  auto push = [](const std::function<P(const P&)>& f, const std::vector<P>& xs) {
    std::vector<P> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i]);
    return out;
  };
  const double thresh = m_star - slack;
  for (const auto& pair : suite) {
    const auto f1a = push(f1, pair.a);
    const auto f2a = push(f2, pair.a);
    if (!tail_indistinguishable(space, std::span<const P>(f1a),
                                std::span<const P>(f2a), thresh, n_star))
      return false;
    if (tail_indistinguishable(space, std::span<const P>(pair.a),
                               std::span<const P>(pair.b), m_star, n_star)) {
      const auto f2b = push(f2, pair.b);
      if (!tail_indistinguishable(space, std::span<const P>(f1a),
                                  std::span<const P>(f2b), thresh, n_star))
        return false;
      const auto f1b = push(f1, pair.b);
      if (!tail_indistinguishable(space, std::span<const P>(f1b),
                                  std::span<const P>(f2a), thresh, n_star))
        return false;
    }
  }
  return true;
}

}  // namespace detail

/// Verifies, at sample scale, the monoid/congruence laws: composition of
/// suite-passing maps passes the suite; closeness at infinity is an
/// equivalence relation on the supplied family; declared quasi-inverse pairs
/// compose to maps close to the identity.
template <CoarseSpace S>
SemigroupReport semigroup_harness(const S& space,
                                  const std::vector<NamedMap<typename S::Point>>& maps,
                                  const PairSuite<typename S::Point>& suite,
                                  double m_star, std::size_t n_star,
                                  double slack = 0.0,
                                  const SemigroupOptions& opt = {}) {
  using P = typename S::Point;
  if (maps.empty()) throw input_error("semigroup_harness: no maps");
  if (suite.empty()) throw input_error("semigroup_harness: empty pair suite");
  SemigroupReport rep;
  const std::size_t n = maps.size();

  std::vector<bool> passes(n);
  for (std::size_t i = 0; i < n; ++i) {
    passes[i] = check_ac(space, space, maps[i].fn, suite, m_star, n_star, slack).ok();
    if (!passes[i]) {
      rep.all_pass_suite = false;
      rep.violations.push_back("suite fail: " + maps[i].name);
    }
  }

  if (opt.composition_closure) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!passes[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!passes[j]) continue;
        auto composed = [&fi = maps[i].fn, &fj = maps[j].fn](const P& x) {
          return fi(fj(x));
        };
        if (!check_ac(space, space, composed, suite, m_star, n_star, slack).ok()) {
          rep.composition_closure = false;
          rep.violations.push_back("composition fail: " + maps[i].name + " o " +
                                   maps[j].name);
        }
      }
    }
  }

  if (opt.closeness_laws) {
    rep.closeness.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        rep.closeness[i][j] = detail::maps_close(space, maps[i].fn, maps[j].fn,
                                                 suite, m_star, n_star, slack);
    for (std::size_t i = 0; i < n; ++i)
      if (!rep.closeness[i][i]) {
        rep.closeness_reflexive = false;
        rep.violations.push_back("closeness not reflexive: " + maps[i].name);
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rep.closeness[i][j] != rep.closeness[j][i]) {
          rep.closeness_symmetric = false;
          rep.violations.push_back("closeness not symmetric: " + maps[i].name +
                                   " vs " + maps[j].name);
        }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!rep.closeness[i][j]) continue;
        for (std::size_t k = 0; k < n; ++k)
          if (rep.closeness[j][k] && !rep.closeness[i][k]) {
            rep.closeness_transitive = false;
            rep.violations.push_back("closeness not transitive: " + maps[i].name +
                                     ", " + maps[j].name + ", " + maps[k].name);
          }
      }
  }

  if (opt.quasi_inverse) {
    std::function<P(const P&)> identity = [](const P& x) { return x; };
    for (std::size_t i = 0; i < n; ++i) {
      if (!maps[i].inverse) continue;
      const auto& inv = maps[*maps[i].inverse];
      std::function<P(const P&)> fwd_bwd = [&f = maps[i].fn, &g = inv.fn](const P& x) {
        return f(g(x));
      };
      std::function<P(const P&)> bwd_fwd = [&f = maps[i].fn, &g = inv.fn](const P& x) {
        return g(f(x));
      };
      if (!detail::maps_close(space, fwd_bwd, identity, suite, m_star, n_star, slack) ||
          !detail::maps_close(space, bwd_fwd, identity, suite, m_star, n_star, slack)) {
        rep.quasi_inverse_close_to_identity = false;
        rep.violations.push_back("quasi-inverse not close to identity: " +
                                 maps[i].name);
      }
    }
  }
  return rep;
}

}  // namespace teichlab::metric
