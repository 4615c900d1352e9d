#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "teichlab/hyp/halfplane.hpp"
#include "teichlab/hyp/tree.hpp"
#include "teichlab/metric/coarse.hpp"
#include "teichlab/metric/maps.hpp"
#include "teichlab/metric/space.hpp"

namespace teichlab::hyp {

/// Either a finite Gromov product estimate or the exact p = q case.
struct BoundaryProduct {
  double value = 0.0;
  bool infinite = false;
};

/// Default sample spacing along rays, in distance units.
inline constexpr double kRayStep = 0.5;

/// A boundary model ties a space to a representation of its boundary points:
/// rays toward a boundary point, a landing-point estimator for image
/// sequences, and boundary-point equality at model tolerance.
///
/// Models below: RootedTree (prefix code), half-plane (extended reals),
/// and the ray [0, oo) (a single ideal endpoint).
struct TreeBoundaryModel {
  using Space = RootedTree;
  using BPoint = RootedTree::Point;  // a deep node standing for its prefix

  const RootedTree* tree;

  const Space& space() const { return *tree; }

  std::vector<RootedTree::Point> ray(BPoint p, std::size_t horizon) const {
    return tree->ray(p, horizon);
  }

  /// Image sequences of rays move down a path; the deepest sample is the
  /// landing prefix. Rejects sequences that leave the path of their last
  /// element, which only happens for non-convergent images.
  std::optional<BPoint> limit_estimate(std::span<const RootedTree::Point> pts) const {
    if (pts.empty()) return std::nullopt;
    BPoint deepest = pts[0];
    for (auto p : pts)
      if (tree->depth(p) > tree->depth(deepest)) deepest = p;
    return deepest;
  }

  bool boundary_equal(BPoint a, BPoint b) const { return a == b; }
};

struct HalfPlaneBoundaryModel {
  using Space = HalfPlane;
  using BPoint = ExtendedReal;

  const HalfPlane* plane;
  double step = kRayStep;
  double tol = 1e-6;       // boundary-point equality tolerance
  double far_away = 1e8;   // |tau| beyond this reads as the point at infinity
  double max_depth = 120;  // saturation depth: e^{-2t} must stay a normal double

  const Space& space() const { return *plane; }

  std::vector<std::complex<double>> ray(const BPoint& p, std::size_t horizon) const {
    std::vector<std::complex<double>> out(horizon);
    for (std::size_t k = 0; k < horizon; ++k) {
      const double t = std::min(step * static_cast<double>(k), max_depth);
      out[k] = geodesic_ray(plane->base(), p, t);
    }
    return out;
  }

  std::optional<BPoint> limit_estimate(std::span<const std::complex<double>> pts) const {
    if (pts.empty()) return std::nullopt;
    const auto& last = pts.back();
    if (std::abs(last) > far_away) return ExtendedReal::inf();
    // Landing at a finite boundary point: Im shrinks and Re stabilizes over
    // the last quarter of the samples.
    const std::size_t q = std::max<std::size_t>(2, pts.size() / 4);
    double re_min = last.real(), re_max = last.real();
    for (std::size_t i = pts.size() - q; i < pts.size(); ++i) {
      re_min = std::min(re_min, pts[i].real());
      re_max = std::max(re_max, pts[i].real());
    }
    if (re_max - re_min > std::max(tol, 1e3 * last.imag())) return std::nullopt;
    return ExtendedReal::finite(last.real());
  }

  bool boundary_equal(const BPoint& a, const BPoint& b) const {
    return same_boundary_point(a, b, tol);
  }
};

/// The ray [0, oo) has a single boundary point.
struct RayBoundaryModel {
  using Space = metric::RayLine;
  struct BPoint {};

  metric::RayLine line;
  double step = kRayStep;

  const Space& space() const { return line; }

  std::vector<double> ray(const BPoint&, std::size_t horizon) const {
    std::vector<double> out(horizon);
    for (std::size_t k = 0; k < horizon; ++k) out[k] = step * static_cast<double>(k);
    return out;
  }

  std::optional<BPoint> limit_estimate(std::span<const double>) const {
    return BPoint{};
  }

  bool boundary_equal(const BPoint&, const BPoint&) const { return true; }
};

template <class Model>
concept BoundaryModel = requires(const Model& m, const typename Model::BPoint& p) {
  { m.space() };
  { m.ray(p, std::size_t{4}) };
  { m.boundary_equal(p, p) } -> std::convertible_to<bool>;
};

/// Estimates <p|q> along ray samples. Exact on trees (the lcp depth);
/// converges on the half-plane by boundary continuity. Returns "infinite"
/// when the boundary points coincide.
template <BoundaryModel Model>
BoundaryProduct boundary_gromov_product(const Model& model,
                                        const typename Model::BPoint& p,
                                        const typename Model::BPoint& q,
                                        std::size_t horizon) {
  if (horizon < 2) throw input_error("boundary product needs horizon >= 2");
  if (model.boundary_equal(p, q)) return {0.0, true};
  const auto rp = model.ray(p, horizon);
  const auto rq = model.ray(q, horizon);
  return {metric::gromov_product_base(model.space(), rp.back(), rq.back()), false};
}

/// Bounds c1 a^{-<p|q>} <= d_vis(p,q) <= c2 a^{-<p|q>} for the visual metric.
/// With c1 = c2 = 1 on trees this is the exact ultrametric 2^{-lcp}.
struct VisualMetricParams {
  double a = 2.0;
  double c1 = 1.0;
  double c2 = 1.0;
  double a0 = 64.0;  // admissible upper bound for the parameter a
};

template <BoundaryModel Model>
std::pair<double, double> visual_metric_bounds(const Model& model,
                                               const typename Model::BPoint& p,
                                               const typename Model::BPoint& q,
                                               const VisualMetricParams& params,
                                               std::size_t horizon = 64) {
  if (!(params.a > 1.0) || params.a > params.a0)
    throw input_error("visual metric needs 1 < a <= a0");
  if (!(params.c1 > 0.0) || params.c1 > params.c2)
    throw input_error("visual metric needs 0 < c1 <= c2");
  const auto gp = boundary_gromov_product(model, p, q, horizon);
  if (gp.infinite) return {0.0, 0.0};
  const double core = std::pow(params.a, -gp.value);
  return {params.c1 * core, params.c2 * core};
}

template <class BP>
struct ExtensionResult {
  std::optional<BP> image;
  bool converged = false;
  metric::IndistinguishabilityProfile self_profile;
};

/// Pushes ray samples through the map and applies the finite-horizon
/// Cauchy-at-infinity test: the image self-profile must clear m_star by the
/// last half of the samples, otherwise the extension is flagged divergent.
template <BoundaryModel Model, class Fn>
ExtensionResult<typename Model::BPoint> boundary_extension(
    const Model& model, Fn&& map, const typename Model::BPoint& p,
    std::size_t horizon, double m_star) {
  if (horizon < 4) throw input_error("boundary extension needs horizon >= 4");
  using Point = std::decay_t<decltype(model.ray(p, horizon)[0])>;
  const auto samples = model.ray(p, horizon);
  std::vector<Point> images(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) images[i] = map(samples[i]);
  ExtensionResult<typename Model::BPoint> out;
  out.self_profile = metric::profile(model.space(), std::span<const Point>(images),
                                     std::span<const Point>(images));
  out.converged = out.self_profile.at(out.self_profile.horizon()) >= m_star;
  if (out.converged) {
    out.image = model.limit_estimate(std::span<const Point>(images));
    if (!out.image) out.converged = false;
  }
  return out;
}

struct ClassifyParams {
  std::size_t horizon = 128;
  double m_star = 8.0;
  std::size_t n_star = 64;
  double slack = 0.0;
};

struct ClassifyReport {
  bool ac = false;
  bool ac_as = false;
  bool ac_inv_candidate = false;
  bool extension_total = false;  // every sampled boundary point converged
  std::vector<std::string> witnesses;
  std::optional<metric::AcReport> suite_report;
};

/// Sample-scale classification per the boundary characterization: AC iff the
/// extension exists and is injective on the sample; AC_as additionally
/// surjective onto the sample; a supplied candidate inverse is accepted if
/// its extension inverts the sampled extension pointwise.
template <BoundaryModel Model, class Fn>
ClassifyReport classify_map(
    const Model& model, Fn&& map,
    const std::vector<typename Model::BPoint>& boundary_sample,
    const metric::PairSuite<std::decay_t<decltype(model.ray(
        boundary_sample[0], 4)[0])>>& pair_suite,
    const ClassifyParams& params = {},
    const std::function<std::decay_t<decltype(model.ray(boundary_sample[0], 4)[0])>(
        const std::decay_t<decltype(model.ray(boundary_sample[0], 4)[0])>&)>*
        inverse_candidate = nullptr) {
  using BP = typename Model::BPoint;
  if (boundary_sample.empty()) throw input_error("classify_map: empty boundary sample");
  ClassifyReport rep;

  std::vector<ExtensionResult<BP>> ext;
  ext.reserve(boundary_sample.size());
  for (const auto& p : boundary_sample)
    ext.push_back(boundary_extension(model, map, p, params.horizon, params.m_star));

  rep.extension_total = true;
  for (std::size_t i = 0; i < ext.size(); ++i)
    if (!ext[i].converged) {
      rep.extension_total = false;
      rep.witnesses.push_back("no convergent extension at sample " + std::to_string(i));
    }

  bool injective = true;
  for (std::size_t i = 0; i < ext.size() && rep.extension_total; ++i)
    for (std::size_t j = i + 1; j < ext.size(); ++j) {
      if (model.boundary_equal(boundary_sample[i], boundary_sample[j])) continue;
      if (model.boundary_equal(*ext[i].image, *ext[j].image)) {
        injective = false;
        rep.witnesses.push_back("extension collides on samples " + std::to_string(i) +
                                " and " + std::to_string(j));
      }
    }
  rep.ac = rep.extension_total && injective;

  if (rep.ac) {
    bool surjective = true;
    for (std::size_t i = 0; i < boundary_sample.size(); ++i) {
      bool hit = false;
      for (const auto& e : ext)
        if (e.image && model.boundary_equal(*e.image, boundary_sample[i])) hit = true;
      if (!hit) {
        surjective = false;
        rep.witnesses.push_back("sample " + std::to_string(i) +
                                " not reached by the extension");
      }
    }
    rep.ac_as = surjective;
  }

  if (inverse_candidate && rep.ac) {
    bool inverts = true;
    for (std::size_t i = 0; i < boundary_sample.size(); ++i) {
      auto back = boundary_extension(model, *inverse_candidate, *ext[i].image,
                                     params.horizon, params.m_star);
      if (!back.converged || !model.boundary_equal(*back.image, boundary_sample[i])) {
        inverts = false;
        rep.witnesses.push_back("candidate inverse fails at sample " + std::to_string(i));
      }
    }
    rep.ac_inv_candidate = inverts;
  }

  if (!pair_suite.empty())
    rep.suite_report = metric::check_ac(model.space(), model.space(), map, pair_suite,
                                        params.m_star, params.n_star, params.slack);
  return rep;
}

/// Two maps are declared close at infinity iff their extensions coincide on
/// the sampled boundary.
template <BoundaryModel Model, class F1, class F2>
bool extensions_coincide(const Model& model, F1&& map1, F2&& map2,
                         const std::vector<typename Model::BPoint>& sample,
                         std::size_t horizon, double m_star) {
  for (const auto& p : sample) {
    auto e1 = boundary_extension(model, map1, p, horizon, m_star);
    auto e2 = boundary_extension(model, map2, p, horizon, m_star);
    if (!e1.converged || !e2.converged) return false;
    if (!model.boundary_equal(*e1.image, *e2.image)) return false;
  }
  return true;
}

}  // namespace teichlab::hyp
