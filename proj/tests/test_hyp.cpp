#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "teichlab/hyp/boundary.hpp"
#include "teichlab/hyp/halfplane.hpp"
#include "teichlab/hyp/tree.hpp"
#include "teichlab/metric/coarse.hpp"
#include "teichlab/util/rng.hpp"

using namespace teichlab;
using hyp::ExtendedReal;
using hyp::HalfPlane;
using hyp::Moebius;
using Complex = std::complex<double>;

namespace {

Complex random_tau(Rng& rng) {
  return Complex(rng.uniform(-3.0, 3.0), std::exp(rng.uniform(-1.5, 1.5)));
}

Moebius random_isometry(Rng& rng, double scale = 0.5) {
  const double a = std::exp(rng.uniform(-scale, scale));
  const double b = rng.uniform(-scale, scale);
  const double c = rng.uniform(-scale, scale) * 0.2;
  const double d = (1.0 + b * c) / a;
  return Moebius::from_coeffs(a, b, c, d);
}

}  // namespace

TEST_CASE("half-plane distance basics") {
  const Complex i(0.0, 1.0);
  CHECK(hyp::hyp_distance(i, i) == doctest::Approx(0.0));
  CHECK(hyp::hyp_distance(i, Complex(0.0, 2.0)) ==
        doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(hyp::hyp_distance(i, Complex(0.0, -1.0)), input_error);
}

TEST_CASE("half-plane distance: symmetry and triangle over random triples") {
  Rng rng(41);
  for (int t = 0; t < 1000; ++t) {
    const Complex a = random_tau(rng), b = random_tau(rng), c = random_tau(rng);
    const double dab = hyp::hyp_distance(a, b);
    CHECK(dab == doctest::Approx(hyp::hyp_distance(b, a)).epsilon(1e-12));
    CHECK(dab <= hyp::hyp_distance(a, c) + hyp::hyp_distance(c, b) + 1e-12);
  }
}

TEST_CASE("moebius maps are isometries and compose correctly") {
  Rng rng(42);
  for (int t = 0; t < 200; ++t) {
    const auto g = random_isometry(rng);
    const auto h = random_isometry(rng);
    const Complex a = random_tau(rng), b = random_tau(rng);
    CHECK(hyp::hyp_distance(g(a), g(b)) ==
          doctest::Approx(hyp::hyp_distance(a, b)).epsilon(1e-9));
    CHECK(std::abs(g.compose(h)(a) - g(h(a))) < 1e-9);
    CHECK(std::abs(g.inverse()(g(a)) - a) < 1e-9);
  }
  // Orientation-reversing coefficients act by the conjugate rule.
  const auto refl = Moebius::from_coeffs(1.0, 0.0, 0.0, -1.0);
  CHECK(refl.conjugate);
  const Complex z(0.7, 1.3);
  CHECK(std::abs(refl(z) - Complex(-0.7, 1.3)) < 1e-12);
  CHECK(hyp::hyp_distance(refl(z), refl(Complex(0, 1))) ==
        doctest::Approx(hyp::hyp_distance(z, Complex(0, 1))).epsilon(1e-12));
}

TEST_CASE("geodesic rays: unit speed and endpoint") {
  Rng rng(43);
  for (int t = 0; t < 100; ++t) {
    const Complex tau0 = random_tau(rng);
    const ExtendedReal xi = (t % 3 == 0) ? ExtendedReal::inf()
                                         : ExtendedReal::finite(rng.uniform(-2, 2));
    for (double s : {0.25, 1.0, 3.0}) {
      const Complex at = hyp::geodesic_ray(tau0, xi, s);
      CHECK(hyp::hyp_distance(tau0, at) == doctest::Approx(s).epsilon(1e-9));
    }
    const Complex far = hyp::geodesic_ray(tau0, xi, 8.0);
    if (xi.infinite)
      CHECK(far.imag() > 1e5);
    else
      CHECK(std::abs(far - Complex(xi.value, 0.0)) < 1e-5);
  }
}

TEST_CASE("tree boundary products are exact lcp depths") {
  const hyp::RootedTree tree(2, 12);
  const hyp::TreeBoundaryModel model{&tree};
  const auto p = tree.node_of("010011001100");
  const auto q = tree.node_of("010010101010");  // lcp 5
  const auto bp = hyp::boundary_gromov_product(model, p, q, 16);
  CHECK_FALSE(bp.infinite);
  CHECK(bp.value == doctest::Approx(5.0));
  CHECK(hyp::boundary_gromov_product(model, p, p, 16).infinite);
  CHECK_THROWS_AS(hyp::boundary_gromov_product(model, p, q, 1), input_error);
}

TEST_CASE("half-plane boundary product: 0 vs infinity from base i") {
  const HalfPlane plane;
  const hyp::HalfPlaneBoundaryModel model{&plane};
  const auto bp = hyp::boundary_gromov_product(model, ExtendedReal::finite(0.0),
                                               ExtendedReal::inf(), 1000);
  CHECK_FALSE(bp.infinite);
  CHECK(std::abs(bp.value) < 1e-6);
  CHECK(hyp::boundary_gromov_product(model, ExtendedReal::inf(), ExtendedReal::inf(), 16)
            .infinite);
}

TEST_CASE("visual metric bounds") {
  const hyp::RootedTree tree(2, 12);
  const hyp::TreeBoundaryModel model{&tree};
  const auto p = tree.node_of("000111000111");
  const auto q = tree.node_of("000011110000");  // lcp 3
  hyp::VisualMetricParams params;  // a = 2, c1 = c2 = 1
  const auto [lo, hi] = hyp::visual_metric_bounds(model, p, q, params, 16);
  CHECK(lo == doctest::Approx(0.125));
  CHECK(hi == doctest::Approx(0.125));
  const auto same = hyp::visual_metric_bounds(model, p, p, params, 16);
  CHECK(same.first == 0.0);
  CHECK(same.second == 0.0);
  params.a = 0.5;
  CHECK_THROWS_AS(hyp::visual_metric_bounds(model, p, q, params, 16), input_error);
}

TEST_CASE("tree visual metric satisfies the ultrametric inequality (delta = 0)") {
  const hyp::RootedTree tree(2, 10);
  const hyp::TreeBoundaryModel model{&tree};
  Rng rng(7);
  hyp::VisualMetricParams params;
  std::vector<hyp::RootedTree::Point> tips;
  for (int i = 0; i < 12; ++i) {
    std::string path;
    for (int d = 0; d < 10; ++d) path += (rng.next_u64() & 1) ? '1' : '0';
    tips.push_back(tree.node_of(path));
  }
  auto dvis = [&](std::size_t i, std::size_t j) {
    return hyp::visual_metric_bounds(model, tips[i], tips[j], params, 14).first;
  };
  for (std::size_t i = 0; i < tips.size(); ++i)
    for (std::size_t j = 0; j < tips.size(); ++j)
      for (std::size_t k = 0; k < tips.size(); ++k)
        CHECK(dvis(i, k) <= std::max(dvis(i, j), dvis(j, k)) + 1e-12);
}

TEST_CASE("visually-indistinguishable on tree rays is an equivalence at scale") {
  // lcp(a,c) >= min(lcp(a,b), lcp(b,c)) makes the threshold relation
  // transitive on rays, matching the equivalence claim in hyperbolic spaces.
  const hyp::RootedTree tree(2, 12);
  Rng rng(19);
  std::vector<hyp::RootedTree::Point> tips;
  for (int i = 0; i < 10; ++i) {
    std::string path;
    for (int d = 0; d < 12; ++d) path += (rng.next_u64() & 1) ? '1' : '0';
    tips.push_back(tree.node_of(path));
  }
  auto lcp_depth = [&](std::size_t i, std::size_t j) {
    return tree.depth(tree.lca(tips[i], tips[j]));
  };
  const int thresh = 4;
  for (std::size_t i = 0; i < tips.size(); ++i)
    for (std::size_t j = 0; j < tips.size(); ++j)
      for (std::size_t k = 0; k < tips.size(); ++k)
        if (lcp_depth(i, j) >= thresh && lcp_depth(j, k) >= thresh)
          CHECK(lcp_depth(i, k) >= thresh);
}

TEST_CASE("half-plane delta is exactly half of the curvature -1 estimate") {
  Rng rng(91);
  std::vector<Complex> sample;
  for (int i = 0; i < 40; ++i) sample.push_back(random_tau(rng));

  struct FullHyp {
    using Point = Complex;
    double distance(const Point& a, const Point& b) const {
      return 2.0 * hyp::hyp_distance(a, b);
    }
    Point base() const { return Complex(0.0, 1.0); }
  } full;
  const HalfPlane half;
  const double d_half = metric::four_point_delta(half, std::span<const Complex>(sample));
  const double d_full = metric::four_point_delta(full, std::span<const Complex>(sample));
  CHECK(d_half == doctest::Approx(0.5 * d_full).epsilon(1e-9));
}

TEST_CASE("boundary extension: identity, translation, constant") {
  const HalfPlane plane;
  const hyp::HalfPlaneBoundaryModel model{&plane};
  auto identity = [](const Complex& z) { return z; };
  const auto id_ext =
      hyp::boundary_extension(model, identity, ExtendedReal::finite(0.5), 64, 2.0);
  CHECK(id_ext.converged);
  CHECK_FALSE(id_ext.image->infinite);
  CHECK(id_ext.image->value == doctest::Approx(0.5).epsilon(1e-6));

  const auto shift = Moebius::from_coeffs(1, 1, 0, 1);
  for (double xi : {-1.5, 0.0, 2.0}) {
    const auto ext =
        hyp::boundary_extension(model, shift, ExtendedReal::finite(xi), 64, 2.0);
    CHECK(ext.converged);
    CHECK(ext.image->value == doctest::Approx(xi + 1.0).epsilon(1e-6));
  }

  auto constant = [](const Complex&) { return Complex(0.0, 1.0); };
  const auto bad =
      hyp::boundary_extension(model, constant, ExtendedReal::finite(0.0), 64, 2.0);
  CHECK_FALSE(bad.converged);
}

TEST_CASE("boundary extension of a composition is the composition of extensions") {
  const HalfPlane plane;
  const hyp::HalfPlaneBoundaryModel model{&plane};
  Rng rng(61);
  for (int t = 0; t < 20; ++t) {
    const auto g = random_isometry(rng);
    const auto h = random_isometry(rng);
    const auto gh = g.compose(h);
    const ExtendedReal p = ExtendedReal::finite(rng.uniform(-2, 2));
    const auto e_h = hyp::boundary_extension(model, h, p, 96, 2.0);
    REQUIRE(e_h.converged);
    const auto e_gh = hyp::boundary_extension(model, gh, p, 96, 2.0);
    const auto e_g_of = hyp::boundary_extension(model, g, *e_h.image, 96, 2.0);
    REQUIRE(e_gh.converged);
    REQUIRE(e_g_of.converged);
    CHECK(model.boundary_equal(*e_gh.image, *e_g_of.image));
  }
}

TEST_CASE("classify: Moebius isometries are AC with inverse candidate") {
  const HalfPlane plane;
  const hyp::HalfPlaneBoundaryModel model{&plane};
  const auto g = Moebius::from_coeffs(2.0, 1.0, 1.0, 1.0);
  std::vector<ExtendedReal> sample;
  for (double xi : {-1.0, 0.0, 1.0, 3.0}) sample.push_back(ExtendedReal::finite(xi));
  sample.push_back(ExtendedReal::inf());

  std::function<Complex(const Complex&)> inv = [g](const Complex& z) {
    return g.inverse()(z);
  };
  hyp::ClassifyParams params;
  params.horizon = 96;
  params.m_star = 4.0;
  const auto rep = hyp::classify_map(model, g, sample, {}, params, &inv);
  CHECK(rep.ac);
  CHECK(rep.ac_inv_candidate);

  // The identity is additionally surjective onto any sample.
  auto identity = [](const Complex& z) { return z; };
  const auto id_rep = hyp::classify_map(model, identity, sample, {}, params);
  CHECK(id_rep.ac);
  CHECK(id_rep.ac_as);

  CHECK_THROWS_AS(hyp::classify_map(model, identity, {}, {}, params), input_error);
}

TEST_CASE("classify: increasing reparameterization of the ray is AC") {
  const hyp::RayBoundaryModel model;
  auto reparam = [](double x) { return x * x + 0.5 * x; };  // increasing, unbounded
  const std::vector<hyp::RayBoundaryModel::BPoint> sample{{}};
  const auto rep = hyp::classify_map(model, reparam, sample, {},
                                     hyp::ClassifyParams{128, 4.0, 64, 0.0});
  CHECK(rep.ac);
  CHECK(rep.ac_as);

  auto bounded = [](double x) { return std::atan(x); };
  const auto bad = hyp::classify_map(model, bounded, sample, {},
                                     hyp::ClassifyParams{128, 4.0, 64, 0.0});
  CHECK_FALSE(bad.ac);
}

TEST_CASE("classify: tree branch collapse is not AC, with witness") {
  const hyp::RootedTree tree(2, 12);
  const hyp::TreeBoundaryModel model{&tree};
  const auto collapse = hyp::tree_branch_collapse(tree, tree.base(), 1, 0);
  std::vector<hyp::RootedTree::Point> sample{
      tree.node_of("011011011011"), tree.node_of("111011011011"),
      tree.node_of("001100110011"), tree.node_of("101100110011")};
  const auto rep = hyp::classify_map(model, collapse, sample, {},
                                     hyp::ClassifyParams{14, 4.0, 10, 0.0});
  CHECK_FALSE(rep.ac);
  CHECK_FALSE(rep.witnesses.empty());

  Rng rng(5);
  const auto iso = hyp::tree_automorphism(tree, rng);
  const auto good = hyp::classify_map(model, iso, sample, {},
                                      hyp::ClassifyParams{14, 4.0, 10, 0.0});
  CHECK(good.ac);
}
