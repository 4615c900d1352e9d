#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "teichlab/lab/cone.hpp"
#include "teichlab/lab/constants.hpp"
#include "teichlab/lab/fills.hpp"
#include "teichlab/util/rng.hpp"

using namespace teichlab;
using torus::Slope;
using torus::TorusPoint;

TEST_CASE("appendix constants") {
  CHECK(lab::appendix_constant(1, 1, 2) == doctest::Approx(5600.0));
  CHECK(lab::appendix_constant(0, 5, 2) == doctest::Approx(17248.0));
  // Monotone non-decreasing in m.
  double prev = 0.0;
  for (int m = 1; m <= 20; ++m) {
    const double c = lab::appendix_constant(1, 1, m);
    CHECK(c >= prev);
    prev = c;
  }
  CHECK_THROWS_AS(lab::appendix_constant(1, 0, 2), input_error);
  CHECK_THROWS_AS(lab::appendix_constant(1, 1, 0), input_error);
}

TEST_CASE("c_gamma: arithmetic, peripheral case, quadratic shape") {
  CHECK(lab::c_gamma(1, 1, 2, {1, 0}) == doctest::Approx(5604.0));
  CHECK(lab::c_gamma(1, 1, 2, {0, 0}) == doctest::Approx(4.0));
  CHECK(lab::c_gamma(1, 1, 2, {0, 0}) == doctest::Approx(lab::peripheral_constant(1, 1)));

  // Quadratic in the total intersection count.
  const double base = lab::peripheral_constant(1, 1);
  const double c1 = lab::c_gamma(1, 1, 2, {1}) - base;
  const double c3 = lab::c_gamma(1, 1, 2, {3}) - base;
  CHECK(c3 == doctest::Approx(9.0 * c1));
  CHECK_THROWS_AS(lab::c_gamma(1, 1, 2, {-1}), input_error);
}

TEST_CASE("fills bound: spec instance and sweeps") {
  lab::FillingInstance inst;
  inst.alphas = {Slope{1, 0}, Slope{0, 1}};
  inst.gamma = Slope{1, 1};

  // At tau = i: Ext(gamma) = 2 against C_gamma * max Ext = 22404.
  const double cg = lab::c_gamma(1, 1, 2, {1, 1});
  CHECK(cg == doctest::Approx(22404.0));
  CHECK(torus::ext_length(TorusPoint(0, 1), Slope{1, 1}) == doctest::Approx(2.0));
  CHECK(2.0 / cg == doctest::Approx(8.93e-5).epsilon(0.01));

  const auto rep = lab::verify_fills_bound(inst, 2000, 424242);
  CHECK(rep.pass);
  CHECK(rep.max_ratio <= 1.0);
  CHECK(rep.rows.size() == 2000);

  // gamma equal to a system curve still passes (the other curve meets it).
  lab::FillingInstance same;
  same.alphas = {Slope{1, 0}, Slope{0, 1}};
  same.gamma = Slope{1, 0};
  CHECK(lab::verify_fills_bound(same, 500, 7).pass);

  // Random-gamma draws.
  lab::FillingInstance open;
  open.alphas = {Slope{1, 0}, Slope{0, 1}, Slope{1, 1}};
  const auto rep2 = lab::verify_fills_bound(open, 2000, 99, false);
  CHECK(rep2.pass);
  CHECK(rep2.rows.empty());

  // Non-filling system rejected.
  lab::FillingInstance bad;
  bad.alphas = {Slope{1, 0}, Slope{1, 0}};
  CHECK_THROWS_AS(lab::verify_fills_bound(bad, 10, 1), input_error);
}

TEST_CASE("subadditivity on parallel weighted curves") {
  Rng rng(123);
  std::vector<TorusPoint> ys;
  for (int i = 0; i < 25; ++i)
    ys.emplace_back(rng.uniform(-2, 2), std::exp(rng.uniform(-1, 1)));

  const auto rep = lab::subadditivity_check(ys, Slope{2, 1}, 1.0, 1.0);
  CHECK(rep.holds);
  // Equal weights: lower bound is sqrt(2)/2 of the upper, upper is tight.
  for (const auto& row : rep.rows) {
    CHECK(row.upper == doctest::Approx(row.mid));
    CHECK(row.lower == doctest::Approx(row.mid / std::sqrt(2.0)));
  }

  for (int t = 0; t < 20; ++t) {
    const double w1 = std::exp(rng.uniform(-1, 2));
    const double w2 = std::exp(rng.uniform(-1, 2));
    Slope s{rng.uniform_int(-5, 5), rng.uniform_int(1, 5)};
    const auto r = lab::subadditivity_check(ys, Slope::of(s.p, s.q), w1, w2);
    CHECK(r.holds);
    CHECK(r.min_upper_gap >= -1e-12);
  }
  CHECK_THROWS_AS(lab::subadditivity_check(ys, Slope{1, 0}, -1.0, 1.0), input_error);
}

TEST_CASE("cone extremal length: normalization, boundary shape, generalized minsky") {
  const auto slopes = torus::enumerate_slopes(6, 6);
  const auto at_base = torus::GMFunctional::interior(torus::kBasePoint, slopes);

  // E_{x0} on x0: the supremum is 1, attained at every slope.
  const auto res = lab::cone_ext_length(torus::kBasePoint, at_base, slopes);
  CHECK(res.value == doctest::Approx(1.0).epsilon(1e-9));

  // Boundary functional of G on y: Ext_y(G)/Ext_{x0}(G), approached from below
  // as the slope set refines (the true supremum sits at an irrational
  // direction, so the gap is discretization error).
  const Slope g{1, 2};
  const TorusPoint y(0.4, 1.9);
  const auto rich = torus::enumerate_slopes(60, 60);
  const auto bf = torus::GMFunctional::boundary_of(g, rich);
  const auto bres = lab::cone_ext_length(y, bf, rich);
  const double expected =
      torus::ext_length(y, g) / torus::ext_length(torus::kBasePoint, g);
  CHECK(bres.value <= expected * (1.0 + 1e-9));
  CHECK(bres.value == doctest::Approx(expected).epsilon(1e-4));

  // Monotone in the slope set: a smaller set cannot give a larger value.
  const auto fewer = torus::enumerate_slopes(2, 2);
  CHECK(lab::cone_ext_length(y, bf, fewer).value <= bres.value + 1e-12);

  // Degree-2 homogeneity in the functional comes with the table values.
  CHECK_THROWS_AS(lab::cone_ext_length(y, bf, {}), input_error);

  // Generalized Minsky sweep over interior functional pairs.
  Rng rng(2024);
  for (int t = 0; t < 200; ++t) {
    const TorusPoint w(rng.uniform(-2, 2), std::exp(rng.uniform(-1, 1)));
    const TorusPoint z(rng.uniform(-2, 2), std::exp(rng.uniform(-1, 1)));
    const TorusPoint yy(rng.uniform(-2, 2), std::exp(rng.uniform(-1, 1)));
    const auto fa = torus::GMFunctional::interior(w, fewer);
    const auto chk = lab::cone_ext_length(yy, fa, fewer, {z});
    CHECK(chk.generalized_minsky_ok);
    CHECK(chk.worst_minsky_ratio <= 1.0 + 1e-9);
  }
}
