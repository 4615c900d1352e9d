#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "teichlab/foliation/family.hpp"
#include "teichlab/foliation/foliation.hpp"
#include "teichlab/foliation/shipped.hpp"

using namespace teichlab;
using foliation::Component;
using foliation::ComponentKind;
using foliation::CurveSystem;
using foliation::NullSetOrder;
using foliation::SymbolicFoliation;

namespace {

SymbolicFoliation essential(const CurveSystem& sys,
                            const std::vector<std::string>& curves, double w = 1.0) {
  std::vector<Component> parts;
  for (const auto& c : curves) parts.push_back({ComponentKind::essential, c, w});
  return SymbolicFoliation(sys, std::move(parts));
}

SymbolicFoliation arational(const CurveSystem& sys, const std::string& support,
                            double w = 1.0) {
  return SymbolicFoliation(sys, {{ComponentKind::arational, support, w}});
}

}  // namespace

TEST_CASE("curve system validation") {
  CHECK_THROWS_AS(CurveSystem(1, 0, {}, {}, {}), input_error);  // cx = 0
  CHECK_THROWS_AS(CurveSystem(1, 2, {"a", "b"}, {{0, 1}, {2, 0}}, {}), input_error);
  // Boundary curve meeting an inside curve.
  foliation::Support bad;
  bad.id = "X";
  bad.cx = 1;
  bad.boundary = {"a"};
  bad.inside = {"b"};
  CHECK_THROWS_AS(CurveSystem(1, 2, {"a", "b"}, {{0, 1}, {1, 0}}, {bad}), input_error);

  const auto sys = foliation::cx2_system();
  CHECK(sys.cx() == 2);
  CHECK(sys.relation("alpha", "X1") == foliation::SupportRelation::boundary);
  CHECK(sys.relation("beta", "X1") == foliation::SupportRelation::inside);
  CHECK_FALSE(sys.supports_declared_disjoint("X1", "Xfull"));

  const auto big = foliation::cx3_system();
  CHECK(big.supports_declared_disjoint("XL", "XR"));
  CHECK_FALSE(big.supports_declared_disjoint("XL", "Xfull"));
}

TEST_CASE("foliation normal-form validation") {
  const auto sys = foliation::cx2_system();
  // Essential curve inside a listed support is rejected.
  CHECK_THROWS_AS(SymbolicFoliation(sys, {{ComponentKind::arational, "X1", 1.0},
                                          {ComponentKind::essential, "beta", 1.0}}),
                  input_error);
  // A peripheral needs its support listed.
  CHECK_THROWS_AS(SymbolicFoliation(sys, {{ComponentKind::peripheral, "alpha", 1.0}}),
                  input_error);
  // Crossing essential curves are rejected.
  CHECK_THROWS_AS(essential(sys, {"beta", "gamma"}), input_error);
  // Valid: arational piece with its boundary annulus.
  const SymbolicFoliation ok(sys, {{ComponentKind::arational, "X1", 1.0},
                                   {ComponentKind::peripheral, "alpha", 0.5}});
  CHECK(ok.peripheral_curves().count("alpha") == 1);

  const auto big = foliation::cx3_system();
  // Overfull: two supports plus an essential curve exceed cx = 3.
  CHECK_THROWS_AS(SymbolicFoliation(big, {{ComponentKind::arational, "XL", 1.0},
                                          {ComponentKind::arational, "XR", 1.0},
                                          {ComponentKind::essential, "s", 1.0}}),
                  input_error);
}

TEST_CASE("truncate deletes peripherals and is idempotent") {
  const auto sys = foliation::cx2_system();
  const auto plain = essential(sys, {"alpha"});
  CHECK(truncate(plain).structure_key() == plain.structure_key());

  const SymbolicFoliation g(sys, {{ComponentKind::arational, "X1", 1.0},
                                  {ComponentKind::peripheral, "alpha", 2.0}});
  const auto trunc = truncate(g);
  CHECK(trunc.peripheral_curves().empty());
  CHECK(trunc.arational_supports() == std::set<std::string>{"X1"});
  CHECK(truncate(trunc).structure_key() == trunc.structure_key());
}

TEST_CASE("topological equivalence: weights, peripherals, extra components") {
  const auto sys = foliation::cx2_system();
  const auto g = essential(sys, {"alpha", "beta"});
  CHECK(foliation::top_equiv(g, g.scaled(3.0)));

  const auto big = foliation::cx3_system();
  const SymbolicFoliation a2_xl(big, {{ComponentKind::arational, "XL", 1.0},
                                      {ComponentKind::essential, "a2", 1.0}});
  const auto xl = arational(big, "XL");
  CHECK_FALSE(foliation::top_equiv(a2_xl, xl));
  CHECK(foliation::top_equiv(xl, xl.scaled(5.0)));

  const SymbolicFoliation xl_with_peripheral(
      big, {{ComponentKind::arational, "XL", 1.0},
            {ComponentKind::peripheral, "s", 1.0}});
  CHECK(foliation::top_equiv(xl, xl_with_peripheral));
}

TEST_CASE("null curves: matrix rows, arationality, truncation invariance") {
  const auto sys = foliation::cx2_system();
  const auto g = essential(sys, {"alpha"});
  CHECK(null_curves(g) == std::set<std::string>{"alpha", "beta", "gamma"});

  const auto x1 = arational(sys, "X1");
  CHECK(null_curves(x1) == std::set<std::string>{"alpha"});

  const auto beta = essential(sys, {"beta"});
  CHECK(null_curves(beta) == std::set<std::string>{"alpha", "beta"});

  // Truncation preserves curve-level null sets on valid declarations.
  const SymbolicFoliation with_p(sys, {{ComponentKind::arational, "X1", 1.0},
                                       {ComponentKind::peripheral, "alpha", 1.0}});
  CHECK(null_curves(with_p) == null_curves(truncate(with_p)));
}

TEST_CASE("null curves: insufficient declarations") {
  // A support leaving g's relation undeclared.
  foliation::Support x;
  x.id = "X";
  x.cx = 1;
  x.boundary = {"a"};
  x.inside = {"b"};
  const CurveSystem sys(1, 2, {"a", "b", "g"},
                        {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}}, {x});
  const auto g = arational(sys, "X");
  CHECK_THROWS_WITH_AS(null_curves(g), doctest::Contains("insufficient declarations"),
                       input_error);
}

TEST_CASE("nullset_compare: containment, incomparability, boundary absorption") {
  const auto sys = foliation::cx2_system();
  const auto alpha = essential(sys, {"alpha"});
  const auto beta = essential(sys, {"beta"});
  const auto gamma = essential(sys, {"gamma"});
  const auto ab = essential(sys, {"alpha", "beta"});

  CHECK(nullset_compare(alpha, ab) == NullSetOrder::left_contains_right);
  CHECK(nullset_compare(ab, alpha) == NullSetOrder::right_contains_left);
  CHECK(nullset_compare(alpha, alpha.scaled(2.0)) == NullSetOrder::equal);
  CHECK(nullset_compare(beta, gamma) == NullSetOrder::incomparable);

  // An essential curve absorbed as the boundary of a new arational support.
  const auto x1 = arational(sys, "X1");
  CHECK(nullset_compare(alpha, x1) == NullSetOrder::left_contains_right);
  CHECK(nullset_compare(beta, x1) == NullSetOrder::incomparable);
}

TEST_CASE("xi0 values and tower order") {
  const auto sys = foliation::cx2_system();
  CHECK(xi0(essential(sys, {"alpha"})) == std::pair<std::int64_t, std::int64_t>{0, 1});
  CHECK(xi0(arational(sys, "X1")) == std::pair<std::int64_t, std::int64_t>{-1, 0});

  const auto big = foliation::cx3_system();
  const SymbolicFoliation mixed(big, {{ComponentKind::arational, "XL", 1.0},
                                      {ComponentKind::essential, "a2", 1.0}});
  CHECK(xi0(mixed) == std::pair<std::int64_t, std::int64_t>{-1, 1});

  CHECK(foliation::xi0_tower_less({0, 1}, {0, 2}));
  CHECK(foliation::xi0_tower_less({0, 1}, {-1, 0}));
  CHECK(foliation::xi0_tower_less({-1, 0}, {-1, 1}));
  CHECK_FALSE(foliation::xi0_tower_less({-1, 0}, {0, 1}));
}

TEST_CASE("tower heights on the cx2 system") {
  const auto sys = foliation::cx2_system();
  const auto family = generate_family(sys);
  CHECK(family.size() == 7);

  const auto alpha = essential(sys, {"alpha"});
  const auto res = tower_height(alpha, family);
  CHECK(res.height == 2);
  CHECK(res.within_complexity_bound);

  CHECK(tower_height(arational(sys, "Xfull"), family).height == 1);
  CHECK(tower_height(arational(sys, "X1"), family).height == 1);
  CHECK(tower_height(essential(sys, {"alpha", "beta"}), family).height == 1);
  CHECK_THROWS_AS(tower_height(alpha, {}), input_error);
}

TEST_CASE("tower heights on the cx3 system: max only from single curves") {
  const auto sys = foliation::cx3_system();
  const auto family = generate_family(sys);
  int max_height = 0;
  std::vector<std::string> starters;
  for (const auto& g : family) {
    const auto res = tower_height(g, family);
    CHECK(res.within_complexity_bound);
    if (res.height > max_height) {
      max_height = res.height;
      starters.clear();
    }
    if (res.height == max_height) starters.push_back(g.structure_key());
  }
  CHECK(max_height == sys.cx());
  for (const auto& key : starters) {
    // Maximal towers start at single essential curves: no arational part,
    // exactly one curve in the key.
    CHECK(key.substr(0, 4) == "A:|E");
    CHECK(std::count(key.begin(), key.end(), ',') == 1);
  }
  // The boundary-absorption tower s > XL > XL + a2 realizes the maximum too.
  const auto s = essential(sys, {"s"});
  CHECK(tower_height(s, family).height == 3);
}

TEST_CASE("family laws on all three shipped systems") {
  for (const auto& sys : {foliation::torus_system(2, 2), foliation::cx2_system(),
                          foliation::cx3_system()}) {
    const auto family = generate_family(sys);
    const auto laws = check_family_laws(family);
    for (const auto& v : laws.violations) MESSAGE(v);
    CHECK(laws.partial_order);
    CHECK(laws.xi0_strictly_increasing);
    CHECK(laws.heights_bounded);
    CHECK(laws.max_height == (sys.cx() >= 2 ? sys.cx() : 1));
  }
}

TEST_CASE("torus system: distinct slope classes are incomparable") {
  const auto sys = foliation::torus_system(1, 1);
  const auto family = generate_family(sys);
  for (const auto& g : family)
    for (const auto& h : family) {
      if (g.structure_key() == h.structure_key()) continue;
      CHECK(nullset_compare(g, h) == NullSetOrder::incomparable);
    }
}

TEST_CASE("vis experiment: pattern, scaling invariance, torus rejection") {
  const auto sys = foliation::cx2_system();
  std::map<std::string, double> ext{{"alpha", 1.0}, {"beta", 1.0}, {"gamma", 1.0}};
  const auto rep = vis_experiment(sys, "alpha", "beta", "gamma", ext);
  CHECK(rep.pattern);
  CHECK(rep.pair_ab == doctest::Approx(0.0));
  CHECK(rep.pair_ac == doctest::Approx(0.0));
  CHECK(rep.pair_bc == doctest::Approx(1.0));

  std::map<std::string, double> scaled;
  for (const auto& [k, v] : ext) scaled[k] = 4.0 * v;
  const auto rep4 = vis_experiment(sys, "alpha", "beta", "gamma", scaled);
  CHECK(rep4.pattern);
  CHECK(rep4.pair_bc == doctest::Approx(0.25));

  const auto torus = foliation::torus_system(2, 2);
  std::map<std::string, double> text;
  for (const auto& c : torus.curves()) text[c] = 1.0;
  const auto c0 = torus.curves()[0], c1 = torus.curves()[1], c2 = torus.curves()[2];
  CHECK_THROWS_AS(vis_experiment(torus, c0, c1, c2, text), input_error);
}

TEST_CASE("vanishing report: cores, vanishing, weight and truncation invariance") {
  const auto sys = foliation::cx2_system();
  const auto g = essential(sys, {"beta"});
  const auto rep = vanishing_report(g);
  CHECK(rep.annulus_cores == std::vector<std::string>{"beta"});
  CHECK(rep.vanishing == std::vector<std::string>{"alpha"});
  CHECK(rep.crossing == std::vector<std::string>{"gamma"});
  CHECK(rep.arational_supports.empty());

  const auto rep5 = vanishing_report(g.scaled(5.0));
  CHECK(rep5.vanishing == rep.vanishing);
  CHECK(rep5.annulus_cores == rep.annulus_cores);
  CHECK(rep5.crossing == rep.crossing);

  // Arational filling the whole surface: nothing vanishes.
  const auto full = arational(sys, "Xfull");
  const auto frep = vanishing_report(full);
  CHECK(frep.vanishing.empty());
  CHECK(frep.annulus_cores.empty());
  CHECK(frep.arational_supports == std::vector<std::string>{"Xfull"});

  // Adding a peripheral annulus does not change the report.
  const SymbolicFoliation x1p(sys, {{ComponentKind::arational, "X1", 1.0},
                                    {ComponentKind::peripheral, "alpha", 3.0}});
  const auto a = vanishing_report(x1p);
  const auto b = vanishing_report(arational(sys, "X1"));
  CHECK(a.vanishing == b.vanishing);
  CHECK(a.annulus_cores == b.annulus_cores);
  CHECK(a.crossing == b.crossing);
}
