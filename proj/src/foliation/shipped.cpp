#include "teichlab/foliation/shipped.hpp"

#include "teichlab/torus/slope.hpp"

namespace teichlab::foliation {

CurveSystem torus_system(std::int64_t pmax, std::int64_t qmax) {
  const auto slopes = torus::enumerate_slopes(pmax, qmax);
  std::vector<std::string> names;
  names.reserve(slopes.size());
  for (const auto& s : slopes) names.push_back(s.str());
  std::vector<std::vector<std::int64_t>> im(slopes.size(),
                                            std::vector<std::int64_t>(slopes.size(), 0));
  for (std::size_t i = 0; i < slopes.size(); ++i)
    for (std::size_t j = 0; j < slopes.size(); ++j)
      im[i][j] = torus::inter_num(slopes[i], slopes[j]);
  Support whole;
  whole.id = "S";
  whole.cx = 1;
  whole.inside = names;
  return CurveSystem(1, 1, names, std::move(im), {whole}, "torus");
}

CurveSystem cx2_system() {
  const std::vector<std::string> curves{"alpha", "beta", "gamma"};
  std::vector<std::vector<std::int64_t>> im{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}};
  Support x1;
  x1.id = "X1";
  x1.cx = 1;
  x1.boundary = {"alpha"};
  x1.inside = {"beta", "gamma"};
  Support whole;
  whole.id = "Xfull";
  whole.cx = 2;
  whole.inside = curves;
  return CurveSystem(1, 2, curves, std::move(im), {x1, whole}, "cx2");
}

CurveSystem cx3_system() {
  const std::vector<std::string> curves{"a1", "a2", "s", "b1", "b2"};
  // a1, a2, s is a pants decomposition; b1 meets a1 once, b2 meets a2 once.
  std::vector<std::vector<std::int64_t>> im{
      {0, 0, 0, 1, 0},
      {0, 0, 0, 0, 1},
      {0, 0, 0, 0, 0},
      {1, 0, 0, 0, 0},
      {0, 1, 0, 0, 0},
  };
  Support left;
  left.id = "XL";
  left.cx = 1;
  left.boundary = {"s"};
  left.inside = {"a1", "b1"};
  left.disjoint = {"a2", "b2"};
  Support right;
  right.id = "XR";
  right.cx = 1;
  right.boundary = {"s"};
  right.inside = {"a2", "b2"};
  right.disjoint = {"a1", "b1"};
  Support whole;
  whole.id = "Xfull";
  whole.cx = 3;
  whole.inside = curves;
  return CurveSystem(2, 0, curves, std::move(im), {left, right, whole}, "cx3");
}

}  // namespace teichlab::foliation
