#include "teichlab/lab/fills.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "teichlab/lab/constants.hpp"

namespace teichlab::lab {

void FillingInstance::validate() const {
  if (3 * g - 3 + n < 1) throw input_error("instance signature needs 3g-3+n >= 1");
  if (alphas.size() < 2) throw input_error("filling system needs m >= 2 curves");
  for (std::size_t i = 0; i < alphas.size(); ++i)
    for (std::size_t j = i + 1; j < alphas.size(); ++j)
      if (torus::inter_num(alphas[i], alphas[j]) == 0)
        throw input_error("system does not fill: curves " + alphas[i].str() + " and " +
                          alphas[j].str() + " are disjoint");
}

namespace {

torus::Slope random_slope(Rng& rng, std::int64_t box) {
  for (;;) {
    const std::int64_t p = rng.uniform_int(-box, box);
    const std::int64_t q = rng.uniform_int(0, box);
    if (p == 0 && q == 0) continue;
    return torus::Slope::of(p, q);
  }
}

}  // namespace

FillsBoundReport verify_fills_bound(const FillingInstance& instance, int trials,
                                    std::uint64_t seed, bool keep_rows) {
  instance.validate();
  if (trials < 1) throw input_error("trials must be >= 1");
  Rng rng(seed);
  FillsBoundReport report;
  const int m = static_cast<int>(instance.alphas.size());
  for (int t = 0; t < trials; ++t) {
    const double re = rng.uniform(-3.0, 3.0);
    const double im = std::exp(rng.uniform(-2.0, 2.0));
    const torus::TorusPoint tau(re, im);
    const torus::Slope gamma =
        instance.gamma ? *instance.gamma : random_slope(rng, 50);

    std::vector<std::int64_t> inters(instance.alphas.size());
    for (std::size_t i = 0; i < instance.alphas.size(); ++i)
      inters[i] = torus::inter_num(instance.alphas[i], gamma);

    double max_ext = 0.0;
    for (const auto& a : instance.alphas)
      max_ext = std::max(max_ext, torus::ext_length(tau, a));

    FillTrialRow row;
    row.tau_re = re;
    row.tau_im = im;
    row.gamma = gamma;
    row.ext_gamma = torus::ext_length(tau, gamma);
    row.bound = c_gamma(instance.g, instance.n, m, inters) * max_ext;
    row.ratio = row.ext_gamma / row.bound;
    report.max_ratio = std::max(report.max_ratio, row.ratio);
    if (keep_rows) report.rows.push_back(row);
  }
  report.pass = report.max_ratio <= 1.0;
  return report;
}

}  // namespace teichlab::lab
