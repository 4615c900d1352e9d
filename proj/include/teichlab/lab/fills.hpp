#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "teichlab/torus/extremal.hpp"
#include "teichlab/util/rng.hpp"

namespace teichlab::lab {

/// Filling-bound instance on the torus model: slopes that pairwise intersect
/// (a filling system), a target curve, and the signature whose constants are
/// exercised.
struct FillingInstance {
  int g = 1;
  int n = 1;
  std::vector<torus::Slope> alphas;
  std::optional<torus::Slope> gamma;  // empty: redraw gamma each trial

  void validate() const;
};

struct FillTrialRow {
  double tau_re = 0.0;
  double tau_im = 0.0;
  torus::Slope gamma{1, 0};
  double ext_gamma = 0.0;
  double bound = 0.0;  // C_gamma * max_i Ext(alpha_i)
  double ratio = 0.0;
};

struct FillsBoundReport {
  bool pass = false;
  double max_ratio = 0.0;
  std::vector<FillTrialRow> rows;
};

/// Seeded sweep of Ext_tau(gamma) <= C_gamma max_i Ext_tau(alpha_i) over
/// random tau (and random gamma when the instance leaves it open).
FillsBoundReport verify_fills_bound(const FillingInstance& instance, int trials,
                                    std::uint64_t seed, bool keep_rows = true);

}  // namespace teichlab::lab
