#pragma once

#include <cstdint>
#include <vector>

#include "teichlab/util/error.hpp"

namespace teichlab::lab {

/// Filling-bound constant C(g,n,m) = 16 (m+2g+n)^2 (m + 4(2g+n)(6g-6+n)^2),
/// depending only on the topological type and the size of the filling system.
double appendix_constant(int g, int n, int m);

/// C_gamma = C(g,n,m) (sum_i i(alpha_i, gamma))^2 + 4 (6g-6+n)^2.
double c_gamma(int g, int n, int m, const std::vector<std::int64_t>& intersections);

/// The peripheral specialization 4 (6g-6+n)^2 (the sum-zero case).
double peripheral_constant(int g, int n);

}  // namespace teichlab::lab
