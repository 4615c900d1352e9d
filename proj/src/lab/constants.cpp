#include "teichlab/lab/constants.hpp"

namespace teichlab::lab {

namespace {

void require_signature(int g, int n) {
  if (g < 0 || n < 0 || 3 * g - 3 + n < 1)
    throw input_error("signature needs 3g-3+n >= 1");
}

}  // namespace

double appendix_constant(int g, int n, int m) {
  require_signature(g, n);
  if (m < 1) throw input_error("filling system size m must be >= 1");
  const double s = 2.0 * g + n;
  const double e = 6.0 * g - 6.0 + n;
  const double a = m + s;
  return 16.0 * a * a * (m + 4.0 * s * e * e);
}

double c_gamma(int g, int n, int m, const std::vector<std::int64_t>& intersections) {
  double sum = 0.0;
  for (std::int64_t v : intersections) {
    if (v < 0) throw input_error("intersection numbers must be nonnegative");
    sum += static_cast<double>(v);
  }
  return appendix_constant(g, n, m) * sum * sum + peripheral_constant(g, n);
}

double peripheral_constant(int g, int n) {
  require_signature(g, n);
  const double e = 6.0 * g - 6.0 + n;
  return 4.0 * e * e;
}

}  // namespace teichlab::lab
