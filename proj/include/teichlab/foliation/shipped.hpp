#pragma once

#include "teichlab/foliation/curve_system.hpp"

namespace teichlab::foliation {

/// Torus slope system, signature (1,1): slopes with |p| <= pmax, q <= qmax
/// and the determinant intersection pairing; one whole-surface support.
/// Any two distinct slopes intersect, so null-set comparison degenerates and
/// the non-transitivity pattern is impossible here.
CurveSystem torus_system(std::int64_t pmax = 2, std::int64_t qmax = 2);

/// cx = 2 system, signature (1,2): curves alpha, beta, gamma with
/// i(alpha,.) = 0 and i(beta,gamma) = 1, a complexity-1 support bounded by
/// alpha containing beta and gamma, and the whole-surface support.
CurveSystem cx2_system();

/// cx = 3 system, signature (2,0): pants curves a1, a2, s plus handle duals
/// b1, b2; one-holed-torus supports on each side of s and the whole-surface
/// support.
CurveSystem cx3_system();

}  // namespace teichlab::foliation
