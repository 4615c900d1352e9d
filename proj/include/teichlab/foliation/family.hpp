#pragma once

#include <string>
#include <vector>

#include "teichlab/foliation/foliation.hpp"

namespace teichlab::foliation {

struct GenerationLimits {
  int max_arational = 3;
  int max_essential = -1;  // -1: use cx(S)
};

/// Every normal-form structure over the system within the limits: subsets of
/// pairwise-disjoint supports combined with admissible essential-curve sets,
/// weights fixed at 1. Deterministic order.
std::vector<SymbolicFoliation> generate_family(const CurveSystem& system,
                                               const GenerationLimits& limits = {});

struct TowerResult {
  int height = 0;
  std::vector<std::string> witness;  // structure keys along an extremal tower
  bool within_complexity_bound = false;
};

/// Longest strict chain N(G) > N(G2) > ... inside the family, with the
/// witness tower; height is the number of chain elements and never exceeds
/// cx(S).
TowerResult tower_height(const SymbolicFoliation& g,
                         const std::vector<SymbolicFoliation>& family);

struct FamilyLawReport {
  bool partial_order = true;        // antisymmetry + transitivity of the comparison
  bool xi0_strictly_increasing = true;  // along every strict inclusion
  bool planar_first_coordinate_jump = true;  // planar: chi-weight rises by >= 2
  bool heights_bounded = true;      // every tower height <= cx(S)
  int max_height = 0;
  std::vector<std::string> max_height_starters;  // structure keys achieving it
  std::vector<std::string> violations;
};

/// Exhaustive law check over a generated family: the null-set comparison is
/// a partial order on structure classes, xi0 strictly increases along every
/// strict inclusion (in the tower order), heights respect cx(S), and on
/// planar signatures the support weight -chi = cx + 1 jumps by at least 2
/// whenever it moves.
FamilyLawReport check_family_laws(const std::vector<SymbolicFoliation>& family);

}  // namespace teichlab::foliation
