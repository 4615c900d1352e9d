#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "teichlab/foliation/curve_system.hpp"

namespace teichlab::foliation {

enum class ComponentKind { arational, essential, peripheral };

struct Component {
  ComponentKind kind = ComponentKind::essential;
  std::string ref;  // support id (arational) or curve id
  double weight = 1.0;
};

/// Measured foliation in normal form over a declared curve system:
/// arational pieces on pairwise-disjoint supports, essential curves disjoint
/// from all listed supports, and peripheral curves parallel to listed
/// support boundaries.
class SymbolicFoliation {
 public:
  SymbolicFoliation(const CurveSystem& system, std::vector<Component> components);

  const CurveSystem& system() const { return *system_; }
  const std::vector<Component>& components() const { return components_; }

  std::set<std::string> arational_supports() const;
  std::set<std::string> essential_curves() const;
  std::set<std::string> peripheral_curves() const;

  /// Structure key: sorted arational supports + sorted essential curves,
  /// weights ignored. Two foliations are topologically equivalent after
  /// truncation exactly when their keys agree.
  std::string structure_key() const;

  SymbolicFoliation scaled(double factor) const;

 private:
  const CurveSystem* system_;
  std::vector<Component> components_;
};

/// G with every peripheral component deleted (the foliated annuli removed).
SymbolicFoliation truncate(const SymbolicFoliation& g);

/// True iff the truncations have identical arational-support sets and
/// essential-curve sets, weights ignored.
bool top_equiv(const SymbolicFoliation& g, const SymbolicFoliation& h);

/// All declared curves c with i(c, G) = 0: zero row against every curve
/// component, and declared disjoint-from or boundary-of every arational
/// support (arationality forces positive pairing inside). Throws
/// "insufficient declarations" naming the first undeclared pair.
std::set<std::string> null_curves(const SymbolicFoliation& g);

enum class NullSetOrder { equal, left_contains_right, right_contains_left, incomparable };

/// Compares null sets structurally: N(G) contains N(H) iff every component
/// of the truncation of G is absorbed by the truncation of H (arational
/// supports persist as supports; essential curves persist as essential
/// curves or become boundary curves of new arational supports). The verdict
/// is cross-checked against declared-curve null-set containment.
NullSetOrder nullset_compare(const SymbolicFoliation& g, const SymbolicFoliation& h);

/// Complexity (-sum of arational support complexities, essential-curve
/// count), as a lexicographically ordered value.
std::pair<std::int64_t, std::int64_t> xi0(const SymbolicFoliation& g);

/// Tower order on xi0 values: complexity strictly grows along adherence
/// towers, counting support complexity positively. a < b in this order iff
/// (-a.first, a.second) < (-b.first, b.second) lexicographically.
inline bool xi0_tower_less(const std::pair<std::int64_t, std::int64_t>& a,
                           const std::pair<std::int64_t, std::int64_t>& b) {
  if (-a.first != -b.first) return -a.first < -b.first;
  return a.second < b.second;
}

struct VisExperimentReport {
  double pair_ab = 0.0;  // i_{x0}([alpha],[beta])
  double pair_ac = 0.0;  // i_{x0}([alpha],[gamma])
  double pair_bc = 0.0;  // i_{x0}([beta],[gamma])
  bool pattern = false;  // two vanishing pairings, one positive
};

/// The non-transitivity witness: sequences toward beta and gamma are both
/// indistinguishable from the alpha-sequence but not from each other.
/// Requires i(alpha,beta) = i(alpha,gamma) = 0 and i(beta,gamma) > 0;
/// base extremal lengths must be positive for the three curves.
VisExperimentReport vis_experiment(const CurveSystem& system, const std::string& alpha,
                                   const std::string& beta, const std::string& gamma,
                                   const std::map<std::string, double>& base_ext_lengths);

struct VanishingReport {
  std::vector<std::string> vanishing;          // curves in the null set
  std::vector<std::string> annulus_cores;      // essential curves of G
  std::vector<std::string> crossing;           // curves meeting the foliation
  std::vector<std::string> arational_supports; // supports of arational pieces
};

/// Decomposition-style classification of every declared curve relative to
/// the null-set class of G. Depends only on that class: truncation and
/// rescaling leave the report unchanged.
VanishingReport vanishing_report(const SymbolicFoliation& g);

}  // namespace teichlab::foliation
