#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "teichlab/util/error.hpp"

namespace teichlab::foliation {

/// Essential subsurface declared by combinatorial data: a complexity, the
/// curve classes parallel to its boundary, the curves inside it, and the
/// curves disjoint from it. Every relation used by an operation must be
/// declared; nothing is inferred from topology.
struct Support {
  std::string id;
  int cx = 1;
  std::vector<std::string> boundary;
  std::vector<std::string> inside;
  std::vector<std::string> disjoint;
};

enum class SupportRelation { inside, boundary, disjoint, unknown };

/// Declared curve system over a surface signature (g, n): named curves, a
/// symmetric intersection matrix, and named supports with their relations.
class CurveSystem {
 public:
  CurveSystem(int genus, int punctures, std::vector<std::string> curves,
              std::vector<std::vector<std::int64_t>> imatrix,
              std::vector<Support> supports, std::string name = "");

  int genus() const { return g_; }
  int punctures() const { return n_; }
  int cx() const { return 3 * g_ - 3 + n_; }
  int euler_characteristic() const { return 2 - 2 * g_ - n_; }
  bool planar() const { return g_ == 0; }
  const std::string& name() const { return name_; }

  const std::vector<std::string>& curves() const { return curves_; }
  const std::vector<Support>& supports() const { return supports_; }

  bool has_curve(const std::string& id) const { return curve_index_.count(id) > 0; }
  std::size_t curve_index(const std::string& id) const;
  const Support& support(const std::string& id) const;
  bool has_support(const std::string& id) const { return support_index_.count(id) > 0; }

  std::int64_t inter(const std::string& c1, const std::string& c2) const;

  /// Declared relation of a curve to a support; `unknown` when undeclared.
  SupportRelation relation(const std::string& curve, const std::string& support) const;

  /// Two supports are declared disjoint when each inside-curve of one is
  /// declared disjoint-from or boundary-of the other.
  bool supports_declared_disjoint(const std::string& s1, const std::string& s2) const;

 private:
  void validate() const;

  int g_ = 1, n_ = 1;
  std::string name_;
  std::vector<std::string> curves_;
  std::vector<std::vector<std::int64_t>> imatrix_;
  std::vector<Support> supports_;
  std::unordered_map<std::string, std::size_t> curve_index_;
  std::unordered_map<std::string, std::size_t> support_index_;
};

}  // namespace teichlab::foliation
