#include "teichlab/foliation/curve_system.hpp"

#include <algorithm>
#include <set>

namespace teichlab::foliation {

CurveSystem::CurveSystem(int genus, int punctures, std::vector<std::string> curves,
                         std::vector<std::vector<std::int64_t>> imatrix,
                         std::vector<Support> supports, std::string name)
    : g_(genus),
      n_(punctures),
      name_(std::move(name)),
      curves_(std::move(curves)),
      imatrix_(std::move(imatrix)),
      supports_(std::move(supports)) {
  for (std::size_t i = 0; i < curves_.size(); ++i)
    if (!curve_index_.emplace(curves_[i], i).second)
      throw input_error("duplicate curve id: " + curves_[i]);
  for (std::size_t i = 0; i < supports_.size(); ++i)
    if (!support_index_.emplace(supports_[i].id, i).second)
      throw input_error("duplicate support id: " + supports_[i].id);
  validate();
}

std::size_t CurveSystem::curve_index(const std::string& id) const {
  auto it = curve_index_.find(id);
  if (it == curve_index_.end()) throw input_error("unknown curve id: " + id);
  return it->second;
}

const Support& CurveSystem::support(const std::string& id) const {
  auto it = support_index_.find(id);
  if (it == support_index_.end()) throw input_error("unknown support id: " + id);
  return supports_[it->second];
}

std::int64_t CurveSystem::inter(const std::string& c1, const std::string& c2) const {
  return imatrix_[curve_index(c1)][curve_index(c2)];
}

SupportRelation CurveSystem::relation(const std::string& curve,
                                      const std::string& support_id) const {
  curve_index(curve);  // existence check
  const Support& s = support(support_id);
  auto has = [&curve](const std::vector<std::string>& v) {
    return std::find(v.begin(), v.end(), curve) != v.end();
  };
  if (has(s.inside)) return SupportRelation::inside;
  if (has(s.boundary)) return SupportRelation::boundary;
  if (has(s.disjoint)) return SupportRelation::disjoint;
  return SupportRelation::unknown;
}

bool CurveSystem::supports_declared_disjoint(const std::string& s1,
                                             const std::string& s2) const {
  if (s1 == s2) return false;
  const Support& a = support(s1);
  const Support& b = support(s2);
  for (const auto& c : a.inside) {
    const auto rel = relation(c, s2);
    if (rel != SupportRelation::disjoint && rel != SupportRelation::boundary)
      return false;
  }
  for (const auto& c : b.inside) {
    const auto rel = relation(c, s1);
    if (rel != SupportRelation::disjoint && rel != SupportRelation::boundary)
      return false;
  }
  return true;
}

void CurveSystem::validate() const {
  if (cx() < 1) throw input_error("curve system needs cx(S) = 3g-3+n >= 1");
  if (euler_characteristic() >= 0) throw input_error("curve system needs chi(S) < 0");
  const std::size_t n = curves_.size();
  if (imatrix_.size() != n) throw input_error("intersection matrix size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (imatrix_[i].size() != n) throw input_error("intersection matrix not square");
    if (imatrix_[i][i] != 0) throw input_error("intersection matrix diagonal must be 0");
    for (std::size_t j = 0; j < n; ++j) {
      if (imatrix_[i][j] < 0) throw input_error("negative intersection number");
      if (imatrix_[i][j] != imatrix_[j][i])
        throw input_error("intersection matrix not symmetric");
    }
  }

  for (const Support& s : supports_) {
    if (s.cx < 1) throw input_error("support " + s.id + " needs cx >= 1");
    if (s.cx > cx()) throw input_error("support " + s.id + " exceeds surface complexity");
    std::set<std::string> seen;
    auto check_list = [&](const std::vector<std::string>& v, const char* what) {
      for (const auto& c : v) {
        if (!has_curve(c))
          throw input_error("support " + s.id + " references unknown curve " + c);
        if (!seen.insert(c).second)
          throw input_error("curve " + c + " declared twice for support " + s.id +
                            " (" + what + ")");
      }
    };
    check_list(s.inside, "inside");
    check_list(s.boundary, "boundary");
    check_list(s.disjoint, "disjoint");

    // A proper support spends its complexity plus its boundary classes.
    if (!s.boundary.empty() &&
        s.cx + static_cast<int>(s.boundary.size()) > cx())
      throw input_error("support " + s.id + " overfull: cx + boundary classes > cx(S)");

    // Boundary curves have zero intersection with everything inside, with
    // each other, and with curves declared disjoint from the support; a
    // curve crossing the boundary would have to enter the support.
    for (const auto& bc : s.boundary) {
      for (const auto& in : s.inside)
        if (inter(bc, in) != 0)
          throw input_error("boundary curve " + bc + " meets inside curve " + in +
                            " of support " + s.id);
      for (const auto& bc2 : s.boundary)
        if (inter(bc, bc2) != 0)
          throw input_error("boundary curves " + bc + ", " + bc2 + " of support " +
                            s.id + " intersect");
      for (const auto& dc : s.disjoint)
        if (inter(bc, dc) != 0)
          throw input_error("curve " + dc + " declared disjoint from " + s.id +
                            " but meets its boundary curve " + bc);
    }
    // Disjoint-from-support curves cannot meet anything inside it.
    for (const auto& dc : s.disjoint)
      for (const auto& in : s.inside)
        if (inter(dc, in) != 0)
          throw input_error("curve " + dc + " declared disjoint from " + s.id +
                            " but meets inside curve " + in);
  }

  // Curves inside two declared-disjoint supports cannot intersect.
  for (std::size_t i = 0; i < supports_.size(); ++i)
    for (std::size_t j = i + 1; j < supports_.size(); ++j) {
      if (!supports_declared_disjoint(supports_[i].id, supports_[j].id)) continue;
      for (const auto& c1 : supports_[i].inside)
        for (const auto& c2 : supports_[j].inside)
          if (c1 != c2 && inter(c1, c2) != 0)
            throw input_error("inside curves " + c1 + ", " + c2 +
                              " of disjoint supports intersect");
    }
}

}  // namespace teichlab::foliation
