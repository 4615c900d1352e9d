#include "teichlab/foliation/foliation.hpp"

#include <algorithm>
#include <cmath>

namespace teichlab::foliation {

SymbolicFoliation::SymbolicFoliation(const CurveSystem& system,
                                     std::vector<Component> components)
    : system_(&system), components_(std::move(components)) {
  if (components_.empty()) throw input_error("foliation needs at least one component");
  std::set<std::string> supports, curves;
  for (const Component& c : components_) {
    if (!(c.weight > 0.0)) throw input_error("component weight must be positive");
    if (c.kind == ComponentKind::arational) {
      if (!system_->has_support(c.ref))
        throw input_error("unknown support in foliation: " + c.ref);
      if (!supports.insert(c.ref).second)
        throw input_error("duplicate arational support: " + c.ref);
    } else {
      if (!system_->has_curve(c.ref))
        throw input_error("unknown curve in foliation: " + c.ref);
      if (!curves.insert(c.ref).second)
        throw input_error("duplicate curve component: " + c.ref);
    }
  }

  // Arational supports must be pairwise declared disjoint.
  for (const auto& s1 : supports)
    for (const auto& s2 : supports)
      if (s1 < s2 && !system_->supports_declared_disjoint(s1, s2))
        throw input_error("arational supports not declared disjoint: " + s1 + ", " + s2);

  int essential_count = 0;
  for (const Component& c : components_) {
    if (c.kind == ComponentKind::essential) {
      ++essential_count;
      for (const auto& sup : supports) {
        const auto rel = system_->relation(c.ref, sup);
        if (rel == SupportRelation::unknown)
          throw input_error("insufficient declarations: curve " + c.ref +
                            " vs support " + sup);
        if (rel != SupportRelation::disjoint)
          throw input_error("essential curve " + c.ref +
                            " not disjoint from listed support " + sup);
      }
    } else if (c.kind == ComponentKind::peripheral) {
      bool is_boundary = false;
      for (const auto& sup : supports)
        if (system_->relation(c.ref, sup) == SupportRelation::boundary) is_boundary = true;
      if (!is_boundary)
        throw input_error("peripheral curve " + c.ref +
                          " is not a boundary curve of a listed support");
    }
  }

  // Curve components of a normal form are mutually disjoint.
  for (const Component& c1 : components_)
    for (const Component& c2 : components_) {
      if (c1.kind == ComponentKind::arational || c2.kind == ComponentKind::arational)
        continue;
      if (c1.ref < c2.ref && system_->inter(c1.ref, c2.ref) != 0)
        throw input_error("curve components intersect: " + c1.ref + ", " + c2.ref);
    }

  // No overfull foliation: disjoint supports plus essential curves cannot
  // exceed the surface complexity.
  int total = essential_count;
  for (const auto& s : supports) total += system_->support(s).cx;
  if (total > system_->cx())
    throw input_error("foliation exceeds surface complexity cx(S)");
}

std::set<std::string> SymbolicFoliation::arational_supports() const {
  std::set<std::string> out;
  for (const Component& c : components_)
    if (c.kind == ComponentKind::arational) out.insert(c.ref);
  return out;
}

std::set<std::string> SymbolicFoliation::essential_curves() const {
  std::set<std::string> out;
  for (const Component& c : components_)
    if (c.kind == ComponentKind::essential) out.insert(c.ref);
  return out;
}

std::set<std::string> SymbolicFoliation::peripheral_curves() const {
  std::set<std::string> out;
  for (const Component& c : components_)
    if (c.kind == ComponentKind::peripheral) out.insert(c.ref);
  return out;
}

std::string SymbolicFoliation::structure_key() const {
  std::string key = "A:";
  for (const auto& s : arational_supports()) key += s + ",";
  key += "|E:";
  for (const auto& c : essential_curves()) key += c + ",";
  return key;
}

SymbolicFoliation SymbolicFoliation::scaled(double factor) const {
  if (!(factor > 0.0)) throw input_error("scale factor must be positive");
  std::vector<Component> parts = components_;
  for (Component& c : parts) c.weight *= factor;
  return SymbolicFoliation(*system_, std::move(parts));
}

SymbolicFoliation truncate(const SymbolicFoliation& g) {
  std::vector<Component> kept;
  for (const Component& c : g.components())
    if (c.kind != ComponentKind::peripheral) kept.push_back(c);
  if (kept.empty())
    throw input_error("truncation removed every component (purely peripheral foliation)");
  return SymbolicFoliation(g.system(), std::move(kept));
}

namespace {

void require_same_system(const SymbolicFoliation& g, const SymbolicFoliation& h) {
  if (&g.system() != &h.system())
    throw input_error("foliations live over different curve systems");
}

/// Every component of trunc(G) is absorbed by trunc(H): arational supports
/// persist, essential curves persist or become boundary curves of an
/// arational support of H.
bool absorbed(const SymbolicFoliation& g, const SymbolicFoliation& h) {
  const auto gs = g.arational_supports();
  const auto hs = h.arational_supports();
  for (const auto& s : gs)
    if (!hs.count(s)) return false;
  const auto he = h.essential_curves();
  for (const auto& c : g.essential_curves()) {
    if (he.count(c)) continue;
    bool as_boundary = false;
    for (const auto& s : hs)
      if (g.system().relation(c, s) == SupportRelation::boundary) as_boundary = true;
    if (!as_boundary) return false;
  }
  return true;
}

bool subset(const std::set<std::string>& a, const std::set<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

bool top_equiv(const SymbolicFoliation& g, const SymbolicFoliation& h) {
  require_same_system(g, h);
  return g.structure_key() == h.structure_key();
}

std::set<std::string> null_curves(const SymbolicFoliation& g) {
  const CurveSystem& sys = g.system();
  std::set<std::string> out;
  for (const auto& c : sys.curves()) {
    bool zero = true;
    for (const Component& comp : g.components()) {
      if (comp.kind == ComponentKind::arational) {
        const auto rel = sys.relation(c, comp.ref);
        if (rel == SupportRelation::unknown)
          throw input_error("insufficient declarations: curve " + c + " vs support " +
                            comp.ref);
        if (rel == SupportRelation::inside) zero = false;
      } else {
        if (sys.inter(c, comp.ref) != 0) zero = false;
      }
      if (!zero) break;
    }
    if (zero) out.insert(c);
  }
  return out;
}

NullSetOrder nullset_compare(const SymbolicFoliation& g, const SymbolicFoliation& h) {
  require_same_system(g, h);
  NullSetOrder order = NullSetOrder::incomparable;
  if (top_equiv(g, h)) {
    order = NullSetOrder::equal;
  } else if (absorbed(g, h)) {
    order = NullSetOrder::left_contains_right;
  } else if (absorbed(h, g)) {
    order = NullSetOrder::right_contains_left;
  }

  // Cross-check against declared-curve null sets: a structural verdict must
  // be reflected by containment of the curve-level null sets.
  const auto ng = null_curves(g);
  const auto nh = null_curves(h);
  if (order == NullSetOrder::equal && ng != nh)
    throw input_error("declaration inconsistency: equal structures with different "
                      "curve null sets");
  if (order == NullSetOrder::left_contains_right && !subset(nh, ng))
    throw input_error("declaration inconsistency: structural containment not "
                      "reflected by curve null sets");
  if (order == NullSetOrder::right_contains_left && !subset(ng, nh))
    throw input_error("declaration inconsistency: structural containment not "
                      "reflected by curve null sets");
  return order;
}

std::pair<std::int64_t, std::int64_t> xi0(const SymbolicFoliation& g) {
  std::int64_t cx_sum = 0;
  for (const auto& s : g.arational_supports())
    cx_sum += g.system().support(s).cx;
  return {-cx_sum, static_cast<std::int64_t>(g.essential_curves().size())};
}

VisExperimentReport vis_experiment(const CurveSystem& system, const std::string& alpha,
                                   const std::string& beta, const std::string& gamma,
                                   const std::map<std::string, double>& base_ext_lengths) {
  if (alpha == beta || alpha == gamma || beta == gamma)
    throw input_error("vis_experiment needs three distinct curves");
  if (system.inter(alpha, beta) != 0 || system.inter(alpha, gamma) != 0 ||
      system.inter(beta, gamma) == 0)
    throw input_error("vis_experiment needs i(alpha,beta)=i(alpha,gamma)=0 and "
                      "i(beta,gamma)>0");
  auto ext = [&base_ext_lengths](const std::string& c) {
    auto it = base_ext_lengths.find(c);
    if (it == base_ext_lengths.end() || !(it->second > 0.0))
      throw input_error("missing or nonpositive base extremal length for " + c);
    return it->second;
  };
  auto pairing = [&](const std::string& c1, const std::string& c2) {
    return static_cast<double>(system.inter(c1, c2)) / std::sqrt(ext(c1) * ext(c2));
  };
  VisExperimentReport rep;
  rep.pair_ab = pairing(alpha, beta);
  rep.pair_ac = pairing(alpha, gamma);
  rep.pair_bc = pairing(beta, gamma);
  rep.pattern = rep.pair_ab == 0.0 && rep.pair_ac == 0.0 && rep.pair_bc > 0.0;
  return rep;
}

VanishingReport vanishing_report(const SymbolicFoliation& g) {
  const SymbolicFoliation core = truncate(g);
  const CurveSystem& sys = g.system();
  VanishingReport rep;
  const auto cores = core.essential_curves();
  const auto nulls = null_curves(core);
  for (const auto& s : core.arational_supports()) rep.arational_supports.push_back(s);
  for (const auto& c : sys.curves()) {
    if (cores.count(c))
      rep.annulus_cores.push_back(c);
    else if (nulls.count(c))
      rep.vanishing.push_back(c);
    else
      rep.crossing.push_back(c);
  }
  return rep;
}

}  // namespace teichlab::foliation
