#include "teichlab/foliation/family.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace teichlab::foliation {

namespace {

/// Curves usable as essential components alongside the chosen supports.
std::vector<std::string> essential_candidates(const CurveSystem& sys,
                                              const std::vector<std::string>& supports) {
  std::vector<std::string> out;
  for (const auto& c : sys.curves()) {
    bool ok = true;
    for (const auto& s : supports) {
      const auto rel = sys.relation(c, s);
      if (rel != SupportRelation::disjoint) ok = false;
    }
    if (ok) out.push_back(c);
  }
  return out;
}

}  // namespace

std::vector<SymbolicFoliation> generate_family(const CurveSystem& system,
                                               const GenerationLimits& limits) {
  const int max_ess = limits.max_essential < 0 ? system.cx() : limits.max_essential;
  std::vector<SymbolicFoliation> out;

  // Pairwise-disjoint support subsets up to the arational limit.
  std::vector<std::vector<std::string>> support_sets{{}};
  std::function<void(std::size_t, std::vector<std::string>&)> rec_sup =
      [&](std::size_t from, std::vector<std::string>& acc) {
        for (std::size_t i = from; i < system.supports().size(); ++i) {
          const std::string& id = system.supports()[i].id;
          bool ok = true;
          for (const auto& prev : acc)
            if (!system.supports_declared_disjoint(prev, id)) ok = false;
          if (!ok) continue;
          acc.push_back(id);
          support_sets.push_back(acc);
          if (static_cast<int>(acc.size()) < limits.max_arational) rec_sup(i + 1, acc);
          acc.pop_back();
        }
      };
  std::vector<std::string> acc;
  rec_sup(0, acc);

  for (const auto& sups : support_sets) {
    int budget = system.cx();
    for (const auto& s : sups) budget -= system.support(s).cx;
    if (budget < 0) continue;
    const auto candidates = essential_candidates(system, sups);

    std::vector<std::vector<std::string>> curve_sets{{}};
    std::function<void(std::size_t, std::vector<std::string>&)> rec_cur =
        [&](std::size_t from, std::vector<std::string>& ess) {
          for (std::size_t i = from; i < candidates.size(); ++i) {
            bool ok = true;
            for (const auto& prev : ess)
              if (system.inter(prev, candidates[i]) != 0) ok = false;
            if (!ok) continue;
            ess.push_back(candidates[i]);
            curve_sets.push_back(ess);
            if (static_cast<int>(ess.size()) < std::min(max_ess, budget))
              rec_cur(i + 1, ess);
            ess.pop_back();
          }
        };
    std::vector<std::string> ess;
    rec_cur(0, ess);

    for (const auto& curves : curve_sets) {
      if (sups.empty() && curves.empty()) continue;
      if (static_cast<int>(curves.size()) > budget) continue;
      std::vector<Component> parts;
      for (const auto& s : sups) parts.push_back({ComponentKind::arational, s, 1.0});
      for (const auto& c : curves) parts.push_back({ComponentKind::essential, c, 1.0});
      out.emplace_back(system, std::move(parts));
    }
  }
  return out;
}

namespace {

struct FamilyGraph {
  std::vector<const SymbolicFoliation*> nodes;  // unique structure classes
  std::map<std::string, std::size_t> index;     // structure key -> node
  std::vector<std::vector<std::size_t>> succ;   // strict null-set descendants

  explicit FamilyGraph(const std::vector<SymbolicFoliation>& family) {
    for (const auto& g : family) {
      const auto key = g.structure_key();
      if (index.emplace(key, nodes.size()).second) nodes.push_back(&g);
    }
    succ.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (i == j) continue;
        if (nullset_compare(*nodes[i], *nodes[j]) == NullSetOrder::left_contains_right)
          succ[i].push_back(j);
      }
  }

  /// Longest chain (node count) from `from`, with a deterministic witness.
  std::pair<int, std::vector<std::size_t>> longest_from(std::size_t from) const {
    std::vector<int> best(nodes.size(), -1);
    std::vector<std::size_t> next(nodes.size(), SIZE_MAX);
    std::function<int(std::size_t)> dfs = [&](std::size_t u) {
      if (best[u] >= 0) return best[u];
      int b = 1;
      for (std::size_t v : succ[u]) {
        const int cand = 1 + dfs(v);
        if (cand > b || (cand == b && next[u] != SIZE_MAX && v < next[u])) {
          b = cand;
          next[u] = v;
        }
      }
      best[u] = b;
      return b;
    };
    const int h = dfs(from);
    std::vector<std::size_t> path{from};
    std::size_t u = from;
    while (next[u] != SIZE_MAX) {
      u = next[u];
      path.push_back(u);
    }
    return {h, path};
  }
};

}  // namespace

TowerResult tower_height(const SymbolicFoliation& g,
                         const std::vector<SymbolicFoliation>& family) {
  if (family.empty()) throw input_error("tower_height needs a nonempty family");
  std::vector<SymbolicFoliation> all = family;
  all.push_back(g);
  FamilyGraph graph(all);
  const auto [h, path] = graph.longest_from(graph.index.at(g.structure_key()));
  TowerResult out;
  out.height = h;
  for (std::size_t u : path) out.witness.push_back(graph.nodes[u]->structure_key());
  out.within_complexity_bound = h <= g.system().cx();
  return out;
}

FamilyLawReport check_family_laws(const std::vector<SymbolicFoliation>& family) {
  FamilyLawReport rep;
  if (family.empty()) throw input_error("empty family");
  const CurveSystem& sys = family.front().system();
  FamilyGraph graph(family);
  const std::size_t n = graph.nodes.size();

  std::vector<std::vector<NullSetOrder>> rel(n, std::vector<NullSetOrder>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rel[i][j] = i == j ? NullSetOrder::equal
                         : nullset_compare(*graph.nodes[i], *graph.nodes[j]);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // Antisymmetry and converse consistency.
      const bool lr = rel[i][j] == NullSetOrder::left_contains_right;
      const bool rl = rel[j][i] == NullSetOrder::right_contains_left;
      if (lr != rl) {
        rep.partial_order = false;
        rep.violations.push_back("comparison not converse-consistent: " +
                                 graph.nodes[i]->structure_key() + " vs " +
                                 graph.nodes[j]->structure_key());
      }
      if (i != j && rel[i][j] == NullSetOrder::equal) {
        rep.partial_order = false;
        rep.violations.push_back("distinct structure classes compare equal");
      }
      // Transitivity.
      if (lr)
        for (std::size_t k = 0; k < n; ++k)
          if (rel[j][k] == NullSetOrder::left_contains_right &&
              rel[i][k] != NullSetOrder::left_contains_right) {
            rep.partial_order = false;
            rep.violations.push_back("comparison not transitive");
          }
    }

  // xi0 strictly increases (tower order) along every strict inclusion; on
  // planar signatures the support weight sum(cx + 1) jumps by >= 2.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (rel[i][j] != NullSetOrder::left_contains_right) continue;
      const auto xi = xi0(*graph.nodes[i]);
      const auto xj = xi0(*graph.nodes[j]);
      if (!xi0_tower_less(xi, xj)) {
        rep.xi0_strictly_increasing = false;
        rep.violations.push_back("xi0 not increasing: " +
                                 graph.nodes[i]->structure_key() + " -> " +
                                 graph.nodes[j]->structure_key());
      }
      if (sys.planar() && -xj.first != -xi.first) {
        std::int64_t chi_i = 0, chi_j = 0;
        for (const auto& s : graph.nodes[i]->arational_supports())
          chi_i += sys.support(s).cx + 1;
        for (const auto& s : graph.nodes[j]->arational_supports())
          chi_j += sys.support(s).cx + 1;
        if (chi_j - chi_i < 2) {
          rep.planar_first_coordinate_jump = false;
          rep.violations.push_back("planar support weight rose by less than 2");
        }
      }
    }

  for (std::size_t i = 0; i < n; ++i) {
    const auto [h, path] = graph.longest_from(i);
    if (h > sys.cx()) {
      rep.heights_bounded = false;
      rep.violations.push_back("height above cx(S) at " +
                               graph.nodes[i]->structure_key());
    }
    if (h > rep.max_height) {
      rep.max_height = h;
      rep.max_height_starters.clear();
    }
    if (h == rep.max_height)
      rep.max_height_starters.push_back(graph.nodes[i]->structure_key());
  }
  return rep;
}

}  // namespace teichlab::foliation
