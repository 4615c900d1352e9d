#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "teichlab/util/error.hpp"
#include "teichlab/util/rng.hpp"

namespace teichlab::hyp {

/// Rooted b-ary tree of bounded depth with the unit-edge path metric.
/// Nodes are addressed by level order: root 0, then depth layers in order;
/// d(u,v) = |u| + |v| - 2 |lcp(u,v)| and <u|v>_root = |lcp(u,v)|.
class RootedTree {
 public:
  using Point = std::int32_t;

  RootedTree(int branching, int depth_cap);

  int branching() const { return b_; }
  int depth_cap() const { return depth_cap_; }
  std::size_t size() const { return static_cast<std::size_t>(count_); }

  Point base() const { return 0; }
  int depth(Point u) const;
  Point parent(Point u) const;
  Point child(Point u, int letter) const;
  Point ancestor_at(Point u, int target_depth) const;
  Point lca(Point u, Point v) const;

  double distance(Point u, Point v) const {
    return static_cast<double>(depth(u) + depth(v) - 2 * depth(lca(u, v)));
  }

  Point node_of(const std::string& path) const;
  std::string path_of(Point u) const;

  /// Ray samples toward the boundary prefix `tip`: the k-th sample is the
  /// ancestor of tip at depth min(k, depth(tip)).
  std::vector<Point> ray(Point tip, std::size_t horizon) const;

 private:
  int b_ = 2;
  int depth_cap_ = 0;
  std::int64_t count_ = 0;
  std::vector<std::int64_t> layer_offset_;  // first node id at each depth
};

/// Total map on tree nodes given by an image table.
struct TreeMap {
  const RootedTree* tree = nullptr;
  std::vector<RootedTree::Point> image;

  RootedTree::Point operator()(RootedTree::Point u) const { return image[u]; }
};

/// Random label automorphism: at every internal node the child letters are
/// permuted independently. Always a prefix-injective isometry.
TreeMap tree_automorphism(const RootedTree& tree, Rng& rng);

/// Identity except that the subtree under child(at, from_letter) is folded
/// onto the sibling subtree under child(at, onto_letter). Collapses two
/// distinct branches, so the boundary extension is not injective.
TreeMap tree_branch_collapse(const RootedTree& tree, RootedTree::Point at,
                             int from_letter, int onto_letter);

}  // namespace teichlab::hyp
