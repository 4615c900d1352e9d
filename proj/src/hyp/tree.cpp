#include "teichlab/hyp/tree.hpp"

#include <algorithm>
#include <numeric>

namespace teichlab::hyp {

RootedTree::RootedTree(int branching, int depth_cap)
    : b_(branching), depth_cap_(depth_cap) {
  if (b_ < 2) throw input_error("tree branching factor must be >= 2");
  if (depth_cap_ < 1) throw input_error("tree depth cap must be >= 1");
  layer_offset_.resize(depth_cap_ + 2);
  std::int64_t layer = 1;
  layer_offset_[0] = 0;
  for (int d = 0; d <= depth_cap_; ++d) {
    layer_offset_[d + 1] = layer_offset_[d] + layer;
    layer *= b_;
    if (layer_offset_[d + 1] > (std::int64_t{1} << 30))
      throw input_error("tree too large");
  }
  count_ = layer_offset_[depth_cap_ + 1];
}

int RootedTree::depth(Point u) const {
  if (u < 0 || u >= count_) throw input_error("tree node out of range");
  int d = 0;
  while (layer_offset_[d + 1] <= u) ++d;
  return d;
}

RootedTree::Point RootedTree::parent(Point u) const {
  const int d = depth(u);
  if (d == 0) return 0;
  const std::int64_t k = u - layer_offset_[d];
  return static_cast<Point>(layer_offset_[d - 1] + k / b_);
}

RootedTree::Point RootedTree::child(Point u, int letter) const {
  const int d = depth(u);
  if (d >= depth_cap_) throw input_error("node already at depth cap");
  if (letter < 0 || letter >= b_) throw input_error("letter out of alphabet");
  const std::int64_t k = u - layer_offset_[d];
  return static_cast<Point>(layer_offset_[d + 1] + k * b_ + letter);
}

RootedTree::Point RootedTree::ancestor_at(Point u, int target_depth) const {
  int d = depth(u);
  if (target_depth > d) throw input_error("ancestor depth exceeds node depth");
  while (d > target_depth) {
    const std::int64_t k = u - layer_offset_[d];
    u = static_cast<Point>(layer_offset_[d - 1] + k / b_);
    --d;
  }
  return u;
}

RootedTree::Point RootedTree::lca(Point u, Point v) const {
  int du = depth(u), dv = depth(v);
  while (du > dv) {
    u = ancestor_at(u, dv);
    du = dv;
  }
  while (dv > du) {
    v = ancestor_at(v, du);
    dv = du;
  }
  while (u != v) {
    u = parent(u);
    v = parent(v);
  }
  return u;
}

RootedTree::Point RootedTree::node_of(const std::string& path) const {
  Point u = 0;
  for (char ch : path) {
    const int letter = ch - '0';
    u = child(u, letter);
  }
  return u;
}

std::string RootedTree::path_of(Point u) const {
  std::string out;
  int d = depth(u);
  out.resize(d);
  while (d > 0) {
    const std::int64_t k = u - layer_offset_[d];
    out[d - 1] = static_cast<char>('0' + static_cast<int>(k % b_));
    u = parent(u);
    --d;
  }
  return out;
}

std::vector<RootedTree::Point> RootedTree::ray(Point tip, std::size_t horizon) const {
  const int dt = depth(tip);
  std::vector<Point> out(horizon);
  for (std::size_t k = 0; k < horizon; ++k)
    out[k] = ancestor_at(tip, std::min<int>(static_cast<int>(k), dt));
  return out;
}

TreeMap tree_automorphism(const RootedTree& tree, Rng& rng) {
  TreeMap map;
  map.tree = &tree;
  map.image.resize(tree.size());
  map.image[0] = 0;
  const int b = tree.branching();
  std::vector<int> perm(b);
  for (std::size_t u = 0; u < tree.size(); ++u) {
    const auto node = static_cast<RootedTree::Point>(u);
    if (tree.depth(node) >= tree.depth_cap()) continue;
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = b - 1; i > 0; --i)
      std::swap(perm[i], perm[rng.uniform_int(0, i)]);
    for (int c = 0; c < b; ++c)
      map.image[tree.child(node, c)] = tree.child(map.image[node], perm[c]);
  }
  return map;
}

TreeMap tree_branch_collapse(const RootedTree& tree, RootedTree::Point at,
                             int from_letter, int onto_letter) {
  if (from_letter == onto_letter)
    throw input_error("collapse needs two distinct branches");
  if (tree.depth(at) >= tree.depth_cap())
    throw input_error("collapse node has no children");
  TreeMap map;
  map.tree = &tree;
  map.image.resize(tree.size());
  for (std::size_t u = 0; u < tree.size(); ++u)
    map.image[u] = static_cast<RootedTree::Point>(u);
  // Fold the `from` subtree onto the `onto` subtree, preserving relative paths.
  const auto from_root = tree.child(at, from_letter);
  const auto onto_root = tree.child(at, onto_letter);
  std::vector<std::pair<RootedTree::Point, RootedTree::Point>> stack{{from_root, onto_root}};
  while (!stack.empty()) {
    auto [src, dst] = stack.back();
    stack.pop_back();
    map.image[src] = dst;
    if (tree.depth(src) < tree.depth_cap())
      for (int c = 0; c < tree.branching(); ++c)
        stack.emplace_back(tree.child(src, c), tree.child(dst, c));
  }
  return map;
}

}  // namespace teichlab::hyp
