#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tangle {

// A rooted plane binary tree. Nodes are stored in pre-order (root = 0);
// leaves are numbered 0..leaf_count()-1 top to bottom (in-order).
//
// Text form: a leaf is `o`, an internal node is `(` left right `)`.
class PlaneTree {
 public:
  struct Node {
    int left = -1;
    int right = -1;
    int parent = -1;
    int lo = 0;  // first leaf position below this node
    int hi = 0;  // last leaf position below this node
  };

  PlaneTree();  // single leaf

  static PlaneTree Leaf() { return PlaneTree(); }
  static PlaneTree Join(const PlaneTree& left, const PlaneTree& right);
  static PlaneTree Parse(std::string_view text);
  // Plane tree whose non-root internal nodes cover exactly the given leaf
  // intervals; root covers [0, leaves-1]. Intervals must be laminar and
  // complete (leaves - 2 of them).
  static PlaneTree FromIntervals(int leaves, const std::vector<std::pair<int, int>>& intervals);
  // All Catalan(leaves - 1) plane trees, in text-form order.
  static std::vector<PlaneTree> EnumerateAll(int leaves);

  std::string Encode() const;

  int leaf_count() const { return nodes_[0].hi + 1; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int root() const { return 0; }
  const Node& node(int id) const { return nodes_[id]; }
  bool is_leaf(int id) const { return nodes_[id].left < 0; }
  int size(int id) const { return nodes_[id].hi - nodes_[id].lo + 1; }
  // Node id of the leaf at a position.
  int leaf_node(int position) const { return leaf_nodes_[position]; }

  // Subtree rooted at `id` as its own tree.
  PlaneTree Subtree(int id) const;

  // Children exchanged at every node with swap[id] set. If `leaf_map` is
  // given it receives old leaf position -> new leaf position.
  PlaneTree WithSwaps(const std::vector<bool>& swap, std::vector<int>* leaf_map = nullptr) const;
  PlaneTree Mirror() const;

  // Leaf at position i replaced by blocks[i].
  PlaneTree ReplaceLeaves(const std::vector<PlaneTree>& blocks) const;

  // Subtree `id` contracted to a leaf, for every id in `ids` (disjoint).
  PlaneTree Contract(const std::vector<int>& ids) const;

  // Classical rotation at `id` against its parent: if `id` is a left child,
  // ((A, B), C) -> (A, (B, C)); if a right child, (A, (B, C)) -> ((A, B), C).
  PlaneTree RotateAt(int id) const;

  // Node whose leaf interval is [lo, hi], or -1.
  int FindInterval(int lo, int hi) const;

  bool operator==(const PlaneTree& o) const { return Encode() == o.Encode(); }

 private:
  void Rebuild(std::string_view text);

  std::vector<Node> nodes_;
  std::vector<int> leaf_nodes_;
};

}  // namespace tangle
