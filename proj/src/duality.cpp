#include "tangle/duality.hpp"

#include <algorithm>
#include <set>

#include "tangle/error.hpp"
#include "tangle/flip_graph.hpp"

namespace tangle {

namespace {

std::vector<Diagonal> TreeDiagonals(const PlaneTree& tree) {
  std::vector<Diagonal> out;
  for (int id = 1; id < tree.node_count(); ++id) {
    if (tree.is_leaf(id)) continue;
    out.emplace_back(tree.node(id).lo + 1, tree.node(id).hi + 2);
  }
  return out;
}

PlaneTree TreeFromDiagonals(int leaves, const Triangulation& t) {
  std::vector<std::pair<int, int>> intervals;
  for (const Diagonal& d : t.diagonals()) intervals.emplace_back(d.a - 1, d.b - 2);
  return PlaneTree::FromIntervals(leaves, intervals);
}

Triangulation Reflect(const Triangulation& t) {
  const int n = t.n();
  auto image = [n](int v) { return v == 1 ? 1 : n + 2 - v; };
  std::vector<Diagonal> ds;
  for (const Diagonal& d : t.diagonals()) ds.emplace_back(image(d.a), image(d.b));
  return Triangulation(n, std::move(ds));
}

std::set<std::pair<int, int>> Intervals(const PlaneTree& t) {
  std::set<std::pair<int, int>> out;
  for (int id = 1; id < t.node_count(); ++id) {
    if (!t.is_leaf(id)) out.emplace(t.node(id).lo, t.node(id).hi);
  }
  return out;
}

// Node of `after` whose interval is absent from `before`.
int NewNode(const PlaneTree& before, const PlaneTree& after) {
  const auto old = Intervals(before);
  for (int id = 1; id < after.node_count(); ++id) {
    if (!after.is_leaf(id) && !old.count({after.node(id).lo, after.node(id).hi})) return id;
  }
  throw Error(ErrorCode::kInvalidNode, "rotation did not change the tree");
}

}  // namespace

DisjointPair LayoutToPair(const Layout& layout, DualOrientation orientation) {
  if (layout.right.leaf_count() != layout.left.leaf_count()) {
    throw Error(ErrorCode::kSizeMismatch, "layout trees have different leaf counts");
  }
  const int n = layout.size();
  if (n < 2) throw Error(ErrorCode::kOutOfRange, "the dual needs at least two leaves");
  if (!ProperSubtanglegrams(layout).empty()) {
    throw Error(ErrorCode::kNotIrreducible, layout.Encode() + " has a proper subtanglegram");
  }
  DisjointPair pair(Triangulation(n + 1, TreeDiagonals(layout.left)),
                    Triangulation(n + 1, TreeDiagonals(layout.right)));
  return orientation == DualOrientation::kMirrored ? ReflectPair(pair) : pair;
}

DisjointPair LayoutToPair(const Presentation& p, DualOrientation orientation) {
  if (Crossings(p) != 0) {
    throw Error(ErrorCode::kNotPlanarLayout, p.Encode() + " has crossings");
  }
  return LayoutToPair(Layout{p.left, p.right}, orientation);
}

Layout PairToLayout(const DisjointPair& pair, DualOrientation orientation) {
  if (orientation == DualOrientation::kMirrored) return PairToLayout(ReflectPair(pair));
  const int leaves = pair.first.n() - 1;
  return Layout{TreeFromDiagonals(leaves, pair.first), TreeFromDiagonals(leaves, pair.second)};
}

DisjointPair ReflectPair(const DisjointPair& pair) {
  return DisjointPair(Reflect(pair.first), Reflect(pair.second));
}

RotationResult Rotate(const Layout& layout, RotationMove move) {
  if (move.side != 1 && move.side != 2) {
    throw Error(ErrorCode::kInvalidNode, "side must be 1 or 2");
  }
  const bool left_side = move.side == 1;
  const PlaneTree& tree = left_side ? layout.left : layout.right;
  const PlaneTree rotated = tree.RotateAt(move.node);
  Layout out = left_side ? Layout{rotated, layout.right} : Layout{layout.left, rotated};
  const auto spans = ProperSubtanglegrams(out);
  if (spans.empty()) {
    return {std::move(out), FlipKind::kSingle, {move.side, NewNode(tree, rotated)}};
  }
  if (spans.size() != 1) {
    throw Error(ErrorCode::kNotIrreducible, "rotation created several proper subtanglegrams");
  }
  const int other_side = left_side ? 2 : 1;
  const PlaneTree other = left_side ? out.right : out.left;
  const int node = left_side ? spans[0].right_node : spans[0].left_node;
  const PlaneTree other_rotated = other.RotateAt(node);
  (left_side ? out.right : out.left) = other_rotated;
  if (!ProperSubtanglegrams(out).empty()) {
    throw Error(ErrorCode::kNotIrreducible, "second rotation left a proper subtanglegram");
  }
  return {std::move(out), FlipKind::kDouble, {other_side, NewNode(other, other_rotated)}};
}

std::vector<RotationMove> RotationMoves(const Layout& layout) {
  std::vector<RotationMove> out;
  for (int side = 1; side <= 2; ++side) {
    const PlaneTree& t = side == 1 ? layout.left : layout.right;
    for (int id = 1; id < t.node_count(); ++id) {
      if (!t.is_leaf(id)) out.push_back({side, id});
    }
  }
  return out;
}

std::vector<Layout> EnumerateIrreducibleLayouts(int n, int cap) {
  if (n > cap) {
    throw Error(ErrorCode::kCapExceeded, "layout enumeration of size " + std::to_string(n) +
                                             " exceeds the cap " + std::to_string(cap));
  }
  const auto trees = PlaneTree::EnumerateAll(n);
  std::vector<Layout> out;
  for (const auto& l : trees) {
    for (const auto& r : trees) {
      Layout layout{l, r};
      if (ProperSubtanglegrams(layout).empty()) out.push_back(std::move(layout));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

RotationGraphCheck RotationGraphIsomorphic(int n, int cap) {
  RotationGraphCheck check;
  const auto layouts = EnumerateIrreducibleLayouts(n, cap);
  const FlipGraph graph = FlipGraph::Build(n + 1, std::max(cap + 1, kDefaultFlipGraphCap));
  check.layouts = static_cast<int>(layouts.size());
  check.pairs = graph.size();

  std::vector<int> image(layouts.size());
  std::vector<bool> hit(graph.size(), false);
  bool injective = true;
  for (std::size_t i = 0; i < layouts.size(); ++i) {
    image[i] = graph.IndexOf(LayoutToPair(layouts[i]));
    if (image[i] < 0 || hit[image[i]]) injective = false;
    if (image[i] >= 0) hit[image[i]] = true;
  }
  check.bijective = injective && check.layouts == check.pairs;
  if (!check.bijective) return check;

  std::vector<int> index_of_image(graph.size());
  for (std::size_t i = 0; i < layouts.size(); ++i) index_of_image[image[i]] = static_cast<int>(i);
  check.edges_preserved = true;
  for (std::size_t i = 0; i < layouts.size(); ++i) {
    std::vector<int> mine;
    for (const auto& move : RotationMoves(layouts[i])) {
      const RotationResult r = Rotate(layouts[i], move);
      mine.push_back(graph.IndexOf(LayoutToPair(r.layout)));
      ++check.edges;
    }
    std::vector<int> theirs = graph.neighbors(image[i]);
    std::sort(mine.begin(), mine.end());
    std::sort(theirs.begin(), theirs.end());
    if (mine != theirs) check.edges_preserved = false;
  }
  check.edges /= 2;
  return check;
}

}  // namespace tangle
