#pragma once

// Plane duality between irreducible planar tanglegram layouts of size n and
// ordered pairs of disjoint triangulations of the (n+1)-gon.
//
// A non-root internal node covering leaf positions i..j (1-based, top to
// bottom) corresponds to the diagonal (i, j+1), in both trees. The root
// would give the side (1, n+1) and is skipped.

#include <vector>

#include "tangle/polygon.hpp"
#include "tangle/tanglegram.hpp"

namespace tangle {

enum class DualOrientation {
  kTopToBottom,  // leaf i sits between polygon vertices i and i+1
  kMirrored,     // the same with the polygon reflected through vertex 1
};
inline constexpr DualOrientation kDefaultDualOrientation = DualOrientation::kTopToBottom;
inline constexpr int kDefaultRotationGraphCap = 8;

// Throws kNotIrreducible if the layout has a proper subtanglegram.
DisjointPair LayoutToPair(const Layout& layout,
                          DualOrientation orientation = kDefaultDualOrientation);
// Throws kNotPlanarLayout if the presentation has crossings.
DisjointPair LayoutToPair(const Presentation& p,
                          DualOrientation orientation = kDefaultDualOrientation);
Layout PairToLayout(const DisjointPair& pair,
                    DualOrientation orientation = kDefaultDualOrientation);

// Relabels v -> n+2-v for v >= 2 (vertex 1 fixed).
DisjointPair ReflectPair(const DisjointPair& pair);

struct RotationMove {
  int side = 1;  // 1 = left tree, 2 = right tree
  int node = 0;  // node id in that tree
};

struct RotationResult {
  Layout layout;
  FlipKind kind = FlipKind::kSingle;
  RotationMove inverse;
};

// Rotation at a non-root internal node of one tree; if a proper
// subtanglegram appears, the matching node of the other tree is rotated too.
RotationResult Rotate(const Layout& layout, RotationMove move);
// The 2(n-2) moves available at a layout of size n.
std::vector<RotationMove> RotationMoves(const Layout& layout);

// Every irreducible planar layout of size n, sorted.
std::vector<Layout> EnumerateIrreducibleLayouts(int n, int cap = kDefaultRotationGraphCap);

struct RotationGraphCheck {
  int layouts = 0;
  int pairs = 0;
  long long edges = 0;
  bool bijective = false;
  bool edges_preserved = false;
  bool ok() const { return bijective && edges_preserved; }
};
// Builds the rotation graph on size-n layouts and checks that LayoutToPair
// is a graph isomorphism onto the flip graph of the (n+1)-gon.
RotationGraphCheck RotationGraphIsomorphic(int n, int cap = kDefaultRotationGraphCap);

}  // namespace tangle
