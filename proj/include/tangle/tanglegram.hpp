#pragma once

// Tanglegrams: pairs of rooted binary trees with a perfect matching between
// their leaves, considered up to isomorphism (children unordered in each
// tree, the two trees not exchangeable).
//
// Text form `left|right|perm`: two plane trees and, for each left leaf i
// (top to bottom, 1-based), the position perm[i] of its right partner.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tangle/plane_tree.hpp"

namespace tangle {

inline constexpr int kDefaultPlanarityCap = 12;
inline constexpr int kDefaultTanglegramEnumerationCap = 6;

// A concrete drawing: two plane trees and a matching (0-based positions).
struct Presentation {
  PlaneTree left;
  PlaneTree right;
  std::vector<int> perm;  // perm[i] = right position matched to left leaf i

  int size() const { return left.leaf_count(); }
  std::string Encode() const;
  static Presentation Parse(std::string_view text);
};

// A planar layout: left leaf i is matched to right leaf i.
struct Layout {
  PlaneTree left;
  PlaneTree right;

  int size() const { return left.leaf_count(); }
  Presentation AsPresentation() const;
  Layout Mirror() const { return {left.Mirror(), right.Mirror()}; }
  // `left|right`
  std::string Encode() const;
  static Layout Parse(std::string_view text);

  bool operator==(const Layout& o) const { return Encode() == o.Encode(); }
  bool operator<(const Layout& o) const { return Encode() < o.Encode(); }
};

class Tanglegram {
 public:
  Tanglegram();  // the size-1 tanglegram

  // Canonical representative of the isomorphism class of `p`: the
  // presentation minimizing (left code, right code, perm) lexicographically,
  // with codes compared as strings and perm as an integer sequence.
  static Tanglegram Canonical(const Presentation& p);
  // Accepts any presentation text and canonicalizes it.
  static Tanglegram Parse(std::string_view text) { return Canonical(Presentation::Parse(text)); }

  const std::string& code() const { return code_; }
  int size() const { return size_; }
  Presentation presentation() const { return Presentation::Parse(code_); }

  bool operator==(const Tanglegram& o) const { return code_ == o.code_; }
  bool operator<(const Tanglegram& o) const { return code_ < o.code_; }

 private:
  std::string code_;
  int size_ = 1;
};

// Number of crossing matching edges (inversions of the matching).
long long Crossings(const Presentation& p);
// Crossings of a layout after exchanging children at flagged nodes.
long long Crossings(const Layout& layout, const std::vector<bool>& left_swaps,
                    const std::vector<bool>& right_swaps);

// Every distinct zero-crossing layout of `p`'s tanglegram. Size <= cap.
std::vector<Layout> PlanarLayouts(const Presentation& p, int cap = kDefaultPlanarityCap);
// A zero-crossing layout if one exists. Size <= cap.
std::optional<Layout> IsPlanar(const Tanglegram& t, int cap = kDefaultPlanarityCap);

// A proper subtanglegram: non-root internal nodes whose descendant leaves
// are matched exactly to each other.
struct SubtanglegramSpan {
  int left_node = -1;
  int right_node = -1;
  int lo = 0;  // left leaf interval
  int hi = 0;
};
// Sorted by interval start, then by width.
std::vector<SubtanglegramSpan> ProperSubtanglegrams(const Layout& layout);
std::vector<SubtanglegramSpan> ProperSubtanglegrams(const Presentation& p);

struct IrrDecomposition {
  Tanglegram core;
  // Contracted maximal proper subtanglegrams (and size-1 blocks for leaves
  // outside them) in top-to-bottom order of `core_layout`.
  std::vector<Tanglegram> blocks;
  // Planar inputs only: the contracted layout the blocks are ordered by.
  std::optional<Layout> core_layout;
};
IrrDecomposition Irr(const Tanglegram& t, int cap = kDefaultPlanarityCap);

// Matched leaves of `core` replaced top to bottom by the blocks.
Tanglegram Substitute(const Layout& core, const std::vector<Tanglegram>& blocks);
// Presentation-level composition: block i replaces left leaf i and its
// right partner.
Presentation Compose(const Presentation& core, const std::vector<Presentation>& blocks);

// Every tanglegram of size n (canonical codes, sorted).
std::vector<Tanglegram> EnumerateTanglegrams(int n, bool planar_only,
                                             int cap = kDefaultTanglegramEnumerationCap);

}  // namespace tangle
