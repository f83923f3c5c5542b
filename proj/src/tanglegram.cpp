#include "tangle/tanglegram.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <set>

#include "tangle/error.hpp"

namespace tangle {

namespace {

void CheckPerm(const std::vector<int>& perm, int size) {
  if (static_cast<int>(perm.size()) != size) {
    throw Error(ErrorCode::kSizeMismatch, "matching has " + std::to_string(perm.size()) +
                                              " entries for " + std::to_string(size) + " leaves");
  }
  std::vector<char> seen(size, 0);
  for (int p : perm) {
    if (p < 0 || p >= size || seen[p]) throw Error(ErrorCode::kParse, "matching is not a bijection");
    seen[p] = 1;
  }
}

// Shape codes of every subtree with children ordered so that the smaller
// code comes first. Codes are prefix-free, so this minimizes the parent code.
struct CanonicalShape {
  std::vector<std::string> code;
  std::vector<int> first, second;
  std::vector<bool> symmetric;

  explicit CanonicalShape(const PlaneTree& t)
      : code(t.node_count()), first(t.node_count(), -1), second(t.node_count(), -1),
        symmetric(t.node_count(), false) {
    // Pre-order ids: children always have larger ids than parents.
    for (int id = t.node_count() - 1; id >= 0; --id) {
      if (t.is_leaf(id)) {
        code[id] = "o";
        continue;
      }
      int a = t.node(id).left, b = t.node(id).right;
      if (code[b] < code[a]) std::swap(a, b);
      first[id] = a;
      second[id] = b;
      symmetric[id] = code[a] == code[b];
      code[id] = "(" + code[a] + code[b] + ")";
    }
  }
};

// Lexicographically least matching over all left and right orderings that
// realize the canonical shape codes. Children of symmetric nodes may be
// exchanged freely; the search keeps every partial choice achieving the
// least prefix, merged by the part of the state that still affects the
// remaining entries.
std::vector<int> MinimalMatching(const PlaneTree& left, const PlaneTree& right,
                                 const std::vector<int>& perm, const CanonicalShape& ls,
                                 const CanonicalShape& rs) {
  const int n = left.leaf_count();
  std::vector<int> partner(left.node_count(), -1);
  for (int i = 0; i < n; ++i) partner[left.leaf_node(i)] = right.leaf_node(perm[i]);

  // Root-to-leaf path of every right leaf: (ancestor, child on the path).
  std::vector<std::vector<std::pair<int, int>>> path(right.node_count());
  for (int i = 0; i < n; ++i) {
    const int leaf = right.leaf_node(i);
    auto& p = path[leaf];
    for (int c = leaf; right.node(c).parent >= 0; c = right.node(c).parent) {
      p.emplace_back(right.node(c).parent, c);
    }
    std::reverse(p.begin(), p.end());
  }

  struct State {
    std::vector<int> stack;
    std::vector<signed char> orient;
    std::vector<int> done;
  };
  State init;
  init.stack = {left.root()};
  init.orient.assign(right.node_count(), 0);
  for (int w = 0; w < right.node_count(); ++w) {
    if (rs.symmetric[w]) init.orient[w] = -1;
  }
  init.done.assign(right.node_count(), 0);

  struct Candidate {
    int leaf;
    std::vector<int> pushes;
  };
  std::vector<State> frontier{std::move(init)};
  std::vector<int> result;
  result.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = n;
    std::vector<std::pair<const State*, Candidate>> keep;
    for (const State& s : frontier) {
      std::vector<Candidate> candidates;
      std::vector<int> pushes;
      std::function<void(int)> descend = [&](int u) {
        if (left.is_leaf(u)) {
          candidates.push_back({u, pushes});
          return;
        }
        pushes.push_back(ls.second[u]);
        descend(ls.first[u]);
        pushes.pop_back();
        if (ls.symmetric[u]) {
          pushes.push_back(ls.first[u]);
          descend(ls.second[u]);
          pushes.pop_back();
        }
      };
      descend(s.stack.back());
      for (auto& c : candidates) {
        int pos = 0;
        for (const auto& [w, child] : path[partner[c.leaf]]) {
          signed char o = s.orient[w];
          if (o < 0) o = child == rs.first[w] ? 0 : 1;
          const int lead = o == 0 ? rs.first[w] : rs.second[w];
          if (child != lead) pos += right.size(lead);
        }
        if (pos < best) {
          best = pos;
          keep.clear();
        }
        if (pos == best) keep.emplace_back(&s, std::move(c));
      }
    }
    result.push_back(best);

    std::set<std::vector<int>> seen;
    std::vector<State> next;
    for (auto& [sp, c] : keep) {
      State s = *sp;
      s.stack.pop_back();
      for (int u : c.pushes) s.stack.push_back(u);
      for (const auto& [w, child] : path[partner[c.leaf]]) {
        if (s.orient[w] < 0) s.orient[w] = child == rs.first[w] ? 0 : 1;
        ++s.done[w];
      }
      std::vector<int> key = s.stack;
      key.push_back(-1);
      for (int w = 0; w < right.node_count(); ++w) {
        if (rs.symmetric[w] && s.done[w] > 0 && s.done[w] < right.size(w)) {
          key.push_back(w);
          key.push_back(s.orient[w]);
        }
      }
      if (seen.insert(std::move(key)).second) next.push_back(std::move(s));
    }
    frontier = std::move(next);
  }
  return result;
}

std::vector<int> ParsePerm(std::string_view text) {
  std::vector<int> perm;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error(ErrorCode::kParse, "bad matching entry '" + std::string(item) + "'");
    }
    perm.push_back(value - 1);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return perm;
}

// Right ordering that makes the matching the identity for a fixed left
// ordering, if one exists. `position[r]` is the left position matched to
// right leaf position r.
std::optional<PlaneTree> AlignRight(const PlaneTree& right, const std::vector<int>& position) {
  std::string out;
  bool ok = true;
  // Returns the [min, max] left positions below `id`.
  std::function<std::pair<int, int>(int, bool)> span = [&](int id, bool write) {
    if (right.is_leaf(id)) {
      const int p = position[right.node(id).lo];
      if (write) out += 'o';
      return std::make_pair(p, p);
    }
    const auto a = span(right.node(id).left, false);
    const auto b = span(right.node(id).right, false);
    const int lo = std::min(a.first, b.first), hi = std::max(a.second, b.second);
    if (hi - lo + 1 != right.size(id)) ok = false;
    if (write && ok) {
      out += '(';
      const bool flip = b.first < a.first;
      span(flip ? right.node(id).right : right.node(id).left, true);
      span(flip ? right.node(id).left : right.node(id).right, true);
      out += ')';
    }
    return std::make_pair(lo, hi);
  };
  span(right.root(), false);
  if (!ok) return std::nullopt;
  span(right.root(), true);
  return PlaneTree::Parse(out);
}

}  // namespace

std::string Presentation::Encode() const {
  std::string out = left.Encode() + '|' + right.Encode() + '|';
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(perm[i] + 1);
  }
  return out;
}

Presentation Presentation::Parse(std::string_view text) {
  const auto bar1 = text.find('|');
  const auto bar2 = bar1 == std::string_view::npos ? bar1 : text.find('|', bar1 + 1);
  if (bar2 == std::string_view::npos) {
    throw Error(ErrorCode::kParse, "expected left|right|perm, got '" + std::string(text) + "'");
  }
  Presentation p{PlaneTree::Parse(text.substr(0, bar1)),
                 PlaneTree::Parse(text.substr(bar1 + 1, bar2 - bar1 - 1)),
                 ParsePerm(text.substr(bar2 + 1))};
  if (p.left.leaf_count() != p.right.leaf_count()) {
    throw Error(ErrorCode::kSizeMismatch, "trees with different leaf counts");
  }
  CheckPerm(p.perm, p.size());
  return p;
}

Presentation Layout::AsPresentation() const {
  if (left.leaf_count() != right.leaf_count()) {
    throw Error(ErrorCode::kSizeMismatch, "layout trees with different leaf counts");
  }
  std::vector<int> identity(size());
  std::iota(identity.begin(), identity.end(), 0);
  return {left, right, std::move(identity)};
}

std::string Layout::Encode() const { return left.Encode() + '|' + right.Encode(); }

Layout Layout::Parse(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
    throw Error(ErrorCode::kParse, "expected left|right, got '" + std::string(text) + "'");
  }
  Layout l{PlaneTree::Parse(text.substr(0, bar)), PlaneTree::Parse(text.substr(bar + 1))};
  if (l.left.leaf_count() != l.right.leaf_count()) {
    throw Error(ErrorCode::kSizeMismatch, "layout trees with different leaf counts");
  }
  return l;
}

Tanglegram::Tanglegram() : code_("o|o|1"), size_(1) {}

Tanglegram Tanglegram::Canonical(const Presentation& p) {
  if (p.left.leaf_count() != p.right.leaf_count()) {
    throw Error(ErrorCode::kSizeMismatch, "trees with different leaf counts");
  }
  CheckPerm(p.perm, p.size());
  const CanonicalShape ls(p.left), rs(p.right);
  const std::vector<int> matching = MinimalMatching(p.left, p.right, p.perm, ls, rs);
  Tanglegram t;
  t.size_ = p.size();
  t.code_ = ls.code[0] + '|' + rs.code[0] + '|';
  for (std::size_t i = 0; i < matching.size(); ++i) {
    if (i) t.code_ += ',';
    t.code_ += std::to_string(matching[i] + 1);
  }
  return t;
}

long long Crossings(const Presentation& p) {
  long long count = 0;
  for (std::size_t i = 0; i < p.perm.size(); ++i) {
    for (std::size_t j = i + 1; j < p.perm.size(); ++j) count += p.perm[i] > p.perm[j];
  }
  return count;
}

long long Crossings(const Layout& layout, const std::vector<bool>& left_swaps,
                    const std::vector<bool>& right_swaps) {
  std::vector<int> left_map, right_map;
  layout.left.WithSwaps(left_swaps, &left_map);
  layout.right.WithSwaps(right_swaps, &right_map);
  // Layout leaf i matches right leaf i.
  std::vector<int> perm(layout.size());
  for (int i = 0; i < layout.size(); ++i) perm[left_map[i]] = right_map[i];
  long long count = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) count += perm[i] > perm[j];
  }
  return count;
}

std::vector<Layout> PlanarLayouts(const Presentation& p, int cap) {
  if (p.size() > cap) {
    throw Error(ErrorCode::kCapExceeded, "planarity search at size " + std::to_string(p.size()) +
                                             " exceeds the cap " + std::to_string(cap));
  }
  std::vector<int> internal;
  for (int id = 0; id < p.left.node_count(); ++id) {
    if (!p.left.is_leaf(id)) internal.push_back(id);
  }
  std::set<Layout> found;
  std::vector<bool> swap(p.left.node_count(), false);
  std::vector<int> leaf_map;
  std::vector<int> position(p.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << internal.size()); ++mask) {
    for (std::size_t b = 0; b < internal.size(); ++b) swap[internal[b]] = (mask >> b) & 1U;
    PlaneTree left = p.left.WithSwaps(swap, &leaf_map);
    for (int i = 0; i < p.size(); ++i) position[p.perm[i]] = leaf_map[i];
    if (auto right = AlignRight(p.right, position)) {
      found.insert(Layout{std::move(left), std::move(*right)});
    }
  }
  return {found.begin(), found.end()};
}

std::optional<Layout> IsPlanar(const Tanglegram& t, int cap) {
  auto layouts = PlanarLayouts(t.presentation(), cap);
  if (layouts.empty()) return std::nullopt;
  return layouts.front();
}

std::vector<SubtanglegramSpan> ProperSubtanglegrams(const Presentation& p) {
  std::vector<SubtanglegramSpan> spans;
  for (int u = 1; u < p.left.node_count(); ++u) {
    if (p.left.is_leaf(u)) continue;
    const int lo = p.left.node(u).lo, hi = p.left.node(u).hi;
    const auto [mn, mx] = std::minmax_element(p.perm.begin() + lo, p.perm.begin() + hi + 1);
    if (*mx - *mn != hi - lo) continue;
    const int v = p.right.FindInterval(*mn, *mx);
    if (v > 0 && !p.right.is_leaf(v)) spans.push_back({u, v, lo, hi});
  }
  std::sort(spans.begin(), spans.end(), [](const auto& a, const auto& b) {
    return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
  });
  return spans;
}

std::vector<SubtanglegramSpan> ProperSubtanglegrams(const Layout& layout) {
  std::vector<SubtanglegramSpan> spans;
  for (int u = 1; u < layout.left.node_count(); ++u) {
    if (layout.left.is_leaf(u)) continue;
    const int lo = layout.left.node(u).lo, hi = layout.left.node(u).hi;
    const int v = layout.right.FindInterval(lo, hi);
    if (v > 0 && !layout.right.is_leaf(v)) spans.push_back({u, v, lo, hi});
  }
  std::sort(spans.begin(), spans.end(), [](const auto& a, const auto& b) {
    return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
  });
  return spans;
}

IrrDecomposition Irr(const Tanglegram& t, int cap) {
  IrrDecomposition out;
  Presentation p = t.presentation();
  std::optional<Layout> layout;
  if (t.size() <= cap) layout = IsPlanar(t, cap);
  if (layout) p = layout->AsPresentation();

  // Left intervals are laminar and sorted by (lo, hi): an overlapping span
  // either nests inside the last kept one or shares its start and is wider.
  std::vector<SubtanglegramSpan> maximal;
  for (const auto& s : ProperSubtanglegrams(p)) {
    if (!maximal.empty() && s.lo <= maximal.back().hi) {
      if (s.hi > maximal.back().hi) maximal.back() = s;
      continue;
    }
    maximal.push_back(s);
  }

  std::vector<int> left_ids, right_ids;
  std::vector<int> left_unit(p.size(), -1);  // left position -> unit index
  std::vector<std::pair<int, int>> units;    // (span index or -1, left leaf)
  std::size_t next_span = 0;
  for (int i = 0; i < p.size();) {
    if (next_span < maximal.size() && maximal[next_span].lo == i) {
      const auto& s = maximal[next_span];
      for (int j = s.lo; j <= s.hi; ++j) left_unit[j] = static_cast<int>(units.size());
      units.emplace_back(static_cast<int>(next_span), i);
      left_ids.push_back(s.left_node);
      right_ids.push_back(s.right_node);
      i = s.hi + 1;
      ++next_span;
    } else {
      left_unit[i] = static_cast<int>(units.size());
      units.emplace_back(-1, i);
      ++i;
    }
  }
  // Units in right order.
  std::vector<int> right_unit_of_pos(p.size(), -1);
  for (int i = 0; i < p.size(); ++i) right_unit_of_pos[p.perm[i]] = left_unit[i];
  std::vector<int> right_rank(units.size(), -1);
  int rank = 0;
  for (int r = 0; r < p.size(); ++r) {
    const int u = right_unit_of_pos[r];
    if (right_rank[u] < 0) right_rank[u] = rank++;
  }

  Presentation core{p.left.Contract(left_ids), p.right.Contract(right_ids), right_rank};
  out.core = Tanglegram::Canonical(core);
  if (layout) out.core_layout = Layout{core.left, core.right};
  for (const auto& [span, leaf] : units) {
    if (span < 0) {
      out.blocks.emplace_back();
      continue;
    }
    const auto& s = maximal[span];
    const int right_lo = p.right.node(s.right_node).lo;
    std::vector<int> sub;
    for (int j = s.lo; j <= s.hi; ++j) sub.push_back(p.perm[j] - right_lo);
    out.blocks.push_back(Tanglegram::Canonical(
        {p.left.Subtree(s.left_node), p.right.Subtree(s.right_node), std::move(sub)}));
  }
  return out;
}

Presentation Compose(const Presentation& core, const std::vector<Presentation>& blocks) {
  const int k = core.size();
  if (static_cast<int>(blocks.size()) != k) {
    throw Error(ErrorCode::kSizeMismatch, std::to_string(blocks.size()) + " blocks for a core of size " +
                                              std::to_string(k));
  }
  std::vector<PlaneTree> lefts, rights(k);
  std::vector<int> block_at_right(k);
  for (int i = 0; i < k; ++i) {
    lefts.push_back(blocks[i].left);
    rights[core.perm[i]] = blocks[i].right;
    block_at_right[core.perm[i]] = i;
  }
  std::vector<int> left_offset(k + 1, 0), right_offset(k + 1, 0);
  for (int i = 0; i < k; ++i) {
    left_offset[i + 1] = left_offset[i] + blocks[i].size();
    right_offset[i + 1] = right_offset[i] + blocks[block_at_right[i]].size();
  }
  Presentation out{core.left.ReplaceLeaves(lefts), core.right.ReplaceLeaves(rights), {}};
  out.perm.assign(left_offset[k], -1);
  for (int i = 0; i < k; ++i) {
    for (int a = 0; a < blocks[i].size(); ++a) {
      out.perm[left_offset[i] + a] = right_offset[core.perm[i]] + blocks[i].perm[a];
    }
  }
  return out;
}

Tanglegram Substitute(const Layout& core, const std::vector<Tanglegram>& blocks) {
  if (static_cast<int>(blocks.size()) != core.size()) {
    throw Error(ErrorCode::kSizeMismatch, std::to_string(blocks.size()) +
                                              " blocks for a core of size " +
                                              std::to_string(core.size()));
  }
  std::vector<Presentation> parts;
  parts.reserve(blocks.size());
  for (const auto& b : blocks) parts.push_back(b.presentation());
  return Tanglegram::Canonical(Compose(core.AsPresentation(), parts));
}

std::vector<Tanglegram> EnumerateTanglegrams(int n, bool planar_only, int cap) {
  if (n > cap) {
    throw Error(ErrorCode::kCapExceeded, "tanglegram enumeration at size " + std::to_string(n) +
                                             " exceeds the cap " + std::to_string(cap));
  }
  if (n < 1) throw Error(ErrorCode::kOutOfRange, "size must be positive");
  std::set<std::string> shape_codes;
  std::vector<PlaneTree> shapes;
  for (const auto& t : PlaneTree::EnumerateAll(n)) {
    const CanonicalShape cs(t);
    if (shape_codes.insert(cs.code[0]).second) shapes.push_back(PlaneTree::Parse(cs.code[0]));
  }
  std::set<Tanglegram> found;
  std::vector<int> perm(n);
  for (const auto& l : shapes) {
    for (const auto& r : shapes) {
      std::iota(perm.begin(), perm.end(), 0);
      do {
        found.insert(Tanglegram::Canonical({l, r, perm}));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  std::vector<Tanglegram> out;
  for (const auto& t : found) {
    if (!planar_only || IsPlanar(t, std::max(cap, n))) out.push_back(t);
  }
  return out;
}

}  // namespace tangle
