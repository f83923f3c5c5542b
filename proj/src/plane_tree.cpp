#include "tangle/plane_tree.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "tangle/error.hpp"

namespace tangle {

PlaneTree::PlaneTree() { Rebuild("o"); }

void PlaneTree::Rebuild(std::string_view text) {
  nodes_.clear();
  leaf_nodes_.clear();
  std::size_t pos = 0;
  // Returns the node id of the subtree starting at `pos`.
  std::function<int(int)> parse = [&](int parent) -> int {
    if (pos >= text.size()) throw Error(ErrorCode::kParse, "truncated tree '" + std::string(text) + "'");
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back(Node{-1, -1, parent, 0, 0});
    if (text[pos] == 'o') {
      ++pos;
      nodes_[id].lo = nodes_[id].hi = static_cast<int>(leaf_nodes_.size());
      leaf_nodes_.push_back(id);
      return id;
    }
    if (text[pos] != '(') {
      throw Error(ErrorCode::kParse, "unexpected '" + std::string(1, text[pos]) + "' in tree '" +
                                         std::string(text) + "'");
    }
    ++pos;
    const int left = parse(id);
    const int right = parse(id);
    if (pos >= text.size() || text[pos] != ')') {
      throw Error(ErrorCode::kParse, "unbalanced tree '" + std::string(text) + "'");
    }
    ++pos;
    nodes_[id].left = left;
    nodes_[id].right = right;
    nodes_[id].lo = nodes_[left].lo;
    nodes_[id].hi = nodes_[right].hi;
    return id;
  };
  parse(-1);
  if (pos != text.size()) {
    throw Error(ErrorCode::kParse, "trailing characters in tree '" + std::string(text) + "'");
  }
}

PlaneTree PlaneTree::Join(const PlaneTree& left, const PlaneTree& right) {
  return Parse("(" + left.Encode() + right.Encode() + ")");
}

PlaneTree PlaneTree::Parse(std::string_view text) {
  PlaneTree t;
  t.Rebuild(text);
  return t;
}

PlaneTree PlaneTree::FromIntervals(int leaves, const std::vector<std::pair<int, int>>& intervals) {
  std::set<std::pair<int, int>> known(intervals.begin(), intervals.end());
  if (static_cast<int>(known.size()) != std::max(leaves - 2, 0) ||
      static_cast<int>(intervals.size()) != std::max(leaves - 2, 0)) {
    throw Error(ErrorCode::kParse, "a plane tree with " + std::to_string(leaves) + " leaves has " +
                                       std::to_string(std::max(leaves - 2, 0)) +
                                       " non-root internal nodes");
  }
  std::string out;
  std::function<void(int, int)> emit = [&](int lo, int hi) {
    if (lo == hi) {
      out += 'o';
      return;
    }
    // Left child: the longest known interval [lo, m] with m < hi, else a leaf.
    int split = lo;
    for (auto it = known.lower_bound({lo, hi}); it != known.begin();) {
      --it;
      if (it->first != lo) break;
      if (it->second < hi) {
        split = it->second;
        break;
      }
    }
    if (split + 1 < hi && !known.count({split + 1, hi})) {
      throw Error(ErrorCode::kParse, "intervals do not form a plane binary tree");
    }
    out += '(';
    emit(lo, split);
    emit(split + 1, hi);
    out += ')';
  };
  emit(0, leaves - 1);
  PlaneTree t = Parse(out);
  for (const auto& [lo, hi] : intervals) {
    if (t.FindInterval(lo, hi) < 0) {
      throw Error(ErrorCode::kParse, "intervals do not form a plane binary tree");
    }
  }
  return t;
}

std::vector<PlaneTree> PlaneTree::EnumerateAll(int leaves) {
  std::vector<std::vector<std::string>> by_size(leaves + 1);
  by_size[1] = {"o"};
  for (int m = 2; m <= leaves; ++m) {
    for (int left = 1; left < m; ++left) {
      for (const auto& a : by_size[left]) {
        for (const auto& b : by_size[m - left]) by_size[m].push_back("(" + a + b + ")");
      }
    }
  }
  std::sort(by_size[leaves].begin(), by_size[leaves].end());
  std::vector<PlaneTree> out;
  out.reserve(by_size[leaves].size());
  for (const auto& s : by_size[leaves]) out.push_back(Parse(s));
  return out;
}

std::string PlaneTree::Encode() const {
  std::string out;
  out.reserve(3 * nodes_.size());
  std::function<void(int)> emit = [&](int id) {
    if (is_leaf(id)) {
      out += 'o';
      return;
    }
    out += '(';
    emit(nodes_[id].left);
    emit(nodes_[id].right);
    out += ')';
  };
  emit(0);
  return out;
}

PlaneTree PlaneTree::Subtree(int id) const {
  std::string out;
  std::function<void(int)> emit = [&](int u) {
    if (is_leaf(u)) {
      out += 'o';
      return;
    }
    out += '(';
    emit(nodes_[u].left);
    emit(nodes_[u].right);
    out += ')';
  };
  emit(id);
  return Parse(out);
}

PlaneTree PlaneTree::WithSwaps(const std::vector<bool>& swap, std::vector<int>* leaf_map) const {
  std::string out;
  int next_leaf = 0;
  if (leaf_map) leaf_map->assign(leaf_count(), -1);
  std::function<void(int)> emit = [&](int id) {
    if (is_leaf(id)) {
      if (leaf_map) (*leaf_map)[nodes_[id].lo] = next_leaf;
      ++next_leaf;
      out += 'o';
      return;
    }
    const bool flip = id < static_cast<int>(swap.size()) && swap[id];
    out += '(';
    emit(flip ? nodes_[id].right : nodes_[id].left);
    emit(flip ? nodes_[id].left : nodes_[id].right);
    out += ')';
  };
  emit(0);
  return Parse(out);
}

PlaneTree PlaneTree::Mirror() const { return WithSwaps(std::vector<bool>(nodes_.size(), true)); }

PlaneTree PlaneTree::ReplaceLeaves(const std::vector<PlaneTree>& blocks) const {
  if (static_cast<int>(blocks.size()) != leaf_count()) {
    throw Error(ErrorCode::kSizeMismatch, "need one block per leaf");
  }
  std::string out;
  std::function<void(int)> emit = [&](int id) {
    if (is_leaf(id)) {
      out += blocks[nodes_[id].lo].Encode();
      return;
    }
    out += '(';
    emit(nodes_[id].left);
    emit(nodes_[id].right);
    out += ')';
  };
  emit(0);
  return Parse(out);
}

PlaneTree PlaneTree::Contract(const std::vector<int>& ids) const {
  std::vector<bool> cut(nodes_.size(), false);
  for (int id : ids) cut[id] = true;
  std::string out;
  std::function<void(int)> emit = [&](int id) {
    if (cut[id] || is_leaf(id)) {
      out += 'o';
      return;
    }
    out += '(';
    emit(nodes_[id].left);
    emit(nodes_[id].right);
    out += ')';
  };
  emit(0);
  return Parse(out);
}

PlaneTree PlaneTree::RotateAt(int id) const {
  if (id <= 0 || id >= node_count() || is_leaf(id)) {
    throw Error(ErrorCode::kInvalidNode, "rotation needs a non-root internal node, got " +
                                             std::to_string(id));
  }
  const int parent = nodes_[id].parent;
  const bool is_left = nodes_[parent].left == id;
  std::string out;
  std::function<void(int)> emit = [&](int u) {
    if (is_leaf(u)) {
      out += 'o';
      return;
    }
    if (u == parent) {
      const Node& x = nodes_[id];
      if (is_left) {
        out += '(';
        emit(x.left);
        out += '(';
        emit(x.right);
        emit(nodes_[parent].right);
        out += "))";
      } else {
        out += "((";
        emit(nodes_[parent].left);
        emit(x.left);
        out += ')';
        emit(x.right);
        out += ')';
      }
      return;
    }
    out += '(';
    emit(nodes_[u].left);
    emit(nodes_[u].right);
    out += ')';
  };
  emit(0);
  return Parse(out);
}

int PlaneTree::FindInterval(int lo, int hi) const {
  if (lo < 0 || hi >= leaf_count() || lo > hi) return -1;
  int id = leaf_nodes_[lo];
  while (id >= 0 && nodes_[id].lo == lo) {
    if (nodes_[id].hi == hi) return id;
    if (nodes_[id].hi > hi) return -1;
    id = nodes_[id].parent;
  }
  return -1;
}

}  // namespace tangle
