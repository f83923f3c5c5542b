#include "tangle/flip_graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "tangle/error.hpp"

namespace tangle {

namespace {

Triangulation Relabel(const Triangulation& t, const std::function<int(int)>& map) {
  std::vector<Diagonal> ds;
  ds.reserve(t.diagonals().size());
  for (const Diagonal& d : t.diagonals()) ds.emplace_back(map(d.a), map(d.b));
  return Triangulation(t.n(), std::move(ds));
}

}  // namespace

FlipGraph FlipGraph::Build(int n, int cap) {
  if (n > cap) {
    throw Error(ErrorCode::kCapExceeded, "flip graph D_" + std::to_string(n) +
                                             " exceeds the configured cap " + std::to_string(cap));
  }
  FlipGraph g;
  g.n_ = n;
  auto pairs = EnumerateDisjointPairs(n, std::max(cap, n));
  std::vector<std::pair<std::string, int>> keyed;
  keyed.reserve(pairs.size());
  for (int i = 0; i < static_cast<int>(pairs.size()); ++i) keyed.emplace_back(pairs[i].Encode(), i);
  std::sort(keyed.begin(), keyed.end());
  g.vertices_.reserve(pairs.size());
  for (const auto& [key, i] : keyed) g.vertices_.push_back(std::move(pairs[i]));
  g.index_.reserve(g.vertices_.size());
  for (int i = 0; i < g.size(); ++i) g.index_.emplace(g.vertices_[i], i);

  g.adjacency_.resize(g.vertices_.size());
  for (int i = 0; i < g.size(); ++i) {
    for (const auto& [move, q] : Neighbors(g.vertices_[i])) {
      const int j = g.IndexOf(q);
      if (j < 0) throw Error(ErrorCode::kNotDisjoint, "flip left the state space: " + q.Encode());
      g.adjacency_[i].push_back(j);
    }
  }
  return g;
}

std::size_t FlipGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : adjacency_) total += row.size();
  return total / 2;
}

int FlipGraph::IndexOf(const DisjointPair& p) const {
  const auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

std::vector<std::pair<int, int>> FlipGraph::OrbitRepresentatives() const {
  std::vector<std::function<int(int)>> relabelings;
  const int n = n_;
  for (int r = 0; r < n; ++r) {
    relabelings.emplace_back([n, r](int v) { return (v - 1 + r) % n + 1; });
    relabelings.emplace_back([n, r](int v) { return ((n - v + r) % n + n) % n + 1; });
  }
  std::vector<int> orbit_of(size(), -1);
  std::vector<std::pair<int, int>> reps;
  for (int v = 0; v < size(); ++v) {
    if (orbit_of[v] >= 0) continue;
    int members = 0;
    const DisjointPair& p = vertices_[v];
    for (const auto& map : relabelings) {
      const Triangulation a = Relabel(p.first, map);
      const Triangulation b = Relabel(p.second, map);
      for (int swap = 0; swap < 2; ++swap) {
        DisjointPair image;
        image.first = swap ? b : a;
        image.second = swap ? a : b;
        const int u = IndexOf(image);
        if (u < 0) throw Error(ErrorCode::kNotDisjoint, "symmetry image missing");
        if (orbit_of[u] < 0) {
          orbit_of[u] = v;
          ++members;
        }
      }
    }
    reps.emplace_back(v, members);
  }
  return reps;
}

void FlipGraph::WriteDot(std::ostream& os) const {
  os << "graph D" << n_ << " {\n";
  for (int i = 0; i < size(); ++i) {
    os << "  v" << i << " [label=\"" << vertices_[i].Encode() << "\"];\n";
  }
  for (int i = 0; i < size(); ++i) {
    for (int j : adjacency_[i]) {
      if (i < j) os << "  v" << i << " -- v" << j << ";\n";
    }
  }
  os << "}\n";
}

InducedTriGraph InducedDisjointGraph(const Triangulation& base, int cap) {
  InducedTriGraph g;
  g.n = base.n();
  g.base = base;
  for (auto& t : EnumerateTriangulations(base.n(), cap)) {
    if (!t.SharesDiagonalWith(base)) g.vertices.push_back(std::move(t));
  }
  std::unordered_map<Triangulation, int> index;
  for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i) index.emplace(g.vertices[i], i);
  g.adjacency.resize(g.vertices.size());
  for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i) {
    for (const Diagonal& d : g.vertices[i].diagonals()) {
      const auto it = index.find(FlipSingle(g.vertices[i], d).result);
      if (it != index.end()) g.adjacency[i].push_back(it->second);
    }
  }
  return g;
}

GraphCheck CheckStructure(const AdjacencyList& adj) {
  GraphCheck check;
  check.components = ComponentCount(adj);
  check.degree = adj.empty() ? 0 : static_cast<int>(adj[0].size());
  for (int i = 0; i < static_cast<int>(adj.size()); ++i) {
    std::vector<int> row = adj[i];
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end() ||
        std::binary_search(row.begin(), row.end(), i)) {
      check.simple = false;
    }
    if (static_cast<int>(row.size()) != check.degree) check.regular = false;
    for (int j : row) {
      const auto& back = adj[j];
      if (std::find(back.begin(), back.end(), i) == back.end()) check.symmetric = false;
    }
  }
  return check;
}

std::vector<int> BfsDistances(const AdjacencyList& adj, int source) {
  std::vector<int> dist(adj.size(), -1);
  std::vector<int> queue;
  queue.reserve(adj.size());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int v : adj[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

int ComponentCount(const AdjacencyList& adj) {
  std::vector<char> seen(adj.size(), 0);
  int components = 0;
  for (int s = 0; s < static_cast<int>(adj.size()); ++s) {
    if (seen[s]) continue;
    ++components;
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : adj[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          queue.push_back(v);
        }
      }
    }
  }
  return components;
}

namespace {

int Eccentricity(const AdjacencyList& adj, int source) {
  int ecc = 0;
  for (int d : BfsDistances(adj, source)) {
    if (d < 0) {
      throw Error(ErrorCode::kDisconnected,
                  "graph has " + std::to_string(ComponentCount(adj)) + " components");
    }
    ecc = std::max(ecc, d);
  }
  return ecc;
}

}  // namespace

int Diameter(const AdjacencyList& adj) {
  int diam = 0;
  for (int s = 0; s < static_cast<int>(adj.size()); ++s) diam = std::max(diam, Eccentricity(adj, s));
  return diam;
}

int Diameter(const FlipGraph& g) { return Diameter(g.adjacency()); }
int Diameter(const InducedTriGraph& g) { return Diameter(g.adjacency); }

int DiameterBySymmetry(const FlipGraph& g) {
  int diam = 0;
  for (const auto& [rep, size] : g.OrbitRepresentatives()) {
    diam = std::max(diam, Eccentricity(g.adjacency(), rep));
  }
  return diam;
}

std::vector<Diagonal> PathToFan(const Triangulation& t, const Triangulation& s, Diagonal ear) {
  const int n = t.n();
  if (s.n() != n) throw Error(ErrorCode::kSizeMismatch, "triangulations of different polygons");
  if (t.SharesDiagonalWith(s)) {
    throw Error(ErrorCode::kNotDisjoint, t.Encode() + " shares a diagonal with " + s.Encode());
  }
  const bool short_diagonal = ear.b - ear.a == 2 || (ear.a + n - ear.b) == 2;
  if (!s.Contains(ear) || !short_diagonal) {
    throw Error(ErrorCode::kDiagonalAbsent, "the ear diagonal must be an (i, i+2) diagonal of s");
  }
  // The apex is the vertex cut off by the ear; relabel it to 1 so the ear
  // becomes (2, n).
  const int apex = ear.b - ear.a == 2 ? ear.a + 1 : (ear.b % n) + 1;
  auto to_local = [n, apex](int v) { return (v - apex + n) % n + 1; };
  auto to_global = [n, apex](int v) { return (v - 1 + apex - 1) % n + 1; };

  Triangulation current = Relabel(t, to_local);
  std::vector<Diagonal> flips;
  while (true) {
    // Fan members (1, i) plus the sides (1, 2) and (1, n) as sentinels.
    std::vector<int> spokes{2};
    for (int i = 3; i <= n - 1; ++i) {
      if (current.HasEdge(1, i)) spokes.push_back(i);
    }
    spokes.push_back(n);
    std::optional<Diagonal> gap;
    for (std::size_t j = 0; j + 1 < spokes.size(); ++j) {
      if (spokes[j + 1] - spokes[j] > 1) {
        gap = Diagonal(spokes[j], spokes[j + 1]);
        break;
      }
    }
    if (!gap) break;
    flips.emplace_back(to_global(gap->a), to_global(gap->b));
    current = FlipSingle(current, *gap).result;
  }
  return flips;
}

std::array<int, 3> FindTriangle(const FlipGraph& g) {
  const int n = g.n();
  DisjointPair start;
  start.first = Fan(n, 1);
  start.second = Fan(n, n);
  const int s = g.IndexOf(start);
  if (s < 0) throw Error(ErrorCode::kOutOfRange, "fan pair missing from graph");
  for (int a : g.neighbors(s)) {
    for (int b : g.neighbors(a)) {
      if (b == s) continue;
      const auto& row = g.neighbors(b);
      if (std::find(row.begin(), row.end(), s) != row.end()) return {s, a, b};
    }
  }
  throw Error(ErrorCode::kOutOfRange, "no 3-cycle through the fan pair");
}

}  // namespace tangle
