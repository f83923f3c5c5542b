#pragma once

// The flip graph D_n on ordered pairs of disjoint triangulations, the induced
// subgraphs T_n(S) of the triangulation flip graph, and structural checks.

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tangle/polygon.hpp"

namespace tangle {

inline constexpr int kDefaultFlipGraphCap = 9;

using AdjacencyList = std::vector<std::vector<int>>;

class FlipGraph {
 public:
  // Vertices sorted by their canonical text encoding; adjacency rows follow
  // the move order of Neighbors().
  static FlipGraph Build(int n, int cap = kDefaultFlipGraphCap);

  int n() const { return n_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<DisjointPair>& vertices() const { return vertices_; }
  const AdjacencyList& adjacency() const { return adjacency_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  std::size_t edge_count() const;

  // Index of a pair, or -1.
  int IndexOf(const DisjointPair& p) const;

  // One representative per orbit of the symmetry group generated by the
  // dihedral relabelings of the polygon and the coordinate swap. Returned
  // with orbit sizes; sizes sum to size().
  std::vector<std::pair<int, int>> OrbitRepresentatives() const;

  void WriteDot(std::ostream& os) const;

 private:
  int n_ = 0;
  std::vector<DisjointPair> vertices_;
  AdjacencyList adjacency_;
  std::unordered_map<DisjointPair, int> index_;
};

struct InducedTriGraph {
  int n = 0;
  Triangulation base;
  std::vector<Triangulation> vertices;
  AdjacencyList adjacency;

  bool empty() const { return vertices.empty(); }
};

// Triangulations sharing no diagonal with `base`, joined by single flips that
// stay inside the set.
InducedTriGraph InducedDisjointGraph(const Triangulation& base,
                                     int cap = kDefaultEnumerationCap);

struct GraphCheck {
  bool simple = true;
  bool symmetric = true;
  bool regular = true;
  int degree = 0;
  int components = 0;
};
GraphCheck CheckStructure(const AdjacencyList& adj);

int ComponentCount(const AdjacencyList& adj);
std::vector<int> BfsDistances(const AdjacencyList& adj, int source);

// Exact diameter from all-pairs BFS. Throws Disconnected.
int Diameter(const AdjacencyList& adj);
int Diameter(const FlipGraph& g);
int Diameter(const InducedTriGraph& g);
// Same value as Diameter(g), with BFS only from orbit representatives.
int DiameterBySymmetry(const FlipGraph& g);

// Single flips (diagonals removed, in order) taking `t` to the fan at the
// apex opposite the short diagonal `ear` = (i, i+2) of `s`, with every
// intermediate triangulation disjoint from `s`. Gaps are closed smallest
// first.
std::vector<Diagonal> PathToFan(const Triangulation& t, const Triangulation& s, Diagonal ear);

// Three mutually adjacent vertices, the first being the pair (fan at 1,
// fan at n).
std::array<int, 3> FindTriangle(const FlipGraph& g);

}  // namespace tangle
