#pragma once

// Triangulations of a labeled convex polygon and flips on ordered pairs of
// disjoint triangulations.
//
// Vertices are labeled 1..n counterclockwise. A diagonal is stored as (a, b)
// with a < b and is never a polygon side.

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tangle {

inline constexpr int kMaxPolygon = 64;
inline constexpr int kDefaultEnumerationCap = 14;

struct Diagonal {
  int a = 0;
  int b = 0;

  Diagonal() = default;
  // Accepts either endpoint order.
  Diagonal(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}

  auto operator<=>(const Diagonal&) const = default;
};

// True iff the endpoints strictly interleave. Shared endpoints never cross.
bool Crosses(Diagonal d1, Diagonal d2);

// True iff (a, b) is a diagonal (not a side) of the n-gon.
bool IsDiagonalOf(int n, Diagonal d);

class Triangulation {
 public:
  Triangulation() = default;
  // Validates the count, range and noncrossing invariants.
  Triangulation(int n, std::vector<Diagonal> diagonals);

  int n() const { return n_; }
  const std::vector<Diagonal>& diagonals() const { return diagonals_; }

  // Membership for a diagonal or side.
  bool HasEdge(int u, int v) const { return (adj_[u - 1] >> (v - 1)) & 1U; }
  bool Contains(Diagonal d) const { return IsDiagonalOf(n_, d) && HasEdge(d.a, d.b); }
  bool SharesDiagonalWith(const Triangulation& other) const;

  // Bitmask over the diagonals of the n-gon in lexicographic order. Only
  // defined for n <= 12 (54 diagonals).
  std::uint64_t Mask() const;

  // `n:[a-b,...]`
  std::string Encode() const;
  static Triangulation Parse(std::string_view text);

  bool operator==(const Triangulation& o) const {
    return n_ == o.n_ && diagonals_ == o.diagonals_;
  }
  bool operator<(const Triangulation& o) const {
    return n_ != o.n_ ? n_ < o.n_ : diagonals_ < o.diagonals_;
  }

 private:
  friend struct TriangulationAccess;

  int n_ = 0;
  std::vector<Diagonal> diagonals_;
  // adj_[u-1] bit (v-1) set iff u-v is a side or diagonal.
  std::vector<std::uint64_t> adj_;
};

struct DisjointPair {
  Triangulation first;
  Triangulation second;

  DisjointPair() = default;
  DisjointPair(Triangulation t1, Triangulation t2);

  int n() const { return first.n(); }
  const Triangulation& side(int i) const { return i == 1 ? first : second; }

  std::string Encode() const;
  static DisjointPair Parse(std::string_view text);

  bool operator==(const DisjointPair&) const = default;
  bool operator<(const DisjointPair& o) const {
    return first == o.first ? second < o.second : first < o.first;
  }
};

struct FlipMove {
  int side = 1;  // 1 or 2
  Diagonal diagonal;

  bool operator==(const FlipMove&) const = default;
};

enum class FlipKind { kSingle, kDouble };

struct Quad {
  int a, a_prime, b, b_prime;  // cyclic order a, a', b, b'
};

// The quadrilateral left when `d` is deleted from `t`.
Quad QuadOf(const Triangulation& t, Diagonal d);

struct SingleFlip {
  Triangulation result;
  Diagonal added;
};
SingleFlip FlipSingle(const Triangulation& t, Diagonal d);

struct PairFlip {
  DisjointPair result;
  FlipKind kind;
  FlipMove inverse;
};
PairFlip FlipPair(const DisjointPair& p, const FlipMove& m);

// One entry per diagonal per side, side 1 first, diagonals in sorted order.
std::vector<std::pair<FlipMove, DisjointPair>> Neighbors(const DisjointPair& p);

// Fan at `apex`: every diagonal incident to it.
Triangulation Fan(int n, int apex);

// Lexicographic on sorted diagonal lists.
std::vector<Triangulation> EnumerateTriangulations(int n, int cap = kDefaultEnumerationCap);

// Ordered pairs, first-major in the order of EnumerateTriangulations.
std::vector<DisjointPair> EnumerateDisjointPairs(int n, int cap = kDefaultEnumerationCap);

// |V(D_n)| without materializing the pairs. n <= 12.
std::uint64_t CountDisjointPairs(int n);

// Number of triangulations of the n-gon avoiding every diagonal of `forbidden`.
std::uint64_t CountDisjointFrom(const Triangulation& forbidden);

std::uint64_t Catalan(int m);

}  // namespace tangle

template <>
struct std::hash<tangle::Triangulation> {
  std::size_t operator()(const tangle::Triangulation& t) const noexcept;
};

template <>
struct std::hash<tangle::DisjointPair> {
  std::size_t operator()(const tangle::DisjointPair& p) const noexcept;
};
