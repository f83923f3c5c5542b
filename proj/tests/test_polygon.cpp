#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include "tangle/error.hpp"
#include "tangle/polygon.hpp"

using namespace tangle;

namespace {

// Chords of points on a circle, by orientation tests.
bool GeometricCross(int n, Diagonal d1, Diagonal d2) {
  auto pt = [n](int v) {
    const double a = 2 * M_PI * (v - 1) / n;
    return std::pair{std::cos(a), std::sin(a)};
  };
  auto orient = [](std::pair<double, double> p, std::pair<double, double> q,
                   std::pair<double, double> r) {
    return (q.first - p.first) * (r.second - p.second) - (q.second - p.second) * (r.first - p.first);
  };
  if (d1.a == d2.a || d1.a == d2.b || d1.b == d2.a || d1.b == d2.b) return false;
  const auto a = pt(d1.a), b = pt(d1.b), c = pt(d2.a), d = pt(d2.b);
  return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
}

std::uint64_t Binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Triangulation T(int n, std::vector<Diagonal> ds) { return Triangulation(n, std::move(ds)); }

}  // namespace

TEST_CASE("crossing test agrees with geometry") {
  for (int n = 4; n <= 9; ++n) {
    for (int a = 1; a <= n; ++a)
      for (int b = a + 2; b <= n; ++b)
        for (int c = 1; c <= n; ++c)
          for (int d = c + 2; d <= n; ++d) {
            const Diagonal d1(a, b), d2(c, d);
            if (!IsDiagonalOf(n, d1) || !IsDiagonalOf(n, d2)) continue;
            CHECK(Crosses(d1, d2) == GeometricCross(n, d1, d2));
          }
  }
}

TEST_CASE("diagonal normalizes its endpoints") {
  const Diagonal d(5, 2);
  CHECK(d.a == 2);
  CHECK(d.b == 5);
  CHECK_FALSE(IsDiagonalOf(6, Diagonal(1, 6)));
  CHECK_FALSE(IsDiagonalOf(6, Diagonal(3, 4)));
  CHECK(IsDiagonalOf(6, Diagonal(1, 5)));
}

TEST_CASE("triangulation validation") {
  CHECK_NOTHROW(T(6, {{1, 3}, {1, 4}, {1, 5}}));
  CHECK_THROWS_AS(T(6, {{1, 4}, {2, 5}, {1, 5}}), Error);
  CHECK_THROWS_AS(T(6, {{1, 3}, {1, 4}}), Error);
  CHECK_THROWS_AS(T(6, {{1, 3}, {1, 3}, {1, 4}}), Error);
  CHECK_THROWS_AS(T(6, {{1, 2}, {1, 4}, {1, 5}}), Error);
  CHECK_THROWS_AS(T(2, {}), Error);
}

TEST_CASE("enumerated triangulations are valid and distinct, Catalan many") {
  for (int n = 3; n <= 12; ++n) {
    const auto all = EnumerateTriangulations(n);
    CHECK(all.size() == Binomial(2 * (n - 2), n - 2) / (n - 1));
    CHECK(all.size() == Catalan(n - 2));
    std::set<std::vector<Diagonal>> seen;
    for (const auto& t : all) {
      CHECK(static_cast<int>(t.diagonals().size()) == n - 3);
      seen.insert(t.diagonals());
    }
    CHECK(seen.size() == all.size());
    CHECK(std::is_sorted(all.begin(), all.end()));
  }
  CHECK_THROWS_AS(EnumerateTriangulations(15), Error);
}

TEST_CASE("disjoint pair counts") {
  // Mixing table vertex counts.
  CHECK(EnumerateDisjointPairs(5).size() == 10);
  CHECK(EnumerateDisjointPairs(6).size() == 68);
  CHECK(EnumerateDisjointPairs(7).size() == 546);
  CHECK(CountDisjointPairs(8) == 4872);
  CHECK(CountDisjointPairs(9) == 46782);
  for (int n = 3; n <= 9; ++n) {
    const auto tris = EnumerateTriangulations(n);
    std::uint64_t brute = 0;
    std::uint64_t by_dp = 0;
    for (const auto& s : tris) {
      for (const auto& t : tris) brute += !s.SharesDiagonalWith(t);
      by_dp += CountDisjointFrom(s);
    }
    CHECK(brute == CountDisjointPairs(n));
    CHECK(by_dp == brute);
  }
}

TEST_CASE("encode and parse round trip") {
  const DisjointPair p(T(6, {{1, 4}, {1, 5}, {2, 4}}), T(6, {{1, 3}, {3, 6}, {4, 6}}));
  CHECK(p.Encode() == "6:[1-4,1-5,2-4]|6:[1-3,3-6,4-6]");
  CHECK(DisjointPair::Parse(p.Encode()) == p);
  CHECK(Triangulation::Parse("3:[]").n() == 3);
  CHECK_THROWS_AS(DisjointPair::Parse("6:[1-4,1-5,2-4]|6:[1-4,1-5,2-4]"), Error);
  CHECK_THROWS_AS(Triangulation::Parse("6:[1-4,1-5"), Error);
  CHECK_THROWS_AS(Triangulation::Parse("6[1-4]"), Error);
}

TEST_CASE("quadrilateral and single flip") {
  const Triangulation t = Fan(6, 1);
  const Quad q = QuadOf(t, Diagonal(1, 4));
  CHECK(q.a == 1);
  CHECK(q.a_prime == 3);
  CHECK(q.b == 4);
  CHECK(q.b_prime == 5);
  const SingleFlip f = FlipSingle(t, Diagonal(1, 4));
  CHECK(f.added == Diagonal(3, 5));
  CHECK(f.result == T(6, {{1, 3}, {1, 5}, {3, 5}}));
  try {
    QuadOf(t, Diagonal(2, 4));
    FAIL("expected DiagonalAbsent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDiagonalAbsent);
  }
}

TEST_CASE("hexagon double flip") {
  const DisjointPair p(T(6, {{1, 4}, {1, 5}, {2, 4}}), T(6, {{1, 3}, {3, 6}, {4, 6}}));
  const PairFlip f = FlipPair(p, FlipMove{1, Diagonal(2, 4)});
  CHECK(f.kind == FlipKind::kDouble);
  CHECK(f.result.first == T(6, {{1, 3}, {1, 4}, {1, 5}}));
  CHECK(f.result.second == T(6, {{2, 6}, {3, 6}, {4, 6}}));
  CHECK(f.inverse == FlipMove{2, Diagonal(2, 6)});
  CHECK(FlipPair(f.result, f.inverse).result == p);
}

TEST_CASE("flip then inverse is the identity, exhaustively") {
  for (int n = 4; n <= 7; ++n) {
    int doubles = 0;
    for (const DisjointPair& p : EnumerateDisjointPairs(n)) {
      const auto nbrs = Neighbors(p);
      CHECK(static_cast<int>(nbrs.size()) == 2 * (n - 3));
      for (const auto& [move, q] : nbrs) {
        const PairFlip f = FlipPair(p, move);
        CHECK(f.result == q);
        CHECK_FALSE(f.result.first.SharesDiagonalWith(f.result.second));
        CHECK_FALSE(f.result == p);
        const PairFlip back = FlipPair(f.result, f.inverse);
        CHECK(back.result == p);
        CHECK(back.kind == f.kind);
        doubles += f.kind == FlipKind::kDouble;
      }
    }
    if (n >= 5) CHECK(doubles > 0);
  }
}

TEST_CASE("fans") {
  CHECK(Fan(6, 1) == T(6, {{1, 3}, {1, 4}, {1, 5}}));
  CHECK(Fan(6, 6) == T(6, {{2, 6}, {3, 6}, {4, 6}}));
  CHECK(Fan(6, 3) == T(6, {{1, 3}, {3, 5}, {3, 6}}));
  CHECK_FALSE(Fan(7, 1).SharesDiagonalWith(Fan(7, 7)));
}

TEST_CASE("masks distinguish triangulations") {
  const auto all = EnumerateTriangulations(8);
  std::set<std::uint64_t> masks;
  for (const auto& t : all) masks.insert(t.Mask());
  CHECK(masks.size() == all.size());
}
