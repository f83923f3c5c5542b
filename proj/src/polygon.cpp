#include "tangle/polygon.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <sstream>

#include "tangle/error.hpp"

namespace tangle {

struct TriangulationAccess {
  // Trusted construction: `diagonals` already sorted, valid and noncrossing.
  static Triangulation Make(int n, std::vector<Diagonal> diagonals) {
    Triangulation t;
    t.n_ = n;
    t.diagonals_ = std::move(diagonals);
    t.adj_.assign(n, 0);
    auto link = [&t](int u, int v) {
      t.adj_[u - 1] |= std::uint64_t{1} << (v - 1);
      t.adj_[v - 1] |= std::uint64_t{1} << (u - 1);
    };
    for (int v = 1; v <= n; ++v) link(v, v == n ? 1 : v + 1);
    for (const Diagonal& d : t.diagonals_) link(d.a, d.b);
    return t;
  }
};

namespace {

void CheckPolygonSize(int n) {
  if (n < 3 || n > kMaxPolygon) {
    throw Error(ErrorCode::kOutOfRange, "polygon size " + std::to_string(n) + " outside [3, " +
                                            std::to_string(kMaxPolygon) + "]");
  }
}

void CheckCap(int n, int cap, const char* what) {
  if (n > cap) {
    throw Error(ErrorCode::kCapExceeded, std::string(what) + " of the " + std::to_string(n) +
                                             "-gon exceeds the configured cap " +
                                             std::to_string(cap));
  }
}

// Lexicographic index of each diagonal of the n-gon, for n <= 12.
const std::array<std::array<std::int8_t, 13>, 13>& DiagonalIndex(int n) {
  static const auto tables = [] {
    std::array<std::array<std::array<std::int8_t, 13>, 13>, 13> all{};
    for (int m = 3; m <= 12; ++m) {
      int next = 0;
      for (int a = 1; a <= m; ++a) {
        all[m][a].fill(-1);
        for (int b = a + 1; b <= m; ++b) {
          if (IsDiagonalOf(m, Diagonal(a, b))) all[m][a][b] = static_cast<std::int8_t>(next++);
        }
      }
    }
    return all;
  }();
  return tables[n];
}

int ParseInt(std::string_view text, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParse, "bad integer '" + std::string(text) + "' in '" +
                                       std::string(context) + "'");
  }
  return value;
}

std::vector<std::vector<Diagonal>> SubpolygonTriangulations(int i, int j) {
  if (j - i < 2) return {{}};
  std::vector<std::vector<Diagonal>> out;
  for (int m = i + 1; m < j; ++m) {
    auto lower = SubpolygonTriangulations(i, m);
    auto upper = SubpolygonTriangulations(m, j);
    for (const auto& lo : lower) {
      for (const auto& up : upper) {
        std::vector<Diagonal> ds = lo;
        ds.insert(ds.end(), up.begin(), up.end());
        if (m - i >= 2) ds.emplace_back(i, m);
        if (j - m >= 2) ds.emplace_back(m, j);
        out.push_back(std::move(ds));
      }
    }
  }
  return out;
}

}  // namespace

bool Crosses(Diagonal d1, Diagonal d2) {
  return (d1.a < d2.a && d2.a < d1.b && d1.b < d2.b) ||
         (d2.a < d1.a && d1.a < d2.b && d2.b < d1.b);
}

bool IsDiagonalOf(int n, Diagonal d) {
  return d.a >= 1 && d.b <= n && d.b - d.a >= 2 && d.b - d.a <= n - 2;
}

Triangulation::Triangulation(int n, std::vector<Diagonal> diagonals) {
  CheckPolygonSize(n);
  std::sort(diagonals.begin(), diagonals.end());
  if (static_cast<int>(diagonals.size()) != n - 3) {
    throw Error(ErrorCode::kParse, "a triangulation of the " + std::to_string(n) + "-gon needs " +
                                       std::to_string(n - 3) + " diagonals, got " +
                                       std::to_string(diagonals.size()));
  }
  for (std::size_t i = 0; i < diagonals.size(); ++i) {
    if (!IsDiagonalOf(n, diagonals[i])) {
      throw Error(ErrorCode::kParse, "(" + std::to_string(diagonals[i].a) + "," +
                                         std::to_string(diagonals[i].b) + ") is not a diagonal");
    }
    if (i > 0 && diagonals[i] == diagonals[i - 1]) {
      throw Error(ErrorCode::kParse, "repeated diagonal");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (Crosses(diagonals[i], diagonals[j])) {
        throw Error(ErrorCode::kParse, "crossing diagonals");
      }
    }
  }
  *this = TriangulationAccess::Make(n, std::move(diagonals));
}

bool Triangulation::SharesDiagonalWith(const Triangulation& other) const {
  for (const Diagonal& d : diagonals_) {
    if (other.HasEdge(d.a, d.b)) return true;
  }
  return false;
}

std::uint64_t Triangulation::Mask() const {
  if (n_ > 12) throw Error(ErrorCode::kCapExceeded, "diagonal masks need n <= 12");
  const auto& index = DiagonalIndex(n_);
  std::uint64_t mask = 0;
  for (const Diagonal& d : diagonals_) mask |= std::uint64_t{1} << index[d.a][d.b];
  return mask;
}

std::string Triangulation::Encode() const {
  std::string out = std::to_string(n_) + ":[";
  for (std::size_t i = 0; i < diagonals_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(diagonals_[i].a) + '-' + std::to_string(diagonals_[i].b);
  }
  out += ']';
  return out;
}

Triangulation Triangulation::Parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || text.size() < colon + 3 || text[colon + 1] != '[' ||
      text.back() != ']') {
    throw Error(ErrorCode::kParse, "expected n:[a-b,...], got '" + std::string(text) + "'");
  }
  const int n = ParseInt(text.substr(0, colon), text);
  std::vector<Diagonal> ds;
  std::string_view body = text.substr(colon + 2, text.size() - colon - 3);
  while (!body.empty()) {
    const auto comma = body.find(',');
    const std::string_view item = body.substr(0, comma);
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) {
      throw Error(ErrorCode::kParse, "bad diagonal '" + std::string(item) + "'");
    }
    ds.emplace_back(ParseInt(item.substr(0, dash), text), ParseInt(item.substr(dash + 1), text));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return Triangulation(n, std::move(ds));
}

DisjointPair::DisjointPair(Triangulation t1, Triangulation t2)
    : first(std::move(t1)), second(std::move(t2)) {
  if (first.n() != second.n()) {
    throw Error(ErrorCode::kSizeMismatch, "pair of triangulations of different polygons");
  }
  if (first.SharesDiagonalWith(second)) {
    throw Error(ErrorCode::kNotDisjoint, first.Encode() + " and " + second.Encode() +
                                             " share a diagonal");
  }
}

std::string DisjointPair::Encode() const { return first.Encode() + '|' + second.Encode(); }

DisjointPair DisjointPair::Parse(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) {
    throw Error(ErrorCode::kParse, "expected T1|T2, got '" + std::string(text) + "'");
  }
  return DisjointPair(Triangulation::Parse(text.substr(0, bar)),
                      Triangulation::Parse(text.substr(bar + 1)));
}

Quad QuadOf(const Triangulation& t, Diagonal d) {
  if (!t.Contains(d)) {
    throw Error(ErrorCode::kDiagonalAbsent, "(" + std::to_string(d.a) + "," +
                                                std::to_string(d.b) + ") not in " + t.Encode());
  }
  int inner = 0;
  int outer = 0;
  for (int c = 1; c <= t.n(); ++c) {
    if (c == d.a || c == d.b || !t.HasEdge(d.a, c) || !t.HasEdge(c, d.b)) continue;
    (c > d.a && c < d.b ? inner : outer) = c;
  }
  return Quad{d.a, inner, d.b, outer};
}

SingleFlip FlipSingle(const Triangulation& t, Diagonal d) {
  const Quad q = QuadOf(t, d);
  const Diagonal added(q.a_prime, q.b_prime);
  std::vector<Diagonal> ds;
  ds.reserve(t.diagonals().size());
  for (const Diagonal& e : t.diagonals()) {
    if (e != d) ds.push_back(e);
  }
  ds.insert(std::upper_bound(ds.begin(), ds.end(), added), added);
  return {TriangulationAccess::Make(t.n(), std::move(ds)), added};
}

PairFlip FlipPair(const DisjointPair& p, const FlipMove& m) {
  const int other = 3 - m.side;
  SingleFlip step_a = FlipSingle(p.side(m.side), m.diagonal);
  DisjointPair out;
  if (!p.side(other).Contains(step_a.added)) {
    out.first = m.side == 1 ? std::move(step_a.result) : p.first;
    out.second = m.side == 1 ? p.second : std::move(step_a.result);
    return {std::move(out), FlipKind::kSingle, FlipMove{m.side, step_a.added}};
  }
  SingleFlip step_b = FlipSingle(p.side(other), step_a.added);
  out.first = m.side == 1 ? std::move(step_a.result) : std::move(step_b.result);
  out.second = m.side == 1 ? std::move(step_b.result) : std::move(step_a.result);
  return {std::move(out), FlipKind::kDouble, FlipMove{other, step_b.added}};
}

std::vector<std::pair<FlipMove, DisjointPair>> Neighbors(const DisjointPair& p) {
  std::vector<std::pair<FlipMove, DisjointPair>> out;
  out.reserve(2 * p.first.diagonals().size());
  for (int side = 1; side <= 2; ++side) {
    for (const Diagonal& d : p.side(side).diagonals()) {
      FlipMove m{side, d};
      out.emplace_back(m, FlipPair(p, m).result);
    }
  }
  return out;
}

Triangulation Fan(int n, int apex) {
  CheckPolygonSize(n);
  if (apex < 1 || apex > n) throw Error(ErrorCode::kOutOfRange, "fan apex outside 1..n");
  std::vector<Diagonal> ds;
  for (int v = 1; v <= n; ++v) {
    if (IsDiagonalOf(n, Diagonal(apex, v))) ds.emplace_back(apex, v);
  }
  std::sort(ds.begin(), ds.end());
  return TriangulationAccess::Make(n, std::move(ds));
}

std::vector<Triangulation> EnumerateTriangulations(int n, int cap) {
  CheckPolygonSize(n);
  CheckCap(n, cap, "triangulation enumeration");
  auto raw = SubpolygonTriangulations(1, n);
  std::vector<Triangulation> out;
  out.reserve(raw.size());
  for (auto& ds : raw) {
    std::sort(ds.begin(), ds.end());
    out.push_back(TriangulationAccess::Make(n, std::move(ds)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DisjointPair> EnumerateDisjointPairs(int n, int cap) {
  CheckCap(n, cap, "disjoint pair enumeration");
  const auto ts = EnumerateTriangulations(n, cap);
  std::vector<DisjointPair> out;
  if (n <= 12) {
    std::vector<std::uint64_t> masks;
    masks.reserve(ts.size());
    for (const auto& t : ts) masks.push_back(t.Mask());
    for (std::size_t i = 0; i < ts.size(); ++i) {
      for (std::size_t j = 0; j < ts.size(); ++j) {
        if ((masks[i] & masks[j]) == 0) {
          DisjointPair p;
          p.first = ts[i];
          p.second = ts[j];
          out.push_back(std::move(p));
        }
      }
    }
    return out;
  }
  for (const auto& t1 : ts) {
    for (const auto& t2 : ts) {
      if (!t1.SharesDiagonalWith(t2)) out.emplace_back(t1, t2);
    }
  }
  return out;
}

std::uint64_t CountDisjointPairs(int n) {
  CheckPolygonSize(n);
  CheckCap(n, 12, "disjoint pair counting");
  const auto ts = EnumerateTriangulations(n, 12);
  std::vector<std::uint64_t> masks;
  masks.reserve(ts.size());
  for (const auto& t : ts) masks.push_back(t.Mask());
  std::uint64_t count = 0;
  for (std::uint64_t m1 : masks) {
    for (std::uint64_t m2 : masks) count += (m1 & m2) == 0;
  }
  return count;
}

std::uint64_t CountDisjointFrom(const Triangulation& forbidden) {
  const int n = forbidden.n();
  // ways[i][j]: triangulations of the sub-polygon i..j bounded by chord (i, j).
  std::vector<std::vector<std::uint64_t>> ways(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  auto allowed = [&](int u, int v) { return v - u == 1 || !forbidden.Contains(Diagonal(u, v)); };
  for (int i = 1; i < n; ++i) ways[i][i + 1] = 1;
  for (int len = 2; len < n; ++len) {
    for (int i = 1; i + len <= n; ++i) {
      const int j = i + len;
      std::uint64_t total = 0;
      for (int m = i + 1; m < j; ++m) {
        if (allowed(i, m) && allowed(m, j)) total += ways[i][m] * ways[m][j];
      }
      ways[i][j] = total;
    }
  }
  return ways[1][n];
}

std::uint64_t Catalan(int m) {
  std::uint64_t c = 1;
  for (int i = 0; i < m; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace tangle

std::size_t std::hash<tangle::Triangulation>::operator()(
    const tangle::Triangulation& t) const noexcept {
  std::size_t h = static_cast<std::size_t>(t.n());
  for (const auto& d : t.diagonals()) {
    h ^= static_cast<std::size_t>(d.a * 131 + d.b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t std::hash<tangle::DisjointPair>::operator()(
    const tangle::DisjointPair& p) const noexcept {
  const std::size_t h1 = std::hash<tangle::Triangulation>{}(p.first);
  const std::size_t h2 = std::hash<tangle::Triangulation>{}(p.second);
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}
