#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "tangle/error.hpp"
#include "tangle/tanglegram.hpp"

using namespace tangle;

namespace {

// Minimum of (left code, right code, perm) over every combination of child
// swaps in both trees.
std::string BruteCanonical(const Presentation& p) {
  auto internal = [](const PlaneTree& t) {
    std::vector<int> ids;
    for (int id = 0; id < t.node_count(); ++id) {
      if (!t.is_leaf(id)) ids.push_back(id);
    }
    return ids;
  };
  auto swaps = [](const PlaneTree& t, const std::vector<int>& ids, long long mask) {
    std::vector<bool> s(t.node_count(), false);
    for (std::size_t i = 0; i < ids.size(); ++i) s[ids[i]] = (mask >> i) & 1;
    return s;
  };
  const auto li = internal(p.left);
  const auto ri = internal(p.right);
  std::tuple<std::string, std::string, std::vector<int>> best;
  bool have = false;
  for (long long lm = 0; lm < (1LL << li.size()); ++lm) {
    std::vector<int> lmap;
    const PlaneTree left = p.left.WithSwaps(swaps(p.left, li, lm), &lmap);
    for (long long rm = 0; rm < (1LL << ri.size()); ++rm) {
      std::vector<int> rmap;
      const PlaneTree right = p.right.WithSwaps(swaps(p.right, ri, rm), &rmap);
      std::vector<int> perm(p.perm.size());
      for (std::size_t i = 0; i < perm.size(); ++i) perm[lmap[i]] = rmap[p.perm[i]];
      auto cand = std::make_tuple(left.Encode(), right.Encode(), perm);
      if (!have || cand < best) {
        best = cand;
        have = true;
      }
    }
  }
  Presentation out{PlaneTree::Parse(std::get<0>(best)), PlaneTree::Parse(std::get<1>(best)),
                   std::get<2>(best)};
  return out.Encode();
}

Presentation RandomPresentation(int n, std::mt19937_64& gen) {
  const auto trees = PlaneTree::EnumerateAll(n);
  std::uniform_int_distribution<std::size_t> pick(0, trees.size() - 1);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), gen);
  return Presentation{trees[pick(gen)], trees[pick(gen)], perm};
}

}  // namespace

TEST_CASE("presentation text") {
  const Presentation p = Presentation::Parse("((oo)o)|(o(oo))|3,1,2");
  CHECK(p.perm == std::vector<int>{2, 0, 1});
  CHECK(p.Encode() == "((oo)o)|(o(oo))|3,1,2");
  CHECK_THROWS_AS(Presentation::Parse("((oo)o)|(o(oo))|1,1,2"), Error);
  CHECK_THROWS_AS(Presentation::Parse("((oo)o)|(oo)|1,2"), Error);
  CHECK_THROWS_AS(Presentation::Parse("((oo)o)|(o(oo))"), Error);
}

TEST_CASE("canonical form agrees with the brute-force minimum") {
  std::mt19937_64 gen(7);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      const Presentation p = RandomPresentation(n, gen);
      CHECK(Tanglegram::Canonical(p).code() == BruteCanonical(p));
    }
  }
}

TEST_CASE("canonical form is invariant under child swaps") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Presentation p = RandomPresentation(7, gen);
    std::vector<bool> ls(p.left.node_count()), rs(p.right.node_count());
    for (auto&& b : ls) b = gen() & 1;
    for (auto&& b : rs) b = gen() & 1;
    std::vector<int> lmap, rmap;
    Presentation q{p.left.WithSwaps(ls, &lmap), p.right.WithSwaps(rs, &rmap), p.perm};
    for (std::size_t i = 0; i < p.perm.size(); ++i) q.perm[lmap[i]] = rmap[p.perm[i]];
    CHECK(Tanglegram::Canonical(p) == Tanglegram::Canonical(q));
  }
}

TEST_CASE("crossings") {
  // Matching 1->4, 2->1, 3->2, 4->3.
  CHECK(Crossings(Presentation::Parse("(((oo)o)o)|(((oo)o)o)|4,1,2,3")) == 3);
  CHECK(Crossings(Presentation::Parse("((oo)(oo))|((oo)(oo))|1,2,3,4")) == 0);
  const Layout l = Layout::Parse("((oo)o)|((oo)o)");
  CHECK(Crossings(l, {false, false, false, false, false}, {false, false, false, false, false}) == 0);
  CHECK(Crossings(l, {true, false, false, false, false}, {false, false, false, false, false}) == 2);
}

TEST_CASE("size-4 tanglegrams") {
  const auto all = EnumerateTanglegrams(4, false);
  const auto planar = EnumerateTanglegrams(4, true);
  CHECK(all.size() == 13);
  CHECK(planar.size() == 11);
  const std::set<std::string> non_planar = {
      Tanglegram::Parse("(((oo)o)o)|(((oo)o)o)|1,4,3,2").code(),
      Tanglegram::Parse("((oo)(oo))|((oo)(oo))|1,3,2,4").code()};
  for (const auto& t : all) {
    CHECK(IsPlanar(t).has_value() == !non_planar.count(t.code()));
  }
  // Five irreducible, three with irr of size two and three of size three.
  std::map<int, int> by_irr;
  for (const auto& t : planar) ++by_irr[Irr(t).core.size()];
  CHECK(by_irr[4] == 5);
  CHECK(by_irr[3] == 3);
  CHECK(by_irr[2] == 3);
}

TEST_CASE("planar tanglegram counts") {
  CHECK(EnumerateTanglegrams(1, true).size() == 1);
  CHECK(EnumerateTanglegrams(2, true).size() == 1);
  CHECK(EnumerateTanglegrams(3, true).size() == 2);
  CHECK(EnumerateTanglegrams(5, true).size() == 76);
  CHECK_THROWS_AS(EnumerateTanglegrams(7, true), Error);
}

TEST_CASE("irreducible planar tanglegrams have exactly two layouts, mirror images") {
  for (int n = 3; n <= 6; ++n) {
    for (const auto& t : EnumerateTanglegrams(n, true)) {
      if (!ProperSubtanglegrams(t.presentation()).empty()) continue;
      const auto layouts = PlanarLayouts(t.presentation());
      REQUIRE(layouts.size() == 2);
      CHECK(layouts[0].Mirror() == layouts[1]);
    }
  }
}

TEST_CASE("irr and substitution invert each other") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& t : EnumerateTanglegrams(n, true)) {
      const IrrDecomposition d = Irr(t);
      REQUIRE(d.core_layout);
      CHECK(ProperSubtanglegrams(*d.core_layout).empty());
      int total = 0;
      for (const auto& b : d.blocks) total += b.size();
      CHECK(total == n);
      CHECK(Substitute(*d.core_layout, d.blocks) == t);
    }
  }
}

TEST_CASE("composition") {
  const Presentation core = Presentation::Parse("(oo)|(oo)|2,1");
  const Presentation cherry = Presentation::Parse("(oo)|(oo)|1,2");
  const Presentation one = Presentation::Parse("o|o|1");
  const Presentation c = Compose(core, {cherry, one});
  CHECK(c.Encode() == "((oo)o)|(o(oo))|2,3,1");
  CHECK_THROWS_AS(Compose(core, {cherry}), Error);
}

TEST_CASE("proper subtanglegrams") {
  const auto spans = ProperSubtanglegrams(Layout::Parse("((oo)o)|((oo)o)"));
  REQUIRE(spans.size() == 1);
  CHECK(spans[0].lo == 0);
  CHECK(spans[0].hi == 1);
  CHECK(ProperSubtanglegrams(Layout::Parse("((oo)o)|(o(oo))")).empty());
}
