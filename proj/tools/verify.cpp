#include "verify.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "json.hpp"
#include "tangle/counting.hpp"
#include "tangle/duality.hpp"
#include "tangle/error.hpp"
#include "tangle/flip_graph.hpp"
#include "tangle/polygon.hpp"
#include "tangle/tanglegram.hpp"

namespace tangle::cli {

namespace {

struct Check {
  std::string name;
  std::function<std::string()> run;  // empty string = pass, else failure detail
};

std::string FlipInvolution(int max_n) {
  for (int n = 4; n <= max_n; ++n) {
    for (const DisjointPair& p : EnumerateDisjointPairs(n)) {
      for (int side = 1; side <= 2; ++side) {
        for (const Diagonal& d : p.side(side).diagonals()) {
          const PairFlip f = FlipPair(p, FlipMove{side, d});
          if (!(FlipPair(f.result, f.inverse).result == p)) {
            return "inverse fails at " + p.Encode();
          }
        }
      }
    }
  }
  return "";
}

std::string Regularity(int max_n) {
  for (int n = 5; n <= max_n; ++n) {
    const FlipGraph g = FlipGraph::Build(n);
    const GraphCheck c = CheckStructure(g.adjacency());
    if (!c.simple || !c.symmetric || !c.regular || c.degree != 2 * (n - 3) || c.components != 1) {
      return "D_" + std::to_string(n) + " fails simple/regular/connected";
    }
  }
  return "";
}

std::string RoundTrips(int max_n) {
  for (int n = 4; n <= max_n; ++n) {
    for (const DisjointPair& p : EnumerateDisjointPairs(n)) {
      const Layout l = PairToLayout(p);
      if (!(LayoutToPair(l) == p)) return "round trip fails at " + p.Encode();
    }
  }
  return "";
}

std::string Census(int max_n, const CountTable& table) {
  for (int n = 2; n <= max_n; ++n) {
    if (!VerifyAgainstBruteforce(n, table).match) {
      return "census mismatch at n=" + std::to_string(n);
    }
  }
  return "";
}

// [x^n y^k] of H(T(x), y) + T(x^2) y^2 / 2 + x y against t_{n,k}, by direct
// polynomial arithmetic on truncated series.
std::string GfIdentity(const CountTable& table) {
  const int N = table.max_n();
  std::vector<BigInt> t(N + 1, 0);
  for (int n = 1; n <= N; ++n) t[n] = table.t(n);
  auto mul = [N](const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> c(N + 1, 0);
    for (int i = 0; i <= N; ++i) {
      for (int j = 0; i + j <= N; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
  };
  std::vector<BigInt> power = t;
  for (int k = 2; k <= N; ++k) {
    power = mul(power, t);
    for (int n = k; n <= N; ++n) {
      BigInt twice = k == 2 ? power[n] : 2 * table.h(k) * power[n];
      if (k == 2 && n % 2 == 0) twice += t[n / 2];
      if (twice != 2 * table.t_nk(n, k)) {
        return "mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k);
      }
    }
  }
  return "";
}

std::string RotationIso(int lo, int hi) {
  for (int n = lo; n <= hi; ++n) {
    if (!RotationGraphIsomorphic(n).ok()) return "fails at size " + std::to_string(n);
  }
  return "";
}

}  // namespace

bool RunVerify(const std::string& level, const std::filesystem::path& cache_dir,
               std::ostream& os) {
  const bool full = level == "full";
  std::vector<Check> checks;
  std::optional<CountTable> table;
  checks.push_back({"count_cache", [&]() -> std::string {
                      const auto path = cache_dir / "counts-8.txt";
                      if (std::filesystem::exists(path)) {
                        std::ifstream in(path);
                        table = CountTable::Read(in);
                        const CountTable fresh = CountTable::Compute(8);
                        for (int n = 1; n <= 8; ++n) {
                          if (table->t(n) != fresh.t(n)) return "cached t disagrees";
                        }
                      } else {
                        table = CountTable::Compute(8);
                      }
                      return "";
                    }});
  checks.push_back({"gf_identity", [&] { return GfIdentity(table ? *table : CountTable::Compute(8)); }});
  checks.push_back({"flip_involution", [&] { return FlipInvolution(full ? 7 : 6); }});
  checks.push_back({"flip_graph_structure", [&] { return Regularity(full ? 8 : 7); }});
  checks.push_back({"duality_round_trip", [&] { return RoundTrips(full ? 8 : 6); }});
  checks.push_back({"rotation_isomorphism", [&] { return RotationIso(4, full ? 7 : 5); }});
  checks.push_back({"census", [&] {
                      return Census(full ? 6 : 5, table ? *table : CountTable::Compute(8));
                    }});
  bool all = true;
  for (const Check& c : checks) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    nlohmann::json j{{"check", c.name}, {"pass", detail.empty()}, {"seconds", secs}};
    if (!detail.empty()) j["detail"] = detail;
    os << j.dump() << '\n' << std::flush;
    all = all && detail.empty();
  }
  os << nlohmann::json{{"verdict", all ? "pass" : "fail"}, {"level", full ? "full" : "quick"}}.dump()
     << '\n';
  return all;
}

}  // namespace tangle::cli
