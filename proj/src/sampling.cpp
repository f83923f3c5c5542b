#include "tangle/sampling.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <functional>
#include <mutex>

#include "json.hpp"
#include "tangle/duality.hpp"
#include "tangle/error.hpp"

namespace tangle {

namespace {

const Presentation& UnitPresentation(int n) {
  static const Presentation one = Presentation::Parse("o|o|1");
  static const Presentation two = Presentation::Parse("(oo)|(oo)|1,2");
  return n == 1 ? one : two;
}

const Layout& CherryLayout() {
  static const Layout cherry = Layout::Parse("(oo)|(oo)");
  return cherry;
}

void CheckTables(int n, const CountTable& tables) {
  if (n > tables.max_n()) {
    throw Error(ErrorCode::kTablesMissing, "count tables cover n <= " +
                                               std::to_string(tables.max_n()) + ", need " +
                                               std::to_string(n));
  }
}

struct TriangulationWeights {
  std::vector<Triangulation> triangulations;
  std::vector<Weighted<int>> weights;
};

// Triangulations of the (k+1)-gon weighted by how many partners they have.
const TriangulationWeights& FirstSideWeights(int k) {
  static std::mutex mu;
  static std::map<int, TriangulationWeights> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  TriangulationWeights w;
  w.triangulations = EnumerateTriangulations(k + 1);
  for (int i = 0; i < static_cast<int>(w.triangulations.size()); ++i) {
    w.weights.push_back({i, BigInt(CountDisjointFrom(w.triangulations[i]))});
  }
  return cache.emplace(k, std::move(w)).first->second;
}

Presentation SampleRec(int n, const SamplerConfig& cfg, const CountTable& tables, Rng& rng,
                       SampleTrace& trace) {
  trace.n = n;
  if (n <= 2) {
    trace.chosen_k = n;
    trace.composition.assign(n, 1);
    return UnitPresentation(n);
  }
  const int k = SampleK(n, tables, rng);
  trace.chosen_k = k;
  Layout layout;
  std::vector<Presentation> blocks;
  if (k == 2) {
    const PairBranch branch = SamplePairBranchK2(n, tables, rng);
    trace.duplicate = branch.duplicate;
    trace.composition = {branch.first, branch.second};
    layout = CherryLayout();
    trace.children.resize(branch.duplicate ? 1 : 2);
    Rng first = rng.Child(0);
    blocks.push_back(SampleRec(branch.first, cfg, tables, first, trace.children[0]));
    if (branch.duplicate) {
      blocks.push_back(blocks[0]);
    } else {
      Rng second = rng.Child(1);
      blocks.push_back(SampleRec(branch.second, cfg, tables, second, trace.children[1]));
    }
  } else {
    trace.composition = SampleComposition(n, k, tables, rng);
    const bool exact = cfg.mode == SampleMode::kExact && k <= cfg.exact_irreducible_cap;
    if (exact) {
      layout = SampleIrreducibleLayoutExact(k, rng, cfg.exact_irreducible_cap);
    } else {
      if (cfg.mcmc_burn_in < 0) {
        throw Error(ErrorCode::kCapExceeded,
                    "irreducible size " + std::to_string(k) +
                        " is above the exact cap; supply an MCMC burn-in");
      }
      layout = SampleIrreducibleLayoutMcmc(k, cfg.mcmc_burn_in, rng, cfg.mcmc_random_start);
      trace.exact = false;
    }
    trace.children.resize(k);
    for (int i = 0; i < k; ++i) {
      Rng child = rng.Child(i);
      blocks.push_back(SampleRec(trace.composition[i], cfg, tables, child, trace.children[i]));
    }
  }
  trace.layout = layout.Encode();
  for (const auto& c : trace.children) trace.exact = trace.exact && c.exact;
  return Compose(layout.AsPresentation(), blocks);
}

nlohmann::json TraceJson(const SampleTrace& t) {
  nlohmann::json j;
  j["n"] = t.n;
  j["k"] = t.chosen_k;
  j["composition"] = t.composition;
  if (t.duplicate) j["duplicate"] = true;
  if (!t.layout.empty()) j["layout"] = t.layout;
  j["exact"] = t.exact;
  if (!t.children.empty()) {
    j["children"] = nlohmann::json::array();
    for (const auto& c : t.children) j["children"].push_back(TraceJson(c));
  }
  return j;
}

}  // namespace

std::string SampleTrace::ToJson() const { return TraceJson(*this).dump(); }

std::vector<Weighted<int>> KWeights(int n, const CountTable& tables) {
  CheckTables(n, tables);
  std::vector<Weighted<int>> out;
  for (int k = 2; k <= n; ++k) out.push_back({k, tables.t_nk(n, k)});
  return out;
}

std::vector<Weighted<int>> FirstPartWeights(int n, int parts, const CountTable& tables) {
  CheckTables(n, tables);
  std::vector<Weighted<int>> out;
  for (int m = 1; m <= n - parts + 1; ++m) {
    BigInt w = tables.t(m) * tables.conv(parts - 1, n - m);
    if (w != 0) out.push_back({m, std::move(w)});
  }
  return out;
}

std::vector<Weighted<PairBranch>> PairBranchWeights(int n, const CountTable& tables) {
  CheckTables(n, tables);
  std::vector<Weighted<PairBranch>> out;
  if (n % 2 == 0) out.push_back({{n / 2, n / 2, true}, tables.t(n / 2)});
  for (int a = 1; a < n; ++a) out.push_back({{a, n - a, false}, tables.t(a) * tables.t(n - a)});
  return out;
}

int SampleK(int n, const CountTable& tables, Rng& rng) {
  if (n < 3) throw Error(ErrorCode::kOutOfRange, "choosing k needs n >= 3");
  return DrawWeighted(KWeights(n, tables), rng);
}

std::vector<int> SampleComposition(int n, int k, const CountTable& tables, Rng& rng) {
  CheckTables(n, tables);
  std::vector<int> parts;
  int rest = n;
  for (int left = k; left > 1; --left) {
    const int m = DrawWeighted(FirstPartWeights(rest, left, tables), rng);
    parts.push_back(m);
    rest -= m;
  }
  parts.push_back(rest);
  return parts;
}

PairBranch SamplePairBranchK2(int n, const CountTable& tables, Rng& rng) {
  return DrawWeighted(PairBranchWeights(n, tables), rng);
}

Triangulation SampleDisjointTriangulation(const Triangulation& t, Rng& rng) {
  const int n = t.n();
  auto allowed = [&](int i, int j) {
    return j - i == 1 || (i == 1 && j == n) || !t.Contains(Diagonal(i, j));
  };
  std::vector<std::vector<BigInt>> count(n + 1, std::vector<BigInt>(n + 1, 0));
  for (int i = 1; i < n; ++i) count[i][i + 1] = 1;
  for (int len = 2; len < n; ++len) {
    for (int i = 1; i + len <= n; ++i) {
      const int j = i + len;
      BigInt sum = 0;
      for (int m = i + 1; m < j; ++m) {
        if (allowed(i, m) && allowed(m, j)) sum += count[i][m] * count[m][j];
      }
      count[i][j] = sum;
    }
  }
  if (count[1][n] == 0) {
    throw Error(ErrorCode::kNotDisjoint, "no triangulation avoids " + t.Encode());
  }
  std::vector<Diagonal> out;
  std::function<void(int, int)> fill = [&](int i, int j) {
    if (j - i < 2) return;
    std::vector<Weighted<int>> apex;
    for (int m = i + 1; m < j; ++m) {
      if (allowed(i, m) && allowed(m, j) && count[i][m] * count[m][j] != 0) {
        apex.push_back({m, count[i][m] * count[m][j]});
      }
    }
    const int m = DrawWeighted(apex, rng);
    if (m - i >= 2) out.emplace_back(i, m);
    if (j - m >= 2) out.emplace_back(m, j);
    fill(i, m);
    fill(m, j);
  };
  fill(1, n);
  return Triangulation(n, std::move(out));
}

Layout SampleIrreducibleLayoutExact(int k, Rng& rng, int cap) {
  if (k < 2) throw Error(ErrorCode::kOutOfRange, "irreducible layouts have size >= 2");
  if (k == 2) return CherryLayout();
  if (k > cap) {
    throw Error(ErrorCode::kCapExceeded, "exact irreducible layouts need k <= " +
                                             std::to_string(cap) + ", got " + std::to_string(k));
  }
  const TriangulationWeights& w = FirstSideWeights(k);
  const Triangulation& first = w.triangulations[DrawWeighted(w.weights, rng)];
  return PairToLayout(DisjointPair(first, SampleDisjointTriangulation(first, rng)));
}

DisjointPair RandomWalkStep(const DisjointPair& p, Rng& rng) {
  const int per_side = p.n() - 3;
  if (per_side <= 0) return p;
  const int index = static_cast<int>(rng.Below(static_cast<std::uint64_t>(2 * per_side)));
  const int side = index < per_side ? 1 : 2;
  const Diagonal d = p.side(side).diagonals()[index % per_side];
  return FlipPair(p, FlipMove{side, d}).result;
}

Layout SampleIrreducibleLayoutMcmc(int k, long long burn_in, Rng& rng, bool random_start) {
  if (k < 3) throw Error(ErrorCode::kOutOfRange, "MCMC layouts need k >= 3");
  const int n = k + 1;
  Triangulation a = Fan(n, 1);
  Triangulation b = Fan(n, n);
  if (random_start) {
    const int shift = static_cast<int>(rng.Below(static_cast<std::uint64_t>(n)));
    a = Fan(n, 1 + shift);
    b = Fan(n, (n - 1 + shift) % n + 1);
  }
  DisjointPair p(a, b);
  for (long long s = 0; s < burn_in; ++s) p = RandomWalkStep(p, rng);
  return PairToLayout(p);
}

Sample SamplePlanarTanglegram(int n, const SamplerConfig& cfg, const CountTable& tables,
                              Rng& rng) {
  if (n < 1) throw Error(ErrorCode::kOutOfRange, "size must be positive");
  CheckTables(n, tables);
  Sample out;
  const Presentation p = SampleRec(n, cfg, tables, rng, out.trace);
  out.tanglegram = Tanglegram::Canonical(p);
  out.exact = out.trace.exact;
  return out;
}

Sample SamplePlanarTanglegram(int n, const SamplerConfig& cfg, const CountTable& tables) {
  Rng rng(cfg.seed);
  return SamplePlanarTanglegram(n, cfg, tables, rng);
}

namespace {

struct Outcome {
  Presentation presentation;
  Rational probability;
  std::string history;
};

using BlockDistribution = std::vector<std::pair<Presentation, Rational>>;

// Ordered block tuples with product probabilities.
void ForEachBlockTuple(const std::vector<const BlockDistribution*>& dists,
                       const std::function<void(const std::vector<Presentation>&,
                                                const std::vector<std::string>&,
                                                const Rational&)>& visit) {
  std::vector<Presentation> chosen;
  std::vector<std::string> codes;
  std::function<void(std::size_t, Rational)> rec = [&](std::size_t i, Rational prob) {
    if (i == dists.size()) {
      visit(chosen, codes, prob);
      return;
    }
    for (const auto& [p, q] : *dists[i]) {
      chosen.push_back(p);
      codes.push_back(Tanglegram::Canonical(p).code());
      rec(i + 1, prob * q);
      chosen.pop_back();
      codes.pop_back();
    }
  };
  rec(0, Rational(1));
}

Rational Share(const BigInt& w, const BigInt& total) { return Rational(w, total); }

template <class T>
BigInt Total(const std::vector<Weighted<T>>& items) {
  BigInt total = 0;
  for (const auto& item : items) total += item.weight;
  return total;
}

// Compositions of n into `parts` parts with the sampler's probabilities.
void ForEachComposition(int n, int parts, const CountTable& tables,
                        const std::function<void(const std::vector<int>&, const Rational&)>& visit) {
  std::vector<int> chosen;
  std::function<void(int, int, Rational)> rec = [&](int rest, int left, Rational prob) {
    if (left == 1) {
      chosen.push_back(rest);
      visit(chosen, prob);
      chosen.pop_back();
      return;
    }
    const auto weights = FirstPartWeights(rest, left, tables);
    const BigInt total = Total(weights);
    for (const auto& w : weights) {
      chosen.push_back(w.value);
      rec(rest - w.value, left - 1, prob * Share(w.weight, total));
      chosen.pop_back();
    }
  };
  rec(n, parts, Rational(1));
}

}  // namespace

ExactExpansion ExpandExactSampler(int n, const CountTable& tables) {
  CheckTables(n, tables);
  // Output distribution by size, as (presentation, probability) per code.
  std::map<int, BlockDistribution> by_size;
  ExactExpansion result;
  for (int m = 1; m <= n; ++m) {
    std::vector<Outcome> outcomes;
    if (m <= 2) {
      outcomes.push_back({UnitPresentation(m), Rational(1), "unit"});
    } else {
      const auto ks = KWeights(m, tables);
      const BigInt k_total = Total(ks);
      for (const auto& kw : ks) {
        const Rational pk = Share(kw.weight, k_total);
        if (kw.value == 2) {
          const auto branches = PairBranchWeights(m, tables);
          const BigInt b_total = Total(branches);
          for (const auto& bw : branches) {
            const Rational pb = pk * Share(bw.weight, b_total);
            const PairBranch& b = bw.value;
            if (b.duplicate) {
              for (const auto& [p, q] : by_size[b.first]) {
                outcomes.push_back({Compose(CherryLayout().AsPresentation(), {p, p}), pb * q,
                                    "k2 dup " + Tanglegram::Canonical(p).code()});
              }
              continue;
            }
            ForEachBlockTuple(
                {&by_size[b.first], &by_size[b.second]},
                [&](const std::vector<Presentation>& blocks, const std::vector<std::string>& codes,
                    const Rational& q) {
                  outcomes.push_back({Compose(CherryLayout().AsPresentation(), blocks), pb * q,
                                      "k2 " + codes[0] + " " + codes[1]});
                });
          }
          continue;
        }
        const int k = kw.value;
        const auto layouts = EnumerateIrreducibleLayouts(k);
        const Rational per_layout(1, static_cast<long long>(layouts.size()));
        ForEachComposition(m, k, tables, [&](const std::vector<int>& comp, const Rational& pc) {
          std::vector<const BlockDistribution*> dists;
          for (int a : comp) dists.push_back(&by_size[a]);
          for (const Layout& layout : layouts) {
            const Presentation core = layout.AsPresentation();
            ForEachBlockTuple(dists, [&](const std::vector<Presentation>& blocks,
                                         const std::vector<std::string>& codes,
                                         const Rational& q) {
              std::string h = "k" + std::to_string(k) + " " + layout.Encode();
              for (const auto& c : codes) h += " " + c;
              outcomes.push_back({Compose(core, blocks), pk * pc * per_layout * q, h});
            });
          }
        });
      }
    }
    std::map<std::string, std::pair<Presentation, Rational>> merged;
    for (const auto& o : outcomes) {
      const std::string code = Tanglegram::Canonical(o.presentation).code();
      auto [it, fresh] = merged.try_emplace(code, o.presentation, Rational(0));
      it->second.second += o.probability;
      if (m == n) {
        result.probability[code] += o.probability;
        result.histories[code].push_back(o.probability);
      }
    }
    for (auto& [code, pq] : merged) by_size[m].push_back(pq);
  }
  return result;
}

ChiSquareResult ChiSquareUniformity(const std::map<std::string, long long>& observed,
                                    const std::vector<std::string>& support,
                                    double significance) {
  if (support.size() < 2) throw Error(ErrorCode::kOutOfRange, "need at least two categories");
  std::map<std::string, long long> counts;
  for (const auto& s : support) counts[s] = 0;
  long long total = 0;
  for (const auto& [key, c] : observed) {
    auto it = counts.find(key);
    if (it == counts.end()) {
      throw Error(ErrorCode::kUnknownCategory, "'" + key + "' is outside the support");
    }
    it->second += c;
    total += c;
  }
  if (total == 0) throw Error(ErrorCode::kOutOfRange, "no observations");
  ChiSquareResult r;
  const double expected = static_cast<double>(total) / static_cast<double>(counts.size());
  for (const auto& [key, c] : counts) {
    const double diff = static_cast<double>(c) - expected;
    r.statistic += diff * diff / expected;
  }
  r.dof = static_cast<int>(counts.size()) - 1;
  boost::math::chi_squared dist(r.dof);
  r.critical = boost::math::quantile(boost::math::complement(dist, significance));
  r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
  r.pass = r.statistic <= r.critical;
  return r;
}

}  // namespace tangle
