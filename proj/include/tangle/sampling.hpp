#pragma once

// Uniform random planar tanglegrams of a given size: choose the size k of
// the irreducible core, the sizes of the blocks substituted into it, an
// irreducible layout of size k, and the blocks recursively.

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tangle/counting.hpp"
#include "tangle/polygon.hpp"
#include "tangle/rng.hpp"
#include "tangle/tanglegram.hpp"

namespace tangle {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kDefaultExactIrreducibleCap = 10;

enum class SampleMode { kExact, kMcmc };

struct SamplerConfig {
  std::uint64_t seed = 0;
  SampleMode mode = SampleMode::kExact;
  // Irreducible layouts of size <= this are drawn exactly.
  int exact_irreducible_cap = kDefaultExactIrreducibleCap;
  // Walk length for MCMC layout draws; negative = not supplied.
  long long mcmc_burn_in = -1;
  bool mcmc_random_start = false;
};

struct SampleTrace {
  int n = 0;
  int chosen_k = 0;
  std::vector<int> composition;
  bool duplicate = false;  // k = 2 with both blocks the same draw
  std::string layout;
  bool exact = true;
  std::vector<SampleTrace> children;

  std::string ToJson() const;
};

struct Sample {
  Tanglegram tanglegram;
  SampleTrace trace;
  bool exact = true;
};

template <class T>
struct Weighted {
  T value;
  BigInt weight;
};

// Index drawn with probability weight / total, by a uniform integer below
// the exact total.
template <class T>
const T& DrawWeighted(const std::vector<Weighted<T>>& items, Rng& rng) {
  BigInt total = 0;
  for (const auto& item : items) total += item.weight;
  BigInt r = rng.Below(total);
  for (const auto& item : items) {
    if (r < item.weight) return item.value;
    r -= item.weight;
  }
  return items.back().value;
}

// (k, t_{n,k}) for 2 <= k <= n.
std::vector<Weighted<int>> KWeights(int n, const CountTable& tables);
// First part m of a composition of n into `parts` parts, weight
// t_m [x^{n-m}] T^{parts-1}.
std::vector<Weighted<int>> FirstPartWeights(int n, int parts, const CountTable& tables);

struct PairBranch {
  int first = 0;
  int second = 0;
  bool duplicate = false;
};
// Ordered sizes (a, n-a) with weight t_a t_{n-a}, and for even n the
// duplicate outcome with weight t_{n/2}; the total is 2 c_{n,2}.
std::vector<Weighted<PairBranch>> PairBranchWeights(int n, const CountTable& tables);

int SampleK(int n, const CountTable& tables, Rng& rng);
std::vector<int> SampleComposition(int n, int k, const CountTable& tables, Rng& rng);
PairBranch SamplePairBranchK2(int n, const CountTable& tables, Rng& rng);

// Uniform over the irreducible planar layouts of size k.
Layout SampleIrreducibleLayoutExact(int k, Rng& rng,
                                    int cap = kDefaultExactIrreducibleCap);
// Uniform among triangulations of t's polygon sharing no diagonal with t.
Triangulation SampleDisjointTriangulation(const Triangulation& t, Rng& rng);

DisjointPair RandomWalkStep(const DisjointPair& p, Rng& rng);
// Walk of `burn_in` steps from the pair (fan at 1, fan at k+1) of the
// (k+1)-gon, or a random rotation of it. Never exact.
Layout SampleIrreducibleLayoutMcmc(int k, long long burn_in, Rng& rng,
                                   bool random_start = false);

Sample SamplePlanarTanglegram(int n, const SamplerConfig& cfg, const CountTable& tables);
Sample SamplePlanarTanglegram(int n, const SamplerConfig& cfg, const CountTable& tables,
                              Rng& rng);

// Every history of the exact sampler at size n with its exact probability,
// grouped by canonical code of the output.
struct ExactExpansion {
  std::map<std::string, Rational> probability;
  std::map<std::string, std::vector<Rational>> histories;
};
ExactExpansion ExpandExactSampler(int n, const CountTable& tables);

struct ChiSquareResult {
  double statistic = 0;
  int dof = 0;
  double critical = 0;
  double p_value = 0;
  bool pass = false;
};
// Pearson test against the uniform distribution on `support`. Throws
// kUnknownCategory for observations outside it.
ChiSquareResult ChiSquareUniformity(const std::map<std::string, long long>& observed,
                                    const std::vector<std::string>& support,
                                    double significance = 0.01);

}  // namespace tangle
