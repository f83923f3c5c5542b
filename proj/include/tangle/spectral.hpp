#pragma once

// Spectrum of the simple random walk on D_n and worst-start total variation
// mixing counts.

#include <string>
#include <vector>

#include "tangle/flip_graph.hpp"

namespace tangle {

struct SpectralOptions {
  // Largest n for the dense symmetric eigensolve; larger graphs use Lanczos.
  int dense_cap = 8;
  // Largest n for which tv_iterations is computed at all.
  int tv_cap = 9;
  // Walk counts are propagated as exact integers up to this n.
  int exact_tv_cap = 6;
  // Use one start per symmetry orbit (TV from a start is orbit-invariant).
  bool use_symmetry = true;
  int lanczos_max_steps = 400;
  double lanczos_tol = 1e-12;
};

struct SpectralReport {
  int n = 0;
  int vertex_count = 0;
  int degree = 0;
  double sigma2 = 0;      // second largest eigenvalue
  double sigma2_abs = 0;  // largest |lambda| over non-principal eigenvalues
  double lambda_min = 0;
  // Dense solve only: copies of sigma2 and the largest eigenvalue below it.
  int sigma2_multiplicity = 0;
  double next_distinct = 0;
  int tv_iterations = 0;  // 0 when not computed
  double tv_at_iterations = 0;  // worst-start TV at tv_iterations
  double tv_before = 0;         // worst-start TV at tv_iterations - 1
  std::string eigen_method;     // "dense" | "lanczos"
  std::string tv_method;        // "exact" | "double" | "skipped"

  std::string ToJson() const;
  static std::string CsvHeader();
  std::string ToCsv(int diameter) const;
};

SpectralReport ComputeSpectralReport(const FlipGraph& g, const SpectralOptions& options = {});

// Sorted eigenvalues of adjacency / degree for a regular graph (dense).
std::vector<double> TransitionEigenvalues(const AdjacencyList& adj);

struct ExtremeEigenvalues {
  double second_largest = 0;
  double smallest = 0;
  int steps = 0;
};
// Lanczos with full reorthogonalization on the complement of the constant
// vector. `adj` must be regular.
ExtremeEigenvalues LanczosExtremes(const AdjacencyList& adj, int max_steps, double tol);

// Worst-start total variation distance from uniform after t steps, for every
// t up to the first value below 1/4 (inclusive). Index t holds TV at time t.
std::vector<double> WorstStartTvCurve(const AdjacencyList& adj, const std::vector<int>& starts,
                                      bool exact);

}  // namespace tangle
