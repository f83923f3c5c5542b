#include "tangle/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include "tangle/error.hpp"

namespace tangle {

namespace {

using boost::multiprecision::cpp_int;

int RegularDegree(const AdjacencyList& adj) {
  const int degree = adj.empty() ? 0 : static_cast<int>(adj[0].size());
  for (const auto& row : adj) {
    if (static_cast<int>(row.size()) != degree) {
      throw Error(ErrorCode::kOutOfRange, "walk diagnostics need a regular graph");
    }
  }
  if (degree == 0) throw Error(ErrorCode::kOutOfRange, "graph has no edges");
  return degree;
}

// Worst TV seen along one start's curve, in double precision.
std::vector<double> TvCurveDouble(const AdjacencyList& adj, int start, int min_steps) {
  const std::size_t size = adj.size();
  const double uniform = 1.0 / static_cast<double>(size);
  const double step_weight = 1.0 / static_cast<double>(adj[0].size());
  std::vector<double> dist(size, 0.0), next(size);
  dist[start] = 1.0;
  std::vector<double> curve;
  for (int t = 0;; ++t) {
    double tv = 0;
    for (double p : dist) tv += std::abs(p - uniform);
    curve.push_back(0.5 * tv);
    if (curve.back() < 0.25 && t >= min_steps) return curve;
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t u = 0; u < size; ++u) {
      if (dist[u] == 0) continue;
      const double share = dist[u] * step_weight;
      for (int v : adj[u]) next[v] += share;
    }
    dist.swap(next);
  }
}

// Walk counts are integers; TV < 1/4 iff sum |count * V - D| < D * V / 2 with
// D = degree^t.
std::vector<double> TvCurveExact(const AdjacencyList& adj, int start, int min_steps) {
  const std::size_t size = adj.size();
  const cpp_int vertices = static_cast<unsigned>(size);
  std::vector<cpp_int> count(size, 0), next(size);
  count[start] = 1;
  cpp_int walks = 1;
  std::vector<double> curve;
  for (int t = 0;; ++t) {
    cpp_int deviation = 0;
    for (const cpp_int& c : count) {
      const cpp_int diff = c * vertices - walks;
      deviation += diff < 0 ? cpp_int(-diff) : diff;
    }
    // 2 * deviation < D * V  <=>  TV < 1/4
    const bool below = 2 * deviation < walks * vertices;
    curve.push_back(static_cast<double>(deviation) / (2.0 * static_cast<double>(walks) *
                                                      static_cast<double>(size)));
    if (below && t >= min_steps) return curve;
    for (auto& c : next) c = 0;
    for (std::size_t u = 0; u < size; ++u) {
      if (count[u] == 0) continue;
      for (int v : adj[u]) next[v] += count[u];
    }
    count.swap(next);
    walks *= static_cast<unsigned>(adj[0].size());
  }
}

std::string FormatDouble(double v, int digits = 10) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

}  // namespace

std::vector<double> TransitionEigenvalues(const AdjacencyList& adj) {
  const int degree = RegularDegree(adj);
  const auto size = static_cast<Eigen::Index>(adj.size());
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(size, size);
  for (Eigen::Index u = 0; u < size; ++u) {
    for (int v : adj[u]) p(u, v) += 1.0 / degree;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(p, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

ExtremeEigenvalues LanczosExtremes(const AdjacencyList& adj, int max_steps, double tol) {
  const int degree = RegularDegree(adj);
  const auto size = static_cast<Eigen::Index>(adj.size());
  auto project = [](Eigen::VectorXd& v) { v.array() -= v.mean(); };
  auto apply = [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    for (Eigen::Index u = 0; u < size; ++u) {
      double sum = 0;
      for (int v : adj[u]) sum += x[v];
      y[u] = sum / degree;
    }
  };

  std::mt19937_64 gen(20240917);
  std::normal_distribution<double> normal;
  Eigen::VectorXd q(size);
  for (Eigen::Index i = 0; i < size; ++i) q[i] = normal(gen);
  project(q);
  q.normalize();

  const int steps_cap = static_cast<int>(std::min<Eigen::Index>(max_steps, size - 1));
  Eigen::MatrixXd basis(size, steps_cap);
  std::vector<double> alpha, beta;
  Eigen::VectorXd w(size);
  ExtremeEigenvalues result;
  double last_hi = 2, last_lo = 2;
  for (int k = 0; k < steps_cap; ++k) {
    basis.col(k) = q;
    apply(q, w);
    alpha.push_back(q.dot(w));
    w -= alpha.back() * q;
    if (k > 0) w -= beta.back() * basis.col(k - 1);
    project(w);
    for (int pass = 0; pass < 2; ++pass) {
      const Eigen::VectorXd coeffs = basis.leftCols(k + 1).transpose() * w;
      w -= basis.leftCols(k + 1) * coeffs;
    }
    const double b = w.norm();

    const int m = k + 1;
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      tri(i, i) = alpha[i];
      if (i + 1 < m) tri(i, i + 1) = tri(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(tri, Eigen::EigenvaluesOnly);
    const double hi = small.eigenvalues()(m - 1);
    const double lo = small.eigenvalues()(0);
    result = {hi, lo, m};
    if (b < 1e-12 || (m > 10 && std::abs(hi - last_hi) < tol && std::abs(lo - last_lo) < tol)) {
      break;
    }
    last_hi = hi;
    last_lo = lo;
    beta.push_back(b);
    q = w / b;
  }
  return result;
}

std::vector<double> WorstStartTvCurve(const AdjacencyList& adj, const std::vector<int>& starts,
                                      bool exact) {
  RegularDegree(adj);
  auto run = [&](int start, int min_steps) {
    return exact ? TvCurveExact(adj, start, min_steps) : TvCurveDouble(adj, start, min_steps);
  };
  std::vector<std::vector<double>> curves;
  curves.reserve(starts.size());
  std::size_t horizon = 0;
  for (int s : starts) {
    curves.push_back(run(s, static_cast<int>(horizon) - 1));
    horizon = std::max(horizon, curves.back().size());
  }
  std::vector<double> worst(horizon, 0.0);
  for (std::size_t i = 0; i < starts.size(); ++i) {
    if (curves[i].size() < horizon) curves[i] = run(starts[i], static_cast<int>(horizon) - 1);
    for (std::size_t t = 0; t < horizon; ++t) worst[t] = std::max(worst[t], curves[i][t]);
  }
  return worst;
}

SpectralReport ComputeSpectralReport(const FlipGraph& g, const SpectralOptions& options) {
  if (g.n() < 5) throw Error(ErrorCode::kOutOfRange, "spectral report needs n >= 5");
  SpectralReport report;
  report.n = g.n();
  report.vertex_count = g.size();
  report.degree = RegularDegree(g.adjacency());

  if (g.n() <= options.dense_cap) {
    const auto values = TransitionEigenvalues(g.adjacency());
    report.eigen_method = "dense";
    report.sigma2 = values[values.size() - 2];
    report.lambda_min = values.front();
    constexpr double kSame = 1e-8;
    for (std::size_t i = values.size() - 1; i-- > 0;) {
      if (report.sigma2 - values[i] < kSame) {
        ++report.sigma2_multiplicity;
      } else {
        report.next_distinct = values[i];
        break;
      }
    }
  } else {
    const auto ext = LanczosExtremes(g.adjacency(), options.lanczos_max_steps, options.lanczos_tol);
    report.eigen_method = "lanczos";
    report.sigma2 = ext.second_largest;
    report.lambda_min = ext.smallest;
  }
  report.sigma2_abs = std::max(report.sigma2, std::abs(report.lambda_min));

  if (g.n() > options.tv_cap) {
    report.tv_method = "skipped";
    return report;
  }
  std::vector<int> starts;
  if (options.use_symmetry) {
    for (const auto& [rep, size] : g.OrbitRepresentatives()) starts.push_back(rep);
  } else {
    starts.resize(g.size());
    for (int i = 0; i < g.size(); ++i) starts[i] = i;
  }
  const bool exact = g.n() <= options.exact_tv_cap;
  report.tv_method = exact ? "exact" : "double";
  const auto worst = WorstStartTvCurve(g.adjacency(), starts, exact);
  report.tv_iterations = static_cast<int>(worst.size()) - 1;
  report.tv_at_iterations = worst.back();
  report.tv_before = worst.size() >= 2 ? worst[worst.size() - 2] : 1.0;
  return report;
}

std::string SpectralReport::ToJson() const {
  std::ostringstream os;
  os << "{\"n\":" << n << ",\"vertex_count\":" << vertex_count << ",\"degree\":" << degree
     << ",\"sigma2\":" << FormatDouble(sigma2) << ",\"sigma2_abs\":" << FormatDouble(sigma2_abs)
     << ",\"lambda_min\":" << FormatDouble(lambda_min);
  if (sigma2_multiplicity > 0) {
    os << ",\"sigma2_multiplicity\":" << sigma2_multiplicity
       << ",\"next_distinct\":" << FormatDouble(next_distinct);
  }
  os << ",\"tv_iterations\":" << tv_iterations
     << ",\"tv_at_iterations\":" << FormatDouble(tv_at_iterations)
     << ",\"tv_before\":" << FormatDouble(tv_before) << ",\"eigen_method\":\"" << eigen_method
     << "\",\"tv_method\":\"" << tv_method << "\"}";
  return os.str();
}

std::string SpectralReport::CsvHeader() {
  return "n,vertices,degree,diameter,sigma2,sigma2_abs,tv_iterations";
}

std::string SpectralReport::ToCsv(int diameter) const {
  std::ostringstream os;
  os << n << ',' << vertex_count << ',' << degree << ',' << diameter << ','
     << FormatDouble(sigma2) << ',' << FormatDouble(sigma2_abs) << ',' << tv_iterations;
  return os.str();
}

}  // namespace tangle
