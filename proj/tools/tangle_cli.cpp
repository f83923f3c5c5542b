#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "json.hpp"
#include "tangle/counting.hpp"
#include "tangle/duality.hpp"
#include "tangle/error.hpp"
#include "tangle/flip_graph.hpp"
#include "tangle/rng.hpp"
#include "tangle/sampling.hpp"
#include "tangle/spectral.hpp"
#include "tangle/tanglegram.hpp"
#include "verify.hpp"

namespace {

using namespace tangle;
using nlohmann::json;

std::filesystem::path DefaultCacheDir() {
  if (const char* env = std::getenv("TANGLE_CACHE_DIR")) return env;
  return ".tangle-cache";
}

CountTable LoadTables(const std::filesystem::path& cache_dir, int max_n,
                      const std::string& import_h) {
  if (import_h.empty()) return CountTable::LoadOrCompute(cache_dir, max_n);
  std::ifstream in(import_h);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + import_h);
  return CountTable::FromH(ImportH(in, max_n), max_n);
}

int CmdCount(int max_n, const std::string& format, const std::filesystem::path& cache_dir,
             const std::string& import_h) {
  const CountTable table = LoadTables(cache_dir, max_n, import_h);
  if (format == "json") {
    std::cout << table.ToJson() << '\n';
  } else {
    std::cout << table.ToCsv();
  }
  return 0;
}

int CmdSample(int size, long long count, std::uint64_t seed, const std::string& mode,
              long long burn_in, int exact_cap, bool trace, bool random_start,
              const std::filesystem::path& cache_dir) {
  SamplerConfig cfg;
  cfg.seed = seed;
  cfg.mode = mode == "mcmc" ? SampleMode::kMcmc : SampleMode::kExact;
  cfg.mcmc_burn_in = burn_in;
  cfg.exact_irreducible_cap = exact_cap;
  cfg.mcmc_random_start = random_start;
  if (cfg.mode == SampleMode::kMcmc && burn_in < 0) {
    throw Error(ErrorCode::kOutOfRange, "--mode mcmc needs --burn-in");
  }
  const CountTable table =
      CountTable::LoadOrCompute(cache_dir, std::max(size, std::min(8, kMaxComputedH)));
  Rng root(seed);
  for (long long i = 0; i < count; ++i) {
    Rng rng = root.Child(static_cast<std::uint64_t>(i));
    const Sample s = SamplePlanarTanglegram(size, cfg, table, rng);
    std::cout << s.tanglegram.code();
    if (!s.exact) std::cout << "\tapproximate";
    std::cout << '\n';
    if (trace) std::cout << s.trace.ToJson() << '\n';
  }
  return 0;
}

int CmdWalk(int n, long long steps, std::uint64_t seed, long long emit_every,
            const std::string& start) {
  Rng rng(seed);
  DisjointPair p = start.empty() ? DisjointPair(Fan(n, 1), Fan(n, n)) : DisjointPair::Parse(start);
  if (p.n() != n) throw Error(ErrorCode::kSizeMismatch, "start pair is not on the n-gon");
  std::cout << 0 << '\t' << p.Encode() << '\n';
  for (long long t = 1; t <= steps; ++t) {
    p = RandomWalkStep(p, rng);
    if (emit_every > 0 && t % emit_every == 0) std::cout << t << '\t' << p.Encode() << '\n';
  }
  return 0;
}

int CmdGraph(int n, const std::string& format, bool diameter, int cap) {
  const FlipGraph g = FlipGraph::Build(n, cap);
  if (format == "dot") {
    g.WriteDot(std::cout);
    return 0;
  }
  const GraphCheck c = CheckStructure(g.adjacency());
  json j{{"n", n},
         {"vertices", g.size()},
         {"edges", g.edge_count()},
         {"simple", c.simple},
         {"regular", c.regular},
         {"degree", c.degree},
         {"components", c.components},
         {"connected", c.components == 1}};
  if (n >= 5) {
    const auto tri = FindTriangle(g);
    j["triangle"] = {g.vertices()[tri[0]].Encode(), g.vertices()[tri[1]].Encode(),
                     g.vertices()[tri[2]].Encode()};
  }
  if (diameter && c.components == 1) {
    const int d = DiameterBySymmetry(g);
    j["diameter"] = d;
    j["diameter_within_4n_minus_16"] = d <= 4 * n - 16;
  }
  std::cout << j.dump(format == "json" ? 2 : -1) << '\n';
  return 0;
}

int CmdSpectra(int from, int to, const std::string& format) {
  if (format == "csv") std::cout << SpectralReport::CsvHeader() << '\n';
  for (int n = from; n <= to; ++n) {
    const FlipGraph g = FlipGraph::Build(n);
    const SpectralReport r = ComputeSpectralReport(g);
    if (format == "csv") {
      std::cout << r.ToCsv(DiameterBySymmetry(g)) << '\n' << std::flush;
    } else {
      std::cout << r.ToJson() << '\n' << std::flush;
    }
  }
  return 0;
}

int CmdConvert(const std::string& layout, const std::string& pair, const std::string& tanglegram) {
  if (!layout.empty()) {
    std::cout << LayoutToPair(Layout::Parse(layout)).Encode() << '\n';
  }
  if (!pair.empty()) {
    std::cout << PairToLayout(DisjointPair::Parse(pair)).Encode() << '\n';
  }
  if (!tanglegram.empty()) {
    const Tanglegram t = Tanglegram::Parse(tanglegram);
    json j{{"canonical", t.code()}, {"size", t.size()}};
    const auto planar = IsPlanar(t);
    j["planar"] = planar.has_value();
    if (planar) {
      j["layout"] = planar->Encode();
      const IrrDecomposition irr = Irr(t);
      j["irr"] = irr.core.code();
      j["irr_size"] = irr.core.size();
    }
    std::cout << j.dump() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar tanglegrams and pairs of disjoint triangulations"};
  app.require_subcommand(1);
  std::string cache_dir = DefaultCacheDir().string();
  app.add_option("--cache-dir", cache_dir, "Directory for count caches (env TANGLE_CACHE_DIR)");

  int count_max_n = 8;
  std::string count_format = "csv";
  std::string import_h;
  auto* count = app.add_subcommand("count", "Counts t_{n,k} by irreducible core size");
  count->add_option("--max-n", count_max_n)->check(CLI::Range(1, 200));
  count->add_option("--format", count_format)->check(CLI::IsMember({"csv", "json"}));
  count->add_option("--import-h", import_h, "File of `h n value` lines for n beyond enumeration");

  int sample_size = 4;
  long long sample_count = 1;
  std::uint64_t seed = 1;
  std::string mode = "exact";
  long long burn_in = -1;
  int exact_cap = kDefaultExactIrreducibleCap;
  bool trace = false;
  bool random_start = false;
  auto* sample = app.add_subcommand("sample", "Uniform planar tanglegrams");
  sample->add_option("--size", sample_size)->required()->check(CLI::Range(1, 200));
  sample->add_option("--count", sample_count)->check(CLI::NonNegativeNumber);
  sample->add_option("--seed", seed);
  sample->add_option("--mode", mode)->check(CLI::IsMember({"exact", "mcmc"}));
  sample->add_option("--burn-in", burn_in);
  sample->add_option("--exact-cap", exact_cap);
  sample->add_flag("--trace", trace, "Emit a JSON trace line after each sample");
  sample->add_flag("--random-start", random_start);

  int walk_n = 6;
  long long steps = 100;
  long long emit_every = 1;
  std::string start;
  auto* walk = app.add_subcommand("walk", "Random walk on D_n");
  walk->add_option("--n", walk_n)->required()->check(CLI::Range(3, kMaxPolygon));
  walk->add_option("--steps", steps)->check(CLI::NonNegativeNumber);
  walk->add_option("--seed", seed);
  walk->add_option("--emit-every", emit_every);
  walk->add_option("--start", start, "Start pair T1|T2 (default: fan at 1, fan at n)");

  int graph_n = 5;
  std::string graph_format = "json";
  bool diameter = false;
  int graph_cap = kDefaultFlipGraphCap;
  auto* graph = app.add_subcommand("graph", "Build D_n and report its structure");
  graph->add_option("--n", graph_n)->required()->check(CLI::Range(3, kMaxPolygon));
  graph->add_option("--export", graph_format)->check(CLI::IsMember({"json", "dot", "line"}));
  graph->add_flag("--diameter", diameter);
  graph->add_option("--cap", graph_cap);

  int spectra_from = 5;
  int spectra_to = 7;
  std::string spectra_format = "csv";
  auto* spectra = app.add_subcommand("spectra", "Second eigenvalue and mixing iterations");
  spectra->add_option("--from", spectra_from)->check(CLI::Range(4, kMaxPolygon));
  spectra->add_option("--to", spectra_to)->check(CLI::Range(4, kMaxPolygon));
  spectra->add_option("--format", spectra_format)->check(CLI::IsMember({"csv", "json"}));

  std::string layout;
  std::string pair;
  std::string tanglegram;
  auto* convert = app.add_subcommand("convert", "Layouts, pairs and canonical codes");
  convert->add_option("--layout", layout, "left|right");
  convert->add_option("--pair", pair, "n:[a-b,...]|n:[a-b,...]");
  convert->add_option("--tanglegram", tanglegram, "left|right|perm");

  std::string level = "quick";
  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));

  CLI11_PARSE(app, argc, argv);
  try {
    if (*count) return CmdCount(count_max_n, count_format, cache_dir, import_h);
    if (*sample) {
      return CmdSample(sample_size, sample_count, seed, mode, burn_in, exact_cap, trace,
                       random_start, cache_dir);
    }
    if (*walk) return CmdWalk(walk_n, steps, seed, emit_every, start);
    if (*graph) return CmdGraph(graph_n, graph_format, diameter, graph_cap);
    if (*spectra) return CmdSpectra(spectra_from, spectra_to, spectra_format);
    if (*convert) return CmdConvert(layout, pair, tanglegram);
    if (*verify) return tangle::cli::RunVerify(level, cache_dir, std::cout) ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error [" << ErrorName(e.code()) << "]: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
