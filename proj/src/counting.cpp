#include "tangle/counting.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "tangle/error.hpp"
#include "tangle/polygon.hpp"
#include "tangle/tanglegram.hpp"

namespace tangle {

namespace {

std::uint64_t Fnv1a(std::string_view text) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string Header(int max_n) {
  return "# tangle-counts v" + std::to_string(kCacheVersion) + " max_n=" + std::to_string(max_n);
}

BigInt ParseBig(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorCode::kParse, "bad integer '" + text + "'");
  }
  return BigInt(text);
}

BigInt ExactDiv(const BigInt& num, const BigInt& den, const std::string& what) {
  if (den == 0 || num % den != 0) {
    throw Error(ErrorCode::kDivisibilityViolation,
                what + ": " + ToString(num) + " is not divisible by " + ToString(den));
  }
  return num / den;
}

}  // namespace

std::string ToString(const BigInt& v) { return v.str(); }

CountTable CountTable::Compute(int max_n) {
  if (max_n < 1) throw Error(ErrorCode::kOutOfRange, "max_n must be positive");
  if (max_n > kMaxComputedH) {
    throw Error(ErrorCode::kCapExceeded,
                "h_n is computed up to n=" + std::to_string(kMaxComputedH) +
                    "; import an h table for max_n=" + std::to_string(max_n));
  }
  std::vector<BigInt> h(max_n + 1);
  if (max_n >= 2) h[2] = 1;
  for (int k = 3; k <= max_n; ++k) {
    h[k] = ExactDiv(BigInt(CountDisjointPairs(k + 1)), 2, "h_" + std::to_string(k));
  }
  return FromH(h, max_n);
}

CountTable CountTable::FromH(const std::vector<BigInt>& h, int max_n) {
  if (max_n < 1) throw Error(ErrorCode::kOutOfRange, "max_n must be positive");
  if (static_cast<int>(h.size()) <= max_n) {
    throw Error(ErrorCode::kMissingH, "need h_k for k <= " + std::to_string(max_n));
  }
  CountTable table;
  table.max_n_ = max_n;
  table.h_.assign(max_n + 1, 0);
  for (int k = 2; k <= max_n; ++k) table.h_[k] = h[k];
  if (max_n >= 2 && table.h_[2] != 1) {
    throw Error(ErrorCode::kMissingH, "h_2 must be 1");
  }
  table.Fill();
  return table;
}

void CountTable::Fill() {
  const int N = max_n_;
  t_.assign(N + 1, 0);
  tnk_.assign(N + 1, std::vector<BigInt>(N + 1, 0));
  conv_.assign(N + 1, std::vector<BigInt>(N + 1, 0));
  conv_[0][0] = 1;
  for (int n = 1; n <= N; ++n) {
    // [x^n] T^j for j >= 2 only involves t_m with m < n.
    for (int j = 2; j <= n; ++j) {
      BigInt sum = 0;
      for (int a = 1; a <= n - j + 1; ++a) sum += t_[a] * conv_[j - 1][n - a];
      conv_[j][n] = sum;
    }
    if (n == 1) {
      t_[1] = 1;
    } else {
      BigInt two = conv_[2][n];
      if (n % 2 == 0) two += t_[n / 2];
      tnk_[n][2] = ExactDiv(two, 2, "t_{" + std::to_string(n) + ",2}");
      BigInt total = tnk_[n][2];
      for (int k = 3; k <= n; ++k) {
        tnk_[n][k] = h_[k] * conv_[k][n];
        total += tnk_[n][k];
      }
      t_[n] = total;
    }
    conv_[1][n] = t_[n];
  }
  for (int n = 2; n <= N; ++n) {
    for (int k = 2; k <= n; ++k) {
      if (h_[k] != 0) c_nk(n, k);
    }
  }
}

void CountTable::CheckN(int n) const {
  if (n < 0) throw Error(ErrorCode::kOutOfRange, "negative size");
  if (n > max_n_) {
    throw Error(ErrorCode::kTablesMissing, "tables cover n <= " + std::to_string(max_n_) +
                                               ", asked for " + std::to_string(n));
  }
}

const BigInt& CountTable::t(int n) const {
  CheckN(n);
  if (n < 1) throw Error(ErrorCode::kOutOfRange, "t_n needs n >= 1");
  return t_[n];
}

const BigInt& CountTable::h(int k) const {
  CheckN(k);
  if (k < 2) throw Error(ErrorCode::kOutOfRange, "h_k needs k >= 2");
  return h_[k];
}

const BigInt& CountTable::t_nk(int n, int k) const {
  CheckN(n);
  if (k < 2 || k > n) throw Error(ErrorCode::kOutOfRange, "t_{n,k} needs 2 <= k <= n");
  return tnk_[n][k];
}

BigInt CountTable::c_nk(int n, int k) const {
  return ExactDiv(t_nk(n, k), h(k),
                  "c_{" + std::to_string(n) + "," + std::to_string(k) + "}");
}

const BigInt& CountTable::conv(int j, int m) const {
  CheckN(m);
  if (j < 0 || j > max_n_) throw Error(ErrorCode::kOutOfRange, "power out of range");
  return conv_[j][m];
}

void CountTable::Write(std::ostream& os) const {
  std::ostringstream body;
  body << Header(max_n_) << '\n';
  for (int k = 2; k <= max_n_; ++k) body << "h " << k << ' ' << h_[k] << '\n';
  for (int n = 1; n <= max_n_; ++n) body << "t " << n << ' ' << t_[n] << '\n';
  for (int n = 2; n <= max_n_; ++n) {
    for (int k = 2; k <= n; ++k) body << "tnk " << n << ' ' << k << ' ' << tnk_[n][k] << '\n';
  }
  const std::string text = body.str();
  os << text << "checksum " << std::hex << std::setw(16) << std::setfill('0') << Fnv1a(text)
     << std::dec << '\n';
}

CountTable CountTable::Read(std::istream& is) {
  std::string text;
  std::string line;
  std::string checksum_line;
  while (std::getline(is, line)) {
    if (line.rfind("checksum ", 0) == 0) {
      checksum_line = line;
      break;
    }
    text += line + '\n';
  }
  std::ostringstream expected;
  expected << "checksum " << std::hex << std::setw(16) << std::setfill('0') << Fnv1a(text);
  if (checksum_line.empty() || checksum_line != expected.str()) {
    throw Error(ErrorCode::kCacheCorrupt, "count cache checksum mismatch");
  }
  std::istringstream in(text);
  std::getline(in, line);
  int max_n = 0;
  const std::string prefix = "# tangle-counts v" + std::to_string(kCacheVersion) + " max_n=";
  if (line.rfind(prefix, 0) != 0) {
    throw Error(ErrorCode::kCacheCorrupt, "stale or unknown count cache header '" + line + "'");
  }
  max_n = std::stoi(line.substr(prefix.size()));
  std::vector<BigInt> h(max_n + 1, 0);
  std::map<std::pair<int, int>, BigInt> tnk;
  std::map<int, BigInt> t;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string kind;
    std::string value;
    int n = 0;
    int k = 0;
    fields >> kind >> n;
    if (kind == "h") {
      fields >> value;
      if (n < 2 || n > max_n) throw Error(ErrorCode::kCacheCorrupt, "bad line '" + line + "'");
      h[n] = ParseBig(value);
    } else if (kind == "t") {
      fields >> value;
      t[n] = ParseBig(value);
    } else if (kind == "tnk") {
      fields >> k >> value;
      tnk[{n, k}] = ParseBig(value);
    } else {
      throw Error(ErrorCode::kCacheCorrupt, "bad line '" + line + "'");
    }
  }
  CountTable table = FromH(h, max_n);
  // Stored values must agree with what the recurrence derives.
  for (const auto& [n, v] : t) {
    if (n < 1 || n > max_n || table.t(n) != v) {
      throw Error(ErrorCode::kCacheCorrupt, "t_" + std::to_string(n) + " disagrees");
    }
  }
  for (const auto& [nk, v] : tnk) {
    if (table.t_nk(nk.first, nk.second) != v) {
      throw Error(ErrorCode::kCacheCorrupt, "t_{n,k} disagrees");
    }
  }
  return table;
}

CountTable CountTable::LoadOrCompute(const std::filesystem::path& dir, int max_n) {
  const auto path = dir / ("counts-" + std::to_string(max_n) + ".txt");
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    try {
      return Read(in);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kCacheCorrupt && e.code() != ErrorCode::kParse) throw;
    }
  }
  CountTable table = Compute(max_n);
  std::filesystem::create_directories(dir);
  std::ofstream out(path);
  table.Write(out);
  return table;
}

std::string CountTable::ToCsv() const {
  std::ostringstream os;
  os << "n,k,t_nk\n";
  for (int n = 2; n <= max_n_; ++n) {
    for (int k = 2; k <= n; ++k) os << n << ',' << k << ',' << tnk_[n][k] << '\n';
  }
  os << "n,total\n";
  for (int n = 1; n <= max_n_; ++n) os << n << ',' << t_[n] << '\n';
  return os.str();
}

std::string CountTable::ToJson() const {
  nlohmann::json j;
  j["max_n"] = max_n_;
  for (int n = 1; n <= max_n_; ++n) j["t"][std::to_string(n)] = ToString(t_[n]);
  for (int k = 2; k <= max_n_; ++k) j["h"][std::to_string(k)] = ToString(h_[k]);
  for (int n = 2; n <= max_n_; ++n) {
    for (int k = 2; k <= n; ++k) {
      j["t_nk"][std::to_string(n)][std::to_string(k)] = ToString(tnk_[n][k]);
      j["c_nk"][std::to_string(n)][std::to_string(k)] = ToString(c_nk(n, k));
    }
  }
  return j.dump(2);
}

std::vector<BigInt> ImportH(std::istream& is, int max_n) {
  std::vector<BigInt> h(max_n + 1, 0);
  std::vector<bool> seen(max_n + 1, false);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string kind;
    std::string value;
    int n = 0;
    if (!(fields >> kind >> n >> value) || kind != "h") continue;
    if (n < 2 || n > max_n) continue;
    h[n] = ParseBig(value);
    seen[n] = true;
  }
  h[2] = 1;
  seen[2] = true;
  for (int n = 3; n <= max_n; ++n) {
    if (!seen[n]) throw Error(ErrorCode::kMissingH, "no h_" + std::to_string(n) + " in import");
  }
  // Trusted only where it overlaps what we can compute.
  const int overlap = std::min(max_n, kMaxComputedH);
  const CountTable own = CountTable::Compute(overlap);
  for (int n = 3; n <= overlap; ++n) {
    if (own.h(n) != h[n]) {
      throw Error(ErrorCode::kCacheCorrupt, "imported h_" + std::to_string(n) + " = " +
                                                ToString(h[n]) + ", computed " +
                                                ToString(own.h(n)));
    }
  }
  return h;
}

CensusReport VerifyAgainstBruteforce(int n, const CountTable& table) {
  CensusReport report;
  report.n = n;
  report.expected.assign(n + 1, 0);
  report.observed.assign(n + 1, 0);
  for (int k = 2; k <= n; ++k) report.expected[k] = table.t_nk(n, k);
  for (const Tanglegram& t : EnumerateTanglegrams(n, true)) {
    ++report.observed[Irr(t).core.size()];
  }
  report.match = true;
  for (int k = 0; k <= n; ++k) {
    if (report.expected[k] != report.observed[k]) report.match = false;
  }
  return report;
}

}  // namespace tangle
