#pragma once

// Exact counts of planar tanglegrams:
//   t_n      all planar tanglegrams of size n
//   h_n      irreducible ones (h_n = t_{n,n})
//   t_{n,k}  those whose irreducible core has size k
//   c_{n,k}  t_{n,k} / h_k
// from T(x) = H(T(x)) + T(x^2)/2 + x with H(x) = x^2/2 + sum_{k>=3} h_k x^k.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tangle {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kDefaultCountMaxN = 11;
// Largest n whose h_n is computed here (pairs of the 12-gon).
inline constexpr int kMaxComputedH = 11;
inline constexpr int kCacheVersion = 1;

class CountTable {
 public:
  // h_n = |pairs of the (n+1)-gon| / 2 for 3 <= n <= max_n.
  static CountTable Compute(int max_n = kDefaultCountMaxN);
  // h[k] for 2 <= k <= max_n from elsewhere; h[0], h[1] ignored.
  static CountTable FromH(const std::vector<BigInt>& h, int max_n);

  int max_n() const { return max_n_; }
  const BigInt& t(int n) const;
  const BigInt& h(int k) const;
  const BigInt& t_nk(int n, int k) const;
  BigInt c_nk(int n, int k) const;
  // [x^m] T(x)^j
  const BigInt& conv(int j, int m) const;
  // sum_{i=1}^{n-1} t_i t_{n-i}
  const BigInt& ordered_pair_sum(int n) const { return conv(2, n); }

  // Checksummed text cache.
  void Write(std::ostream& os) const;
  static CountTable Read(std::istream& is);
  // `dir/counts-<max_n>.txt`, computed and written on a miss; a stale or
  // corrupt file is rebuilt.
  static CountTable LoadOrCompute(const std::filesystem::path& dir, int max_n);

  std::string ToCsv() const;   // n,k,t_nk rows then n,total,t_n rows
  std::string ToJson() const;

 private:
  void Fill();
  void CheckN(int n) const;

  int max_n_ = 0;
  std::vector<BigInt> t_;                // index n
  std::vector<BigInt> h_;                // index k
  std::vector<std::vector<BigInt>> tnk_; // [n][k]
  std::vector<std::vector<BigInt>> conv_;// [j][m]
};

// Read `h n value` lines. Values for n <= kMaxComputedH are checked against
// the computed ones; a mismatch throws kCacheCorrupt.
std::vector<BigInt> ImportH(std::istream& is, int max_n);

struct CensusReport {
  int n = 0;
  std::vector<BigInt> expected;  // index k
  std::vector<long long> observed;
  bool match = false;
};
// Brute-force planar census by |irr| against the table row.
CensusReport VerifyAgainstBruteforce(int n, const CountTable& table);

std::string ToString(const BigInt& v);

}  // namespace tangle
