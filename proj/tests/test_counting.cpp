#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "tangle/counting.hpp"
#include "tangle/error.hpp"
#include "tangle/polygon.hpp"

using namespace tangle;

namespace {

const CountTable& Table() {
  static const CountTable table = CountTable::Compute(9);
  return table;
}

// Reference count table, except t_{8,4}: the printed 2435 contradicts the
// printed row total 63429, which 2425 restores.
const std::vector<std::vector<long long>> kRows = {
    {1},
    {1, 1},
    {3, 3, 5},
    {13, 9, 20, 34},
    {90, 46, 70, 170, 273},
    {747, 312, 360, 680, 1638, 2436},
    {7040, 2580, 2425, 3570, 7371, 17052, 23391}};
const std::vector<long long> kTotals = {1, 2, 11, 76, 649, 6173, 63429};

// [x^m] T^j by listing compositions.
BigInt ByCompositions(int m, int j, const CountTable& t) {
  BigInt sum = 0;
  std::function<void(int, int, BigInt)> rec = [&](int rest, int parts, BigInt prod) {
    if (parts == 0) {
      if (rest == 0) sum += prod;
      return;
    }
    for (int a = 1; a <= rest; ++a) rec(rest - a, parts - 1, prod * t.t(a));
  };
  rec(m, j, 1);
  return sum;
}

}  // namespace

TEST_CASE("table rows") {
  const CountTable& t = Table();
  for (int n = 2; n <= 8; ++n) {
    const auto& row = kRows[n - 2];
    for (int k = 2; k <= n; ++k) CHECK(t.t_nk(n, k) == row[k - 2]);
    CHECK(t.t(n) == kTotals[n - 2]);
  }
  CHECK(t.t(1) == 1);
}

TEST_CASE("h from pair counts") {
  const CountTable& t = Table();
  CHECK(t.h(2) == 1);
  CHECK(t.h(3) == 1);
  for (int k = 3; k <= 7; ++k) CHECK(2 * t.h(k) == EnumerateDisjointPairs(k + 1).size());
  for (int n = 2; n <= 9; ++n) CHECK(t.t_nk(n, n) == t.h(n));
}

TEST_CASE("row sums, divisibility, monotonicity") {
  const CountTable& t = Table();
  for (int n = 2; n <= 9; ++n) {
    BigInt sum = 0;
    for (int k = 2; k <= n; ++k) {
      sum += t.t_nk(n, k);
      CHECK(t.c_nk(n, k) * t.h(k) == t.t_nk(n, k));
    }
    CHECK(sum == t.t(n));
    CHECK(t.c_nk(n, n) == 1);
    if (n >= 3) CHECK(t.t(n) > t.t(n - 1));
    if (n >= 4) CHECK(t.h(n) > t.h(n - 1));
  }
  CHECK(t.c_nk(4, 2) == 3);
  CHECK(t.c_nk(6, 4) == 14);
}

TEST_CASE("convolution powers") {
  const CountTable& t = Table();
  CHECK(t.conv(2, 2) == 1);
  CHECK(t.conv(2, 4) == 5);
  for (int j = 1; j <= 6; ++j) {
    for (int m = 0; m <= 9; ++m) CHECK(t.conv(j, m) == ByCompositions(m, j, t));
  }
  for (int n = 3; n <= 9; ++n) {
    for (int k = 3; k <= n; ++k) CHECK(t.conv(k, n) * t.h(k) == t.t_nk(n, k));
  }
  CHECK_THROWS_AS(t.conv(2, 10), Error);
}

TEST_CASE("bivariate functional equation coefficient-wise") {
  // Expand H(T(x), y) + T(x^2) y^2 / 2 + x y as a truncated series in x
  // with polynomial coefficients in y, doubled to stay integral.
  const CountTable& t = Table();
  const int N = 9;
  std::vector<BigInt> tx(N + 1, 0);
  for (int n = 1; n <= N; ++n) tx[n] = t.t(n);
  std::vector<std::vector<BigInt>> rhs(N + 1, std::vector<BigInt>(N + 1, 0));  // [n][k], doubled
  std::vector<BigInt> power(N + 1, 0);
  power[0] = 1;
  for (int k = 1; k <= N; ++k) {
    std::vector<BigInt> next(N + 1, 0);
    for (int a = 0; a <= N; ++a)
      for (int b = 1; a + b <= N; ++b) next[a + b] += power[a] * tx[b];
    power = next;
    if (k < 2) continue;
    const BigInt coeff = k == 2 ? BigInt(1) : 2 * t.h(k);
    for (int n = 0; n <= N; ++n) rhs[n][k] += coeff * power[n];
  }
  for (int n = 2; n <= N; n += 2) rhs[n][2] += tx[n / 2];
  rhs[1][1] += 2;
  for (int n = 1; n <= N; ++n) {
    for (int k = 1; k <= N; ++k) {
      const BigInt expect = n == 1 && k == 1 ? BigInt(1) : (k >= 2 && k <= n ? t.t_nk(n, k) : BigInt(0));
      CHECK(rhs[n][k] == 2 * expect);
    }
  }
}

TEST_CASE("brute-force census") {
  for (int n = 2; n <= 5; ++n) {
    const CensusReport r = VerifyAgainstBruteforce(n, Table());
    CHECK(r.match);
  }
}

TEST_CASE("missing tables and caps") {
  CHECK_THROWS_AS(Table().t(10), Error);
  CHECK_THROWS_AS(CountTable::Compute(12), Error);
  try {
    CountTable::FromH({0, 0, 1, 1}, 4);
    FAIL("expected MissingH");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMissingH);
  }
  CHECK_THROWS_AS(CountTable::FromH({0, 0, 2, 1}, 3), Error);
}

TEST_CASE("cache round trip and tamper detection") {
  std::ostringstream os;
  Table().Write(os);
  const std::string text = os.str();
  CHECK(text.rfind("# tangle-counts v1 max_n=9\n", 0) == 0);
  CHECK(text.find("tnk 8 6 7371\n") != std::string::npos);
  std::istringstream in(text);
  const CountTable back = CountTable::Read(in);
  CHECK(back.t(9) == Table().t(9));

  std::string tampered = text;
  tampered.replace(tampered.find("t 5 76"), 6, "t 5 77");
  std::istringstream bad(tampered);
  try {
    CountTable::Read(bad);
    FAIL("expected CacheCorrupt");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCacheCorrupt);
  }

  const auto dir = std::filesystem::temp_directory_path() / "tangle_count_cache_test";
  std::filesystem::remove_all(dir);
  const CountTable a = CountTable::LoadOrCompute(dir, 6);
  std::ifstream f1(dir / "counts-6.txt");
  const std::string first((std::istreambuf_iterator<char>(f1)), {});
  const CountTable b = CountTable::LoadOrCompute(dir, 6);
  std::ifstream f2(dir / "counts-6.txt");
  const std::string second((std::istreambuf_iterator<char>(f2)), {});
  CHECK(first == second);
  CHECK(a.t(6) == b.t(6));
  std::filesystem::remove_all(dir);
}

TEST_CASE("imported h is checked on the overlap") {
  std::istringstream good("h 3 1\nh 4 5\nh 5 34\nh 6 273\n");
  const auto h = ImportH(good, 6);
  CHECK(CountTable::FromH(h, 6).t(6) == 649);
  std::istringstream wrong("h 3 1\nh 4 6\nh 5 34\nh 6 273\n");
  CHECK_THROWS_AS(ImportH(wrong, 6), Error);
  std::istringstream missing("h 3 1\nh 4 5\n");
  CHECK_THROWS_AS(ImportH(missing, 6), Error);
}

TEST_CASE("csv and json output") {
  const CountTable t = CountTable::Compute(4);
  CHECK(t.ToCsv() ==
        "n,k,t_nk\n2,2,1\n3,2,1\n3,3,1\n4,2,3\n4,3,3\n4,4,5\nn,total\n1,1\n2,1\n3,2\n4,11\n");
  CHECK(t.ToJson().find("\"c_nk\"") != std::string::npos);
}
