#include "tangle/rng.hpp"

#include <bit>

#include "tangle/error.hpp"

namespace tangle {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : Rng(SplitMix64(seed), true) {}

Rng Rng::Child(std::uint64_t index) const {
  return Rng(SplitMix64(key_ ^ SplitMix64(index + 0x632be59bd9b4e019ull)), true);
}

std::uint64_t Rng::Below(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::kOutOfRange, "empty range");
  if (n == 1) return 0;
  const int bits = std::bit_width(n - 1);
  const std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  for (;;) {
    const std::uint64_t x = engine_() & mask;
    if (x < n) return x;
  }
}

BigInt Rng::Below(const BigInt& n) {
  if (n <= 0) throw Error(ErrorCode::kOutOfRange, "empty range");
  if (n <= BigInt(~std::uint64_t{0})) return BigInt(Below(static_cast<std::uint64_t>(n)));
  const BigInt top = n - 1;
  const unsigned bits = boost::multiprecision::msb(top) + 1;
  const unsigned words = (bits + 63) / 64;
  const unsigned spare = words * 64 - bits;
  for (;;) {
    BigInt x = 0;
    for (unsigned w = 0; w < words; ++w) {
      std::uint64_t block = engine_();
      if (w == 0 && spare) block >>= spare;
      x = (x << 64) | block;
    }
    if (x < n) return x;
  }
}

double Rng::Uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

}  // namespace tangle
