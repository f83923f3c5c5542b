#pragma once

// Seedable generator with reproducible child streams: child i of a stream
// keyed by (seed, path) is keyed by (seed, path, i).

#include <cstdint>
#include <random>

#include "tangle/counting.hpp"

namespace tangle {

std::uint64_t SplitMix64(std::uint64_t x);

class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0);

  Rng Child(std::uint64_t index) const;
  std::uint64_t key() const { return key_; }

  std::uint64_t Next() { return engine_(); }
  // Uniform on [0, n) by rejection over masked bit blocks. n > 0.
  std::uint64_t Below(std::uint64_t n);
  BigInt Below(const BigInt& n);
  // Only for diagnostics and MCMC plumbing, never on the exact path.
  double Uniform01();

 private:
  Rng(std::uint64_t key, bool) : key_(key), engine_(key) {}

  std::uint64_t key_;
  std::mt19937_64 engine_;
};

}  // namespace tangle
