#pragma once

#include <cstdint>
#include <random>

namespace cgt {

// Deterministic RNG used everywhere randomness is needed.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// C++ standard, and bounded draws use plain modulo reduction, so a given
// seed produces the same stream on every platform and compiler.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed), seed_(seed) {}

  uint64_t seed() const { return seed_; }

  uint64_t next_u64() { return engine_(); }

  // Uniform draw from [lo, hi], inclusive. Modulo bias is irrelevant at the
  // ranges used here and keeps the mapping reproducible.
  int64_t uniform(int64_t lo, int64_t hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int64_t>(engine_() % span);
  }

  bool coin() { return (engine_() & 1u) != 0; }

 private:
  std::mt19937_64 engine_;
  uint64_t seed_;
};

}  // namespace cgt
