#pragma once

#include <cstdint>
#include <random>

namespace invhom {

// Deterministic generator for randomized sweeps. std::mt19937_64 has a fixed
// output sequence across platforms; the distribution helpers below avoid
// std::uniform_int_distribution, whose output is implementation-defined.
// Same seed, same draws, byte for byte.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n). Modulo bias is irrelevant at the sizes used here.
  std::uint64_t below(std::uint64_t n) { return n <= 1 ? 0 : next() % n; }

  int range(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (next() & 1u) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace invhom
