#pragma once

#include <cstdint>
#include <random>

namespace omega4 {

/// Seeded RNG handed to every probabilistic branch; reports carry the seed
/// so runs are reproducible.
struct Prng {
  std::mt19937_64 gen;
  uint64_t seed;

  explicit Prng(uint64_t s = 12345) : gen(s), seed(s) {}
  uint32_t below(uint32_t n) { return static_cast<uint32_t>(gen() % n); }
};

}  // namespace omega4
