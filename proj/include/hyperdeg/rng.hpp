#pragma once

#include <cstdint>
#include <random>

namespace hyperdeg {

using RngSeed = std::uint64_t;

// Deterministic random stream. Build constants: std::mt19937_64 seeded with a
// single 64-bit value (the standard pins this initialization bit-for-bit, so
// equal seeds give equal streams on any conforming library), and bounded draws
// by modulo rejection so they are exactly uniform.
class Rng {
 public:
  explicit Rng(RngSeed seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform integer in [0, n). Rejects the truncated tail of the 64-bit range
  // instead of folding it in, so no residue is favored.
  std::uint64_t below(std::uint64_t n) {
    // threshold = 2^64 mod n; accepting x >= threshold leaves a whole number
    // of full cycles of residues
    const std::uint64_t threshold = (-n) % n;
    for (;;) {
      const std::uint64_t x = gen_();
      if (x >= threshold) return x % n;
    }
  }

 private:
  std::mt19937_64 gen_;
};

// Seed for trial `index` of a run seeded with `base` (wraps mod 2^64).
inline RngSeed trial_seed(RngSeed base, std::uint64_t index) { return base + index; }

}  // namespace hyperdeg
