#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace attrex {

// Deterministic random source. All draws are built from raw mt19937_64
// output so that streams are identical across platforms and compilers;
// <random> distributions are implementation-defined and must not be used
// anywhere determinism is promised.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0,1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; second value of each pair is cached.
  double normal();

  // Uniform integer in [0,n). n must be > 0.
  std::uint64_t uniform_index(std::uint64_t n);

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Stable seed derivation: hashes (base, tag, a, b, c) into a fresh seed.
// Used so that per-sample work is seeded by identity, not execution order.
std::uint64_t derive_seed(std::uint64_t base, std::string_view tag,
                          std::uint64_t a = 0, std::uint64_t b = 0,
                          std::uint64_t c = 0);

}  // namespace attrex
