#include "attrex/rng.hpp"

#include <cmath>

namespace attrex {

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller on open-interval uniforms; u1 > 0 guaranteed by the +1 shift.
  double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  double radius = std::sqrt(-2.0 * std::log(u1));
  double angle = 2.0 * 3.14159265358979323846 * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

std::uint64_t Rng::uniform_index(std::uint64_t n) {
  // Lemire-style bounded draw, bias negligible for n << 2^64.
  unsigned __int128 wide = static_cast<unsigned __int128>(engine_()) * n;
  return static_cast<std::uint64_t>(wide >> 64);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::string_view tag,
                          std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a offset basis
  for (char ch : tag) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ULL;
  }
  h = splitmix64(h ^ splitmix64(base));
  h = splitmix64(h ^ splitmix64(a + 0x1000000001ULL));
  h = splitmix64(h ^ splitmix64(b + 0x2000000002ULL));
  h = splitmix64(h ^ splitmix64(c + 0x3000000003ULL));
  return h;
}

}  // namespace attrex
