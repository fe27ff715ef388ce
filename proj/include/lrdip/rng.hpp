#pragma once

#include <cstdint>

#include "lrdip/bits.hpp"

namespace lrdip {

inline uint64_t mix64(uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-mode PRF over (seed, stream, counter). Stateless: every draw is a
// pure function of its coordinates, so runs replay exactly from the seed.
class CoinPrf {
public:
  explicit CoinPrf(uint64_t seed) : seed_(seed) {}

  uint64_t word(uint64_t stream, uint64_t counter) const {
    uint64_t h = mix64(seed_ ^ 0x8637f2b17d9cce3bULL);
    h = mix64(h ^ stream);
    return mix64(h ^ counter);
  }

  // Exact-uniform draw from [0, bound) by rejection. bound >= 1.
  uint64_t uniform_below(uint64_t bound, uint64_t stream) const {
    if (bound <= 1) return 0;
    uint32_t w = bit_width_u64(bound - 1);
    uint64_t mask = (w >= 64) ? ~uint64_t(0) : ((uint64_t(1) << w) - 1);
    for (uint64_t ctr = 0;; ++ctr) {
      uint64_t v = word(stream, ctr) & mask;
      if (v < bound) return v;
    }
  }

  Bits draw_bits(uint32_t width, uint64_t stream) const {
    Bits b;
    for (uint32_t i = 0; i < width; ++i) {
      uint64_t wv = word(stream, i / 64);
      b.append_bit(int((wv >> (i % 64)) & 1u));
    }
    return b;
  }

  uint64_t seed() const { return seed_; }

private:
  uint64_t seed_;
};

// Stream ids namespaced by purpose so independent draws never collide.
inline uint64_t coin_stream(uint32_t round, uint32_t node, uint32_t slot = 0) {
  return (uint64_t(round) << 48) | (uint64_t(slot) << 32) | uint64_t(node);
}

}  // namespace lrdip
