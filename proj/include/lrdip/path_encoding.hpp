#pragma once

#include <cstdint>
#include <vector>

#include "lrdip/bits.hpp"

namespace lrdip {

// A bitstring spread along consecutive nodes: bit i (1-based, most
// significant first) sits on node start + (i-1)*gap.
struct DistributedString {
  uint32_t start = 0;
  uint32_t gap = 1;
  uint32_t count = 0;

  uint32_t host(uint32_t i) const { return start + (i - 1) * gap; }
  uint32_t last_host() const { return host(count); }

  // -1 when v hosts no bit, else the 1-based bit index.
  int bit_index_of(uint32_t v) const {
    if (v < start) return -1;
    uint32_t off = v - start;
    if (off % gap != 0) return -1;
    uint32_t i = off / gap + 1;
    return i <= count ? int(i) : -1;
  }

  // Scatter `value` (width = count, MSB first) into per-node bit slots.
  void write(const Bits& value, std::vector<int>& slots) const {
    for (uint32_t i = 1; i <= count; ++i) slots.at(host(i)) = value.bit(i - 1);
  }

  Bits read(const std::vector<int>& slots) const {
    Bits b;
    for (uint32_t i = 1; i <= count; ++i)
      b.append_bit(slots.at(host(i)) ? 1 : 0);
    return b;
  }
};

struct Block {
  uint32_t start = 0;
  uint32_t size = 0;
  uint32_t end() const { return start + size; }  // one past last
};

// Cuts [0, len) into blocks of size `base`, with the final block absorbing
// the remainder, so every block has size in [base, 2*base-1]. When
// len < 2*base there is a single block of size len.
std::vector<Block> partition_blocks(uint32_t len, uint32_t base);

// Index of the block containing node v (blocks are contiguous).
uint32_t block_of(const std::vector<Block>& blocks, uint32_t v);

}  // namespace lrdip
