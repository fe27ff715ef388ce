#include "lrdip/path_encoding.hpp"

#include <stdexcept>

namespace lrdip {

std::vector<Block> partition_blocks(uint32_t len, uint32_t base) {
  if (base == 0) throw std::invalid_argument("block size must be positive");
  std::vector<Block> blocks;
  if (len == 0) return blocks;
  uint32_t k = len / base;  // number of full blocks before merging
  if (k <= 1) {
    blocks.push_back({0, len});
    return blocks;
  }
  for (uint32_t i = 0; i + 1 < k; ++i) blocks.push_back({i * base, base});
  blocks.push_back({(k - 1) * base, len - (k - 1) * base});
  return blocks;
}

uint32_t block_of(const std::vector<Block>& blocks, uint32_t v) {
  for (uint32_t i = 0; i < blocks.size(); ++i)
    if (v >= blocks[i].start && v < blocks[i].end()) return i;
  throw std::out_of_range("node outside partition");
}

}  // namespace lrdip
