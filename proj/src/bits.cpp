#include "lrdip/bits.hpp"

#include <stdexcept>

namespace lrdip {

static char nibble_char(uint32_t v) {
  return v < 10 ? char('0' + v) : char('a' + v - 10);
}

static uint32_t nibble_val(char c) {
  if (c >= '0' && c <= '9') return uint32_t(c - '0');
  if (c >= 'a' && c <= 'f') return uint32_t(c - 'a' + 10);
  if (c >= 'A' && c <= 'F') return uint32_t(c - 'A' + 10);
  throw std::invalid_argument("bad hex digit");
}

std::string Bits::to_hex() const {
  std::string s;
  uint32_t nibbles = (nbits_ + 3) / 4;
  s.reserve(nibbles);
  for (uint32_t i = 0; i < nibbles; ++i)
    s.push_back(nibble_char(uint32_t(field(i * 4, 4))));
  return s;
}

Bits Bits::from_hex(const std::string& hex, uint32_t nbits) {
  if (hex.size() != (nbits + 3) / 4)
    throw std::invalid_argument("hex length does not match bit count");
  Bits b;
  for (uint32_t i = 0; i < nbits; ++i) {
    uint32_t nv = nibble_val(hex[i / 4]);
    b.append_bit(int((nv >> (i % 4)) & 1u));
  }
  return b;
}

}  // namespace lrdip
