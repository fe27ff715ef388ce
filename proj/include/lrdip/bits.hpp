#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lrdip {

// Dynamic bitstring with bit-exact length. Bit 0 is the first bit appended.
// Multi-bit fields are stored LSB-of-field-first within the word buffer but
// append_field/field treat the value as an ordinary unsigned integer.
class Bits {
public:
  Bits() = default;
  explicit Bits(uint32_t nbits) { resize(nbits); }

  uint32_t size() const { return nbits_; }
  bool empty() const { return nbits_ == 0; }

  void clear() {
    nbits_ = 0;
    words_.clear();
  }

  void resize(uint32_t nbits) {
    nbits_ = nbits;
    words_.assign((nbits + 63) / 64, 0);
  }

  int bit(uint32_t i) const {
    return (i < nbits_) ? int((words_[i >> 6] >> (i & 63)) & 1u) : 0;
  }

  void set_bit(uint32_t i, int v) {
    if (i >= nbits_) return;
    uint64_t mask = uint64_t(1) << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  void append_bit(int v) {
    if ((nbits_ & 63) == 0) words_.push_back(0);
    if (v) words_.back() |= uint64_t(1) << (nbits_ & 63);
    ++nbits_;
  }

  // Appends `width` bits of `value`, low bit first. width <= 64.
  void append_field(uint64_t value, uint32_t width) {
    for (uint32_t i = 0; i < width; ++i) append_bit(int((value >> i) & 1u));
  }

  // Reads `width` bits starting at `offset`, low bit first. width <= 64.
  uint64_t field(uint32_t offset, uint32_t width) const {
    uint64_t v = 0;
    for (uint32_t i = 0; i < width; ++i)
      v |= uint64_t(bit(offset + i)) << i;
    return v;
  }

  void flip_bit(uint32_t i) { set_bit(i, 1 - bit(i)); }

  bool operator==(const Bits& o) const {
    if (nbits_ != o.nbits_) return false;
    for (uint32_t i = 0; i < words_.size(); ++i)
      if (words_[i] != o.words_[i]) return false;
    return true;
  }
  bool operator!=(const Bits& o) const { return !(*this == o); }

  // Hex dump, low nibble = bits 0..3. Empty string for zero-length.
  std::string to_hex() const;
  static Bits from_hex(const std::string& hex, uint32_t nbits);

private:
  uint32_t nbits_ = 0;
  std::vector<uint64_t> words_;
};

inline uint32_t bit_width_u64(uint64_t v) {
  uint32_t w = 0;
  while (v) {
    ++w;
    v >>= 1;
  }
  return w;
}

}  // namespace lrdip
