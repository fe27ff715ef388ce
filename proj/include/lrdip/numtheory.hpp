#pragma once

#include <cstdint>

#include "lrdip/bits.hpp"

namespace lrdip {

bool is_prime_u64(uint64_t n);

// Smallest prime p with lo <= p <= hi, or 0 if none.
uint64_t smallest_prime_in(uint64_t lo, uint64_t hi);

// Smallest prime >= lo.
uint64_t next_prime_at_least(uint64_t lo);

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t mod);

// Inverse of a mod m when gcd(a, m) == 1, else 0.
uint64_t mod_inv(uint64_t a, uint64_t m);

// Fingerprint of a bitstring s[1..len] at point r over GF(q):
// sum_i s[i] * r^i mod q, with s[1] the first (most significant) bit.
// No constant term, so the empty string maps to 0.
uint64_t poly_eval(uint64_t q, uint64_t r, const Bits& s);

// Same, over an explicit bit sequence accessor.
template <typename BitAt>
uint64_t poly_eval_fn(uint64_t q, uint64_t r, uint32_t len, BitAt&& bit_at) {
  uint64_t acc = 0;
  uint64_t rr = r % q;
  // Horner from the last coefficient: invariant after processing i is
  // acc = sum_{j>=i} s[j] * r^(j-i+1), so the loop ends with sum s[j]*r^j.
  for (uint32_t i = len; i >= 1; --i) {
    acc = (acc + uint64_t(bit_at(i))) % q;
    acc = uint64_t((unsigned __int128)(acc)*rr % q);
  }
  return acc;
}

}  // namespace lrdip
