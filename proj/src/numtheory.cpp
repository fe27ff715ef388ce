#include "lrdip/numtheory.hpp"

namespace lrdip {

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

uint64_t smallest_prime_in(uint64_t lo, uint64_t hi) {
  for (uint64_t p = lo; p <= hi; ++p)
    if (is_prime_u64(p)) return p;
  return 0;
}

uint64_t next_prime_at_least(uint64_t lo) {
  uint64_t p = lo < 2 ? 2 : lo;
  while (!is_prime_u64(p)) ++p;
  return p;
}

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t mod) {
  if (mod == 1) return 0;
  uint64_t result = 1;
  uint64_t b = base % mod;
  while (exp) {
    if (exp & 1)
      result = uint64_t((unsigned __int128)result * b % mod);
    b = uint64_t((unsigned __int128)b * b % mod);
    exp >>= 1;
  }
  return result;
}

uint64_t mod_inv(uint64_t a, uint64_t m) {
  // extended Euclid; returns 0 when not invertible
  int64_t t = 0, newt = 1;
  int64_t r = int64_t(m), newr = int64_t(a % m);
  while (newr != 0) {
    int64_t quot = r / newr;
    int64_t tmp = t - quot * newt;
    t = newt;
    newt = tmp;
    tmp = r - quot * newr;
    r = newr;
    newr = tmp;
  }
  if (r > 1) return 0;
  if (t < 0) t += int64_t(m);
  return uint64_t(t);
}

uint64_t poly_eval(uint64_t q, uint64_t r, const Bits& s) {
  return poly_eval_fn(q, r, s.size(), [&](uint32_t i) { return s.bit(i - 1); });
}

}  // namespace lrdip
