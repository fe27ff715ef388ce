#pragma once

#include <cstdint>

#include "lrdip/eq_engine.hpp"

namespace lrdip {

// Standalone string-equality protocol: two strings of ell bits written with
// stride `gap` on two disjoint path runs joined by one bridge edge. One
// verifier round (point draw at the left end of the first run) and one
// prover round. The field prime is the smallest prime in [ell^2, 2*ell^2].
class Eq2Protocol : public Protocol {
public:
  Eq2Protocol(uint32_t ell, uint32_t gap, const Bits& alpha, const Bits& beta);

  const Network& net() const override { return net_; }
  std::string name() const override { return "eq2"; }
  uint32_t num_rounds() const override { return 2; }
  RoundKind round_kind(uint32_t r) const override {
    return r == 0 ? RoundKind::Verifier : RoundKind::Prover;
  }
  Schema schema(uint32_t r) const override;
  void draw_coins(uint32_t r, const CoinPrf& prf, const Transcript& t,
                  Round& out) const override;
  void honest_round(uint32_t r, const Transcript& t, Round& out) const override;
  bool decide_node(uint32_t v, const LocalView& view) const override;

  uint64_t q() const { return q_; }
  const EqEngine& engine() const { return eng_; }

  static uint64_t field_prime(uint32_t ell);

private:
  Network net_;
  EqEngine eng_;
  uint64_t q_ = 0;
  uint32_t ell_ = 0, gap_ = 1;
};

// Deterministic test strings: beta equals alpha when `equal`, else differs
// in at least one bit.
void eq_pair(uint32_t ell, uint64_t seed, bool equal, Bits& alpha, Bits& beta);

}  // namespace lrdip
