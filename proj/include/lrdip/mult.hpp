#pragma once

#include <cstdint>

#include "lrdip/eq_engine.hpp"

namespace lrdip {

// Product claims on a line of w clusters, 2w nodes each. Cluster i carries
// one bit per node of the shift-and-add state for the i-th multiplier bit;
// neighboring clusters are stitched together with pooled equality
// sub-instances over a drawn fingerprint point (rounds: commit, draw,
// relay). The plain form claims a*b == c with c a 2w-bit value; the modular
// form claims a*b == c (mod m) for reduced operands via a claimed quotient.
class MultProtocol : public Protocol {
public:
  MultProtocol(uint32_t w, uint64_t a, uint64_t b, uint64_t c);
  MultProtocol(uint32_t w, uint64_t a, uint64_t b, uint64_t c, uint64_t m);

  const Network& net() const override { return net_; }
  std::string name() const override { return modular_ ? "modmult" : "mult"; }
  uint32_t num_rounds() const override { return 3; }
  RoundKind round_kind(uint32_t r) const override {
    return r == 1 ? RoundKind::Verifier : RoundKind::Prover;
  }
  Schema schema(uint32_t r) const override;
  void draw_coins(uint32_t r, const CoinPrf& prf, const Transcript& t,
                  Round& out) const override;
  void honest_round(uint32_t r, const Transcript& t, Round& out) const override;
  bool decide_node(uint32_t v, const LocalView& view) const override;

  const EqEngine& engine() const { return eng_; }
  uint32_t track_count() const { return fields_; }

private:
  void build(uint32_t w, uint64_t a, uint64_t b, uint64_t c, uint64_t m);
  bool check_machinery(const LocalView& view, uint32_t base, bool second,
                       uint32_t i, uint32_t j) const;

  Network net_;
  EqEngine eng_;
  uint32_t w_ = 0, cw_ = 0, fields_ = 0;
  bool modular_ = false;
  uint64_t a_ = 0, b_ = 0, c_ = 0, m_ = 0, k_ = 0;
};

}  // namespace lrdip
