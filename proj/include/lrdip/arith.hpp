#pragma once

#include <cstdint>
#include <memory>

#include "lrdip/runtime.hpp"

namespace lrdip {

// Shared comparison certificate: one bit per position over two co-located
// bitstrings (big, small), MSB first. The bit pattern is 0...01...1; the
// first 1 marks the deciding position. Used standalone and inside the
// block-order machinery.
Bits gt_certificate(const Bits& big, const Bits& small);
// Per-position validity. left_bit < 0 means leftmost position.
bool gt_check(int self_bit, int left_bit, int a, int b, bool rightmost);

// Claim a > b over w-bit values on a w-node line, one bit pair per node,
// MSB at the left end. Single prover round, one label bit per node.
class GtProtocol : public Protocol {
public:
  GtProtocol(uint32_t w, uint64_t a, uint64_t b);
  const Network& net() const override { return net_; }
  std::string name() const override { return "gt"; }
  uint32_t num_rounds() const override { return 1; }
  RoundKind round_kind(uint32_t) const override { return RoundKind::Prover; }
  Schema schema(uint32_t) const override { return {1, 0}; }
  void draw_coins(uint32_t, const CoinPrf&, const Transcript&,
                  Round&) const override {}
  void honest_round(uint32_t r, const Transcript& t, Round& out) const override;
  bool decide_node(uint32_t v, const LocalView& view) const override;

private:
  Network net_;
  uint32_t w_;
  uint64_t a_, b_;
};

// Claim a + b == c over w-bit values (no overflow) on a w-node line.
// Label: the carry produced at this node's position.
class AddProtocol : public Protocol {
public:
  AddProtocol(uint32_t w, uint64_t a, uint64_t b, uint64_t c);
  const Network& net() const override { return net_; }
  std::string name() const override { return "add"; }
  uint32_t num_rounds() const override { return 1; }
  RoundKind round_kind(uint32_t) const override { return RoundKind::Prover; }
  Schema schema(uint32_t) const override { return {1, 0}; }
  void draw_coins(uint32_t, const CoinPrf&, const Transcript&,
                  Round&) const override {}
  void honest_round(uint32_t r, const Transcript& t, Round& out) const override;
  bool decide_node(uint32_t v, const LocalView& view) const override;

private:
  Network net_;
  uint32_t w_;
};

// Claim c == (a + b) mod m for reduced operands (a, b, c < m), on a w-node
// line holding bits of a, b, c, m. Label layout per node: wrap flag,
// carry of the first chain, shared digit, carry of the second chain.
class ModAddProtocol : public Protocol {
public:
  ModAddProtocol(uint32_t w, uint64_t a, uint64_t b, uint64_t c, uint64_t m);
  const Network& net() const override { return net_; }
  std::string name() const override { return "modadd"; }
  uint32_t num_rounds() const override { return 1; }
  RoundKind round_kind(uint32_t) const override { return RoundKind::Prover; }
  Schema schema(uint32_t) const override { return {4, 0}; }
  void draw_coins(uint32_t, const CoinPrf&, const Transcript&,
                  Round&) const override {}
  void honest_round(uint32_t r, const Transcript& t, Round& out) const override;
  bool decide_node(uint32_t v, const LocalView& view) const override;

private:
  Network net_;
  uint32_t w_;
  bool wraps_;
};

}  // namespace lrdip
