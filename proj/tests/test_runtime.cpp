#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrdip/runtime.hpp"

using namespace lrdip;

namespace {

// Toy three-round protocol on a line: prover writes a parity bit per node,
// verifier draws one coin at node 0, prover echoes that coin everywhere.
// A node accepts if its echo equals its neighbors' echoes and node 0's echo
// matches the coin. Exercises every runtime surface without real arithmetic.
class EchoProtocol : public Protocol {
public:
  explicit EchoProtocol(uint32_t n) : net_(Network::line(n)) {
    for (uint32_t v = 0; v < n; ++v) net_.inputs[v].append_bit(v % 2 == 1);
  }

  const Network& net() const override { return net_; }
  std::string name() const override { return "echo"; }
  uint32_t num_rounds() const override { return 3; }
  RoundKind round_kind(uint32_t r) const override {
    return r == 1 ? RoundKind::Verifier : RoundKind::Prover;
  }
  Schema schema(uint32_t r) const override {
    if (r == 0) return {1, 2};
    if (r == 1) return {1, 0};
    return {1, 0};
  }

  void draw_coins(uint32_t r, const CoinPrf& prf, const Transcript&,
                  Round& out) const override {
    out.coins.assign(net_.n, Bits{});
    out.coins[0] = prf.draw_bits(1, coin_stream(r, 0, 0));
  }

  void honest_round(uint32_t r, const Transcript& t,
                    Round& out) const override {
    out.node_labels.assign(net_.n, Bits{});
    if (r == 0) {
      out.edge_labels.assign(net_.edges.size(), Bits{});
      for (uint32_t v = 0; v < net_.n; ++v)
        out.node_labels[v].append_bit(net_.inputs[v].bit(0));
      for (uint32_t e = 0; e < net_.edges.size(); ++e)
        out.edge_labels[e].append_field(2, 2);
    } else {
      bool c = t.coin(1, 0).size() > 0 && t.coin(1, 0).bit(0);
      for (uint32_t v = 0; v < net_.n; ++v) out.node_labels[v].append_bit(c);
    }
  }

  bool decide_node(uint32_t v, const LocalView& view) const override {
    if (view.my_label(0).bit(0) != view.input().bit(0)) return false;
    bool echo = view.my_label(2).bit(0);
    if (view.has_left() && view.label(2, view.left()).bit(0) != echo)
      return false;
    if (view.has_right() && view.label(2, view.right()).bit(0) != echo)
      return false;
    if (v == 0) {
      if (view.my_coins(1).size() != 1) return false;
      if (echo != view.my_coins(1).bit(0)) return false;
    }
    for (auto& ie : view.incident())
      if (view.edge_label(0, ie.edge_id).field(0, 2) != 2) return false;
    return true;
  }

private:
  Network net_;
};

// Strategy that wrecks the echo at one node in the final round.
class FlipEcho : public ProverStrategy {
public:
  std::string name() const override { return "flip_echo"; }
  void prover_round(const Protocol& proto, uint32_t r, const Transcript& t,
                    Round& out) override {
    proto.honest_round(r, t, out);
    if (r == 2) out.node_labels[2].flip_bit(0);
  }
};

// Strategy that exceeds the declared node width in round 2.
class FatLabel : public ProverStrategy {
public:
  std::string name() const override { return "fat_label"; }
  void prover_round(const Protocol& proto, uint32_t r, const Transcript& t,
                    Round& out) override {
    proto.honest_round(r, t, out);
    if (r == 2) out.node_labels[1].append_bit(true);
  }
};

}  // namespace

TEST_CASE("honest run accepts and reports sizes") {
  EchoProtocol proto(6);
  Transcript t;
  RunReport rep = run_protocol(proto, nullptr, 7, &t);
  CHECK(rep.accepted);
  CHECK_FALSE(rep.width_violation);
  CHECK(rep.rounds == 3);
  CHECK(rep.node_verdicts.size() == 6);
  CHECK(rep.proof_size_bits == 2);  // widest prover message is an edge label
  CHECK(rep.coin_bits_max == 1);
  // interior node: two labels, two incident edge labels of 2 bits, no coin
  CHECK(rep.total_bits_per_node == 6);
  REQUIRE(rep.round_max_node_bits.size() == 3);
  CHECK(rep.round_max_node_bits[0] == 1);
  CHECK(rep.round_max_edge_bits[0] == 2);
  CHECK(rep.round_max_node_bits[2] == 1);
  CHECK(t.rounds.size() == 3);
}

TEST_CASE("a single corrupted node flips the global verdict") {
  EchoProtocol proto(6);
  FlipEcho bad;
  RunReport rep = run_protocol(proto, &bad, 7);
  CHECK_FALSE(rep.accepted);
  // the flipped node and its neighbors complain, nobody else
  CHECK(rep.node_verdicts[0] == 1);
  CHECK(rep.node_verdicts[1] == 0);
  CHECK(rep.node_verdicts[2] == 0);
  CHECK(rep.node_verdicts[3] == 0);
  CHECK(rep.node_verdicts[4] == 1);
}

TEST_CASE("oversized prover messages auto reject") {
  EchoProtocol proto(4);
  FatLabel fat;
  RunReport rep = run_protocol(proto, &fat, 7);
  CHECK_FALSE(rep.accepted);
  CHECK(rep.width_violation);
}

TEST_CASE("forced coins override the prf") {
  EchoProtocol proto(4);
  std::vector<Bits> coins(4);
  coins[0].append_bit(true);
  Transcript t;
  RunReport rep = run_with_forced_coins(proto, nullptr, {coins}, &t);
  CHECK(rep.accepted);
  CHECK(t.coin(1, 0).bit(0));
  for (uint32_t v = 0; v < 4; ++v) CHECK(t.node_label(2, v).bit(0));
}

TEST_CASE("runs are deterministic in the seed") {
  EchoProtocol proto(5);
  Transcript t1, t2, t3;
  run_protocol(proto, nullptr, 11, &t1);
  run_protocol(proto, nullptr, 11, &t2);
  run_protocol(proto, nullptr, 12, &t3);
  CHECK(dump_transcript(proto, t1) == dump_transcript(proto, t2));
  // seed feeds only the coins; the drawn bit may or may not differ, but the
  // transcript dump must round trip either way
  CHECK(t3.rounds.size() == 3);
}

TEST_CASE("transcript dump parses back to the same transcript") {
  EchoProtocol proto(5);
  Transcript t;
  run_protocol(proto, nullptr, 3, &t);
  std::string text = dump_transcript(proto, t);
  Transcript back = parse_transcript(proto, text);
  CHECK(dump_transcript(proto, back) == text);
  RunReport rep = decide_transcript(proto, back);
  CHECK(rep.accepted);
}

TEST_CASE("locality is enforced by construction") {
  EchoProtocol proto(6);
  Transcript t;
  run_protocol(proto, nullptr, 1, &t);
  LocalView view(proto.net(), t, 0);
  CHECK_NOTHROW(view.label(0, 1));       // neighbor
  CHECK_THROWS(view.label(0, 3));        // two hops away
  CHECK_THROWS(view.coins(1, 2));        // not adjacent
  CHECK_THROWS(view.edge_label(0, 4));   // edge 4->5 not incident to 0
  LocalView mid(proto.net(), t, 3);
  CHECK_NOTHROW(mid.label(0, 2));
  CHECK_NOTHROW(mid.label(0, 4));
  CHECK_THROWS(mid.label(0, 0));
}
