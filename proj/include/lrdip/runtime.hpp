#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrdip/bits.hpp"
#include "lrdip/network.hpp"
#include "lrdip/rng.hpp"

namespace lrdip {

enum class RoundKind { Prover, Verifier };

struct Round {
  RoundKind kind = RoundKind::Prover;
  std::vector<Bits> node_labels;  // prover rounds, size n
  std::vector<Bits> edge_labels;  // prover rounds, size m (may stay empty)
  std::vector<Bits> coins;        // verifier rounds, size n (empty = no draw)
};

struct Transcript {
  std::vector<Round> rounds;

  const Bits& node_label(uint32_t r, uint32_t v) const {
    return rounds.at(r).node_labels.at(v);
  }
  const Bits& edge_label(uint32_t r, uint32_t e) const {
    return rounds.at(r).edge_labels.at(e);
  }
  const Bits& coin(uint32_t r, uint32_t v) const {
    return rounds.at(r).coins.at(v);
  }
};

struct Schema {
  uint32_t node_bits = 0;
  uint32_t edge_bits = 0;
};

// What a single node may look at while deciding: its own inputs, labels and
// coins, incident edge labels, and labels/coins of path/edge neighbors.
// Anything else throws, so checks stay local by construction.
class LocalView {
public:
  LocalView(const Network& net, const Transcript& t, uint32_t v);

  uint32_t self() const { return v_; }
  const Network& net() const { return net_; }
  const Bits& input() const { return net_.inputs[v_]; }
  const std::vector<uint32_t>& marks() const { return net_.node_marks[v_]; }

  bool path_start() const { return net_.is_path_start(v_); }
  bool path_end() const { return net_.is_path_end(v_); }
  const std::vector<IncidentEdge>& incident() const { return net_.adj[v_]; }

  const Bits& label(uint32_t round, uint32_t node) const;
  const Bits& coins(uint32_t round, uint32_t node) const;
  const Bits& edge_label(uint32_t round, uint32_t edge_id) const;

  const Bits& my_label(uint32_t round) const { return label(round, v_); }
  const Bits& my_coins(uint32_t round) const { return coins(round, v_); }

  bool has_left() const { return !path_start(); }
  bool has_right() const { return !path_end(); }
  uint32_t left() const { return net_.left_neighbor(v_); }
  uint32_t right() const { return net_.right_neighbor(v_); }

private:
  bool visible(uint32_t node) const;
  const Network& net_;
  const Transcript& t_;
  uint32_t v_;
};

class Protocol {
public:
  virtual ~Protocol() = default;
  virtual const Network& net() const = 0;
  virtual std::string name() const = 0;
  virtual uint32_t num_rounds() const = 0;
  virtual RoundKind round_kind(uint32_t r) const = 0;
  virtual Schema schema(uint32_t r) const = 0;
  virtual void draw_coins(uint32_t r, const CoinPrf& prf,
                          const Transcript& t, Round& out) const = 0;
  virtual void honest_round(uint32_t r, const Transcript& t,
                            Round& out) const = 0;
  virtual bool decide_node(uint32_t v, const LocalView& view) const = 0;
};

// A prover strategy fills prover rounds. The default is the honest prover;
// adversarial strategies perturb protocol-specific claims.
class ProverStrategy {
public:
  virtual ~ProverStrategy() = default;
  virtual std::string name() const { return "honest"; }
  virtual void prover_round(const Protocol& proto, uint32_t r,
                            const Transcript& t, Round& out) {
    proto.honest_round(r, t, out);
  }
};

struct RunReport {
  bool accepted = false;
  bool width_violation = false;  // some prover message exceeded the schema
  std::vector<uint8_t> node_verdicts;
  uint32_t rounds = 0;
  uint32_t proof_size_bits = 0;      // max prover message width seen
  uint32_t coin_bits_max = 0;        // max coin message width seen
  uint32_t total_bits_per_node = 0;  // max over nodes of everything seen/sent
  std::vector<uint32_t> round_max_node_bits;
  std::vector<uint32_t> round_max_edge_bits;
};

RunReport run_protocol(const Protocol& proto, ProverStrategy* strategy,
                       uint64_t seed, Transcript* transcript_out = nullptr);

// Replays with the given coin rounds instead of drawing (coin rounds are
// matched to verifier rounds in order). Used for exhaustive enumeration.
RunReport run_with_forced_coins(const Protocol& proto, ProverStrategy* strategy,
                                const std::vector<std::vector<Bits>>& coins,
                                Transcript* transcript_out = nullptr);

// Decide only: evaluates every node on a finished transcript.
RunReport decide_transcript(const Protocol& proto, const Transcript& t);

std::string dump_transcript(const Protocol& proto, const Transcript& t);
Transcript parse_transcript(const Protocol& proto, const std::string& text);

}  // namespace lrdip
