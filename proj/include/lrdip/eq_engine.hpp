#pragma once

#include <cstdint>
#include <vector>

#include "lrdip/numtheory.hpp"
#include "lrdip/runtime.hpp"

namespace lrdip {

// Where the verifier (and honest prover) reads a claimed string bit.
// The host node must be able to read it locally: its own input bit or its
// own label bit from an earlier round.
struct EqBitSource {
  enum Kind { InputBit, LabelBit, ConstBit } kind = InputBit;
  uint32_t node = 0;
  uint32_t round = 0;   // LabelBit only
  uint32_t offset = 0;  // input index / label bit offset / constant value
};

// One equality sub-instance: two strings of equal length spread over two
// contiguous path runs, compared through a fingerprint at a random point
// drawn by the first node of side A, with the claim carried across a
// designated bridge edge between the two runs.
struct EqInstanceSpec {
  std::vector<uint32_t> a_span, b_span;     // contiguous along the spine
  std::vector<EqBitSource> a_bits, b_bits;  // hosts must lie in the spans
  uint32_t bridge_edge = 0;
  uint64_t q = 0;
};

// Pools any number of equality sub-instances into one verifier round (point
// draws) plus one prover round (per-node relay fields). Per role a node
// carries four fields: the point echo, the running host count, the running
// prefix evaluation, and the claimed full evaluation of its side.
class EqEngine {
public:
  uint32_t add_instance(EqInstanceSpec spec);
  void finalize(const Network& net, uint32_t verifier_round,
                uint32_t prover_round);

  uint32_t num_instances() const { return uint32_t(specs_.size()); }
  const EqInstanceSpec& spec(uint32_t id) const { return specs_.at(id); }
  uint32_t verifier_round() const { return vround_; }
  uint32_t prover_round() const { return pround_; }

  uint32_t label_width(uint32_t v) const { return label_width_.at(v); }
  uint32_t coin_width(uint32_t v) const { return coin_width_.at(v); }
  uint32_t max_label_width() const;
  uint32_t max_coin_width() const;

  void draw(const CoinPrf& prf, Round& out) const;
  // Coin round with chosen points (indexed by instance), for enumeration.
  void force_coins(const std::vector<uint64_t>& points, Round& out) const;

  void fill_honest(const Network& net, const Transcript& t, Round& out) const;
  bool check_node(uint32_t v, const LocalView& view) const;

  uint64_t drawn_point(uint32_t inst, const Transcript& t) const;
  uint64_t side_eval(uint32_t inst, bool b_side, uint64_t r,
                     const Network& net, const Transcript& t) const;

  struct FieldRef {
    uint32_t node = 0;
    uint32_t offset = 0;
    uint32_t width = 0;
  };
  // field: 0 point echo, 1 host count, 2 prefix eval, 3 full eval
  FieldRef field_ref(uint32_t inst, bool b_side, uint32_t pos,
                     uint32_t field) const;

private:
  struct Role {
    uint32_t inst = 0;
    uint8_t side = 0;  // 0 = A, 1 = B
    uint32_t pos = 0;
    uint32_t offset = 0;  // label bit offset at this node
  };
  struct InstMeta {
    uint32_t wq = 0;  // field width for point/eval values
    uint32_t wi = 0;  // field width for the host counter
    uint32_t ell = 0;
    uint32_t role_bits() const { return 3 * wq + wi; }
  };

  int read_source(const EqBitSource& src, const Network& net,
                  const Transcript& t) const;
  int read_source_local(const EqBitSource& src, const LocalView& view) const;
  const Role* role_at(uint32_t v, uint32_t inst, uint8_t side) const;

  std::vector<EqInstanceSpec> specs_;
  std::vector<InstMeta> meta_;
  std::vector<std::vector<Role>> roles_;        // per node, sorted by inst
  std::vector<uint32_t> label_width_;           // per node
  std::vector<uint32_t> coin_width_;            // per node
  std::vector<std::vector<uint32_t>> coin_of_;  // per node: drawn inst ids
  uint32_t vround_ = 0, pround_ = 0;
  bool finalized_ = false;
};

}  // namespace lrdip
