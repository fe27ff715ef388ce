#pragma once

#include <cstdint>
#include <vector>

#include "lrdip/bits.hpp"
#include "lrdip/instance.hpp"

namespace lrdip {

struct IncidentEdge {
  uint32_t edge_id = 0;
  uint32_t peer = 0;
  bool outgoing = false;  // edge tail is this node
};

// Communication graph a protocol runs on. Node inputs and per-edge structural
// flags (path membership, bridge marks) are common knowledge at both
// endpoints; everything else a node learns arrives through labels and coins.
struct Network {
  uint32_t n = 0;
  std::vector<DirEdge> edges;
  std::vector<uint8_t> path_edge;  // structural: part of the spine path
  std::vector<uint8_t> bridge;     // structural: designated bridge edges
  std::vector<Bits> inputs;        // per node
  std::vector<std::vector<uint32_t>> node_marks;  // structural grid data
  std::vector<std::vector<IncidentEdge>> adj;

  void finalize();  // builds adjacency; call after filling edges

  uint32_t add_edge(uint32_t tail, uint32_t head, bool on_path,
                    bool is_bridge = false) {
    edges.push_back({tail, head});
    path_edge.push_back(on_path ? 1 : 0);
    bridge.push_back(is_bridge ? 1 : 0);
    return uint32_t(edges.size() - 1);
  }

  // Spine helpers: the unique incident path edge pointing in/out, or -1.
  int left_path_edge(uint32_t v) const;   // path edge with head == v
  int right_path_edge(uint32_t v) const;  // path edge with tail == v
  bool is_path_start(uint32_t v) const { return left_path_edge(v) < 0; }
  bool is_path_end(uint32_t v) const { return right_path_edge(v) < 0; }
  uint32_t left_neighbor(uint32_t v) const;   // valid iff !is_path_start
  uint32_t right_neighbor(uint32_t v) const;  // valid iff !is_path_end

  // Single path of `count` nodes 0 -> 1 -> ... with empty inputs.
  static Network line(uint32_t count);

  // From an LR instance: nodes renumbered by path position, so node i is the
  // i-th node along the spine. Chords keep their direction.
  static Network from_instance(const LrInstance& inst);
};

}  // namespace lrdip
