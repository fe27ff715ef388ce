#include "lrdip/network.hpp"

#include <stdexcept>

namespace lrdip {

void Network::finalize() {
  if (inputs.size() != n) inputs.resize(n);
  if (node_marks.size() != n) node_marks.resize(n);
  adj.assign(n, {});
  for (uint32_t e = 0; e < edges.size(); ++e) {
    adj[edges[e].tail].push_back({e, edges[e].head, true});
    adj[edges[e].head].push_back({e, edges[e].tail, false});
  }
}

int Network::left_path_edge(uint32_t v) const {
  for (auto& ie : adj[v])
    if (!ie.outgoing && path_edge[ie.edge_id]) return int(ie.edge_id);
  return -1;
}

int Network::right_path_edge(uint32_t v) const {
  for (auto& ie : adj[v])
    if (ie.outgoing && path_edge[ie.edge_id]) return int(ie.edge_id);
  return -1;
}

uint32_t Network::left_neighbor(uint32_t v) const {
  int e = left_path_edge(v);
  if (e < 0) throw std::logic_error("no left neighbor");
  return edges[e].tail;
}

uint32_t Network::right_neighbor(uint32_t v) const {
  int e = right_path_edge(v);
  if (e < 0) throw std::logic_error("no right neighbor");
  return edges[e].head;
}

Network Network::line(uint32_t count) {
  Network net;
  net.n = count;
  for (uint32_t i = 0; i + 1 < count; ++i) net.add_edge(i, i + 1, true);
  net.finalize();
  return net;
}

Network Network::from_instance(const LrInstance& inst) {
  auto pos = inst.positions();
  Network net;
  net.n = inst.n;
  for (uint32_t i = 0; i + 1 < inst.n; ++i) net.add_edge(i, i + 1, true);
  for (auto& e : inst.edges) {
    uint32_t pt = pos[e.tail], ph = pos[e.head];
    if (ph == pt + 1) continue;  // spine edge already present
    net.add_edge(pt, ph, false);
  }
  net.finalize();
  return net;
}

}  // namespace lrdip
