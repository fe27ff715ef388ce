#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lrdip {

struct DirEdge {
  uint32_t tail = 0;
  uint32_t head = 0;
  bool operator==(const DirEdge& o) const {
    return tail == o.tail && head == o.head;
  }
};

// A directed graph together with a Hamiltonian path given as a node sequence.
// The decision question: does every non-path edge point forward along the
// path order? Instances carry the intended answer for bookkeeping.
struct LrInstance {
  uint32_t n = 0;
  std::vector<uint32_t> ham_path;  // permutation of 0..n-1
  std::vector<DirEdge> edges;      // includes the n-1 path edges
  bool label = true;               // intended answer

  // position of node v along the path (0-based)
  std::vector<uint32_t> positions() const;
};

struct InstanceParams {
  uint32_t n = 16;
  uint64_t seed = 1;
  double density = 0.5;     // target chords as a fraction of n-2
  uint32_t violations = 1;  // reversed chords in no-instances
};

LrInstance generate_yes_instance(const InstanceParams& p);
LrInstance generate_no_instance(const InstanceParams& p);

// Ground truth by direct position comparison on every non-path edge.
bool brute_force_decide(const LrInstance& inst);

std::string instance_to_json(const LrInstance& inst);
LrInstance instance_from_json(const std::string& text);

void save_instance(const LrInstance& inst, const std::string& path);
LrInstance load_instance(const std::string& path);

// Convenience: canonicalize edge order (path edges in path order, then
// chords sorted by endpoint positions). Generators emit canonical form.
void canonicalize(LrInstance& inst);

}  // namespace lrdip
