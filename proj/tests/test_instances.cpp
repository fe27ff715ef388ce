#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrdip/instance.hpp"

using namespace lrdip;

namespace {

// independent crossing check on chord position pairs
bool chords_cross(const LrInstance& inst) {
  auto pos = inst.positions();
  std::vector<std::pair<uint32_t, uint32_t>> ch;
  for (auto& e : inst.edges) {
    uint32_t a = pos[e.tail], b = pos[e.head];
    if (b == a + 1) continue;
    if (a > b) std::swap(a, b);
    ch.push_back({a, b});
  }
  for (size_t i = 0; i < ch.size(); ++i)
    for (size_t j = i + 1; j < ch.size(); ++j) {
      auto [a1, b1] = ch[i];
      auto [a2, b2] = ch[j];
      if (a1 > a2) {
        std::swap(a1, a2);
        std::swap(b1, b2);
      }
      if (a1 < a2 && a2 < b1 && b1 < b2) return true;
    }
  return false;
}

}  // namespace

TEST_CASE("hand built instances decide correctly") {
  LrInstance inst;
  inst.n = 4;
  inst.ham_path = {2, 0, 3, 1};
  inst.edges = {{2, 0}, {0, 3}, {3, 1}, {2, 1}};  // chord 2->1 forward
  CHECK(brute_force_decide(inst));
  inst.edges[3] = {1, 2};  // reversed: position 3 -> position 0
  CHECK_FALSE(brute_force_decide(inst));
}

TEST_CASE("generated yes instances satisfy the order condition") {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    InstanceParams p;
    p.n = 10 + uint32_t(seed % 50);
    p.seed = seed;
    LrInstance inst = generate_yes_instance(p);
    CHECK(inst.label);
    CHECK(brute_force_decide(inst));
    CHECK_FALSE(chords_cross(inst));
  }
}

TEST_CASE("generated no instances violate the order condition") {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    InstanceParams p;
    p.n = 10 + uint32_t(seed % 50);
    p.seed = seed;
    p.violations = 1 + uint32_t(seed % 3);
    LrInstance inst = generate_no_instance(p);
    CHECK_FALSE(inst.label);
    CHECK_FALSE(brute_force_decide(inst));
  }
}

TEST_CASE("generation is deterministic in the seed") {
  InstanceParams p;
  p.n = 32;
  p.seed = 99;
  std::string j1 = instance_to_json(generate_yes_instance(p));
  std::string j2 = instance_to_json(generate_yes_instance(p));
  CHECK(j1 == j2);
  p.seed = 100;
  CHECK(j1 != instance_to_json(generate_yes_instance(p)));
}

TEST_CASE("json roundtrip preserves the instance") {
  InstanceParams p;
  p.n = 24;
  p.seed = 5;
  LrInstance inst = generate_no_instance(p);
  LrInstance back = instance_from_json(instance_to_json(inst));
  CHECK(back.n == inst.n);
  CHECK(back.ham_path == inst.ham_path);
  CHECK(back.label == inst.label);
  CHECK(back.edges.size() == inst.edges.size());
  CHECK(brute_force_decide(back) == brute_force_decide(inst));
  CHECK(instance_to_json(back) == instance_to_json(inst));
}

TEST_CASE("json rejects malformed paths") {
  CHECK_THROWS(instance_from_json(
      R"({"n":3,"ham_path":[0,1],"edges":[[0,1],[1,2]],"label":"yes"})"));
  CHECK_THROWS(instance_from_json(
      R"({"n":3,"ham_path":[0,1,1],"edges":[[0,1],[1,1]],"label":"yes"})"));
}

TEST_CASE("brute force insists on the path edges") {
  LrInstance inst;
  inst.n = 3;
  inst.ham_path = {0, 1, 2};
  inst.edges = {{0, 1}};  // missing 1->2
  CHECK_THROWS(brute_force_decide(inst));
}
