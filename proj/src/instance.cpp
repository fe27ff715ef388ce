#include "lrdip/instance.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "lrdip/rng.hpp"

namespace lrdip {

std::vector<uint32_t> LrInstance::positions() const {
  std::vector<uint32_t> pos(n, 0);
  for (uint32_t i = 0; i < ham_path.size(); ++i) pos[ham_path[i]] = i;
  return pos;
}

namespace {

// Chords are kept as (i, j) position pairs with i + 1 < j. Two chords drawn
// above the path line cross iff one's left endpoint lies strictly inside the
// other and its right endpoint strictly outside.
bool crosses(std::pair<uint32_t, uint32_t> a, std::pair<uint32_t, uint32_t> b) {
  if (a.first > b.first) std::swap(a, b);
  return a.first < b.first && b.first < a.second && a.second < b.second;
}

std::vector<std::pair<uint32_t, uint32_t>> draw_noncrossing_chords(
    uint32_t n, uint64_t seed, double density) {
  std::vector<std::pair<uint32_t, uint32_t>> chords;
  if (n < 3) return chords;
  std::set<std::pair<uint32_t, uint32_t>> used;
  uint32_t target = uint32_t(density * double(n - 2));
  CoinPrf prf(seed ^ 0x1c0de5ULL);
  uint64_t attempts = uint64_t(target) * 40 + 64;
  for (uint64_t a = 0; a < attempts && chords.size() < target; ++a) {
    uint32_t i = uint32_t(prf.uniform_below(n - 2, a * 2));
    uint32_t span = n - i - 2;  // choices for j in (i+1, n)
    uint32_t j = i + 2 + uint32_t(prf.uniform_below(span, a * 2 + 1));
    std::pair<uint32_t, uint32_t> c{i, j};
    if (used.count(c)) continue;
    bool ok = true;
    for (auto& e : chords)
      if (crosses(e, c)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chords.push_back(c);
    used.insert(c);
  }
  return chords;
}

std::vector<uint32_t> random_permutation(uint32_t n, uint64_t seed) {
  std::vector<uint32_t> perm(n);
  for (uint32_t i = 0; i < n; ++i) perm[i] = i;
  CoinPrf prf(seed ^ 0x9e37ULL);
  for (uint32_t i = n; i > 1; --i) {
    uint32_t j = uint32_t(prf.uniform_below(i, i));
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

LrInstance assemble(uint32_t n, uint64_t seed,
                    const std::vector<std::pair<uint32_t, uint32_t>>& chords,
                    const std::vector<bool>& reversed, bool label) {
  LrInstance inst;
  inst.n = n;
  inst.label = label;
  inst.ham_path = random_permutation(n, seed);
  for (uint32_t i = 0; i + 1 < n; ++i)
    inst.edges.push_back({inst.ham_path[i], inst.ham_path[i + 1]});
  for (uint32_t c = 0; c < chords.size(); ++c) {
    uint32_t u = inst.ham_path[chords[c].first];
    uint32_t v = inst.ham_path[chords[c].second];
    if (reversed[c])
      inst.edges.push_back({v, u});
    else
      inst.edges.push_back({u, v});
  }
  return inst;
}

}  // namespace

LrInstance generate_yes_instance(const InstanceParams& p) {
  if (p.n < 2) throw std::invalid_argument("need n >= 2");
  auto chords = draw_noncrossing_chords(p.n, p.seed, p.density);
  std::vector<bool> rev(chords.size(), false);
  return assemble(p.n, p.seed, chords, rev, true);
}

LrInstance generate_no_instance(const InstanceParams& p) {
  if (p.n < 3) throw std::invalid_argument("need n >= 3 for a violation");
  auto chords = draw_noncrossing_chords(p.n, p.seed, p.density);
  uint32_t need = std::max<uint32_t>(p.violations, 1);
  // make sure there are enough chords to reverse
  CoinPrf prf(p.seed ^ 0xbadcULL);
  uint64_t extra = 0;
  while (chords.size() < need) {
    uint32_t i = uint32_t(prf.uniform_below(p.n - 2, 900 + extra * 2));
    uint32_t j =
        i + 2 + uint32_t(prf.uniform_below(p.n - i - 2, 901 + extra * 2));
    ++extra;
    std::pair<uint32_t, uint32_t> c{i, j};
    bool dup = false;
    for (auto& e : chords) dup = dup || e == c;
    bool ok = !dup;
    for (auto& e : chords) ok = ok && !crosses(e, c);
    if (ok) chords.push_back(c);
    if (extra > 4000) break;
  }
  if (chords.size() < need)
    throw std::runtime_error("could not place requested violations");
  std::vector<bool> rev(chords.size(), false);
  // reverse a deterministic random subset of the requested size
  std::vector<uint32_t> order(chords.size());
  for (uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  for (uint32_t i = uint32_t(order.size()); i > 1; --i) {
    uint32_t j = uint32_t(prf.uniform_below(i, 7000 + i));
    std::swap(order[i - 1], order[j]);
  }
  for (uint32_t k = 0; k < need; ++k) rev[order[k]] = true;
  return assemble(p.n, p.seed, chords, rev, false);
}

bool brute_force_decide(const LrInstance& inst) {
  auto pos = inst.positions();
  for (uint32_t i = 0; i + 1 < inst.n; ++i) {
    // instance must actually contain the path edges
    bool found = false;
    for (auto& e : inst.edges)
      found = found ||
              (e.tail == inst.ham_path[i] && e.head == inst.ham_path[i + 1]);
    if (!found) throw std::invalid_argument("missing path edge");
  }
  for (auto& e : inst.edges) {
    if (pos[e.head] == pos[e.tail] + 1) continue;  // path edge
    if (pos[e.tail] > pos[e.head]) return false;
  }
  return true;
}

void canonicalize(LrInstance& inst) {
  auto pos = inst.positions();
  std::vector<DirEdge> path_edges, chords;
  for (auto& e : inst.edges) {
    if (pos[e.head] == pos[e.tail] + 1)
      path_edges.push_back(e);
    else
      chords.push_back(e);
  }
  std::sort(path_edges.begin(), path_edges.end(),
            [&](const DirEdge& a, const DirEdge& b) {
              return pos[a.tail] < pos[b.tail];
            });
  std::sort(chords.begin(), chords.end(),
            [&](const DirEdge& a, const DirEdge& b) {
              uint32_t la = std::min(pos[a.tail], pos[a.head]);
              uint32_t lb = std::min(pos[b.tail], pos[b.head]);
              uint32_t ra = std::max(pos[a.tail], pos[a.head]);
              uint32_t rb = std::max(pos[b.tail], pos[b.head]);
              return la != lb ? la < lb : ra < rb;
            });
  inst.edges = path_edges;
  inst.edges.insert(inst.edges.end(), chords.begin(), chords.end());
}

std::string instance_to_json(const LrInstance& inst) {
  LrInstance copy = inst;
  canonicalize(copy);
  nlohmann::ordered_json j;
  j["n"] = copy.n;
  j["ham_path"] = copy.ham_path;
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (auto& e : copy.edges)
    edges.push_back(nlohmann::ordered_json::array({e.tail, e.head}));
  j["edges"] = edges;
  j["label"] = copy.label ? "yes" : "no";
  return j.dump(2) + "\n";
}

LrInstance instance_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  LrInstance inst;
  inst.n = j.at("n").get<uint32_t>();
  inst.ham_path = j.at("ham_path").get<std::vector<uint32_t>>();
  for (auto& e : j.at("edges"))
    inst.edges.push_back({e.at(0).get<uint32_t>(), e.at(1).get<uint32_t>()});
  if (j.contains("label")) inst.label = j["label"].get<std::string>() == "yes";
  if (inst.ham_path.size() != inst.n)
    throw std::invalid_argument("ham_path must list every node once");
  std::vector<bool> seen(inst.n, false);
  for (auto v : inst.ham_path) {
    if (v >= inst.n || seen[v])
      throw std::invalid_argument("ham_path must be a permutation");
    seen[v] = true;
  }
  return inst;
}

void save_instance(const LrInstance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << instance_to_json(inst);
}

LrInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return instance_from_json(ss.str());
}

}  // namespace lrdip
