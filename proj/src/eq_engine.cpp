#include "lrdip/eq_engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrdip {

uint32_t EqEngine::add_instance(EqInstanceSpec spec) {
  if (finalized_) throw std::logic_error("engine already finalized");
  if (spec.a_bits.size() != spec.b_bits.size())
    throw std::invalid_argument("equality sides must have equal length");
  if (spec.a_span.empty() || spec.b_span.empty() || spec.q < 2)
    throw std::invalid_argument("bad equality instance");
  specs_.push_back(std::move(spec));
  return uint32_t(specs_.size() - 1);
}

void EqEngine::finalize(const Network& net, uint32_t verifier_round,
                        uint32_t prover_round) {
  vround_ = verifier_round;
  pround_ = prover_round;
  roles_.assign(net.n, {});
  label_width_.assign(net.n, 0);
  coin_width_.assign(net.n, 0);
  coin_of_.assign(net.n, {});
  meta_.clear();
  for (uint32_t id = 0; id < specs_.size(); ++id) {
    const EqInstanceSpec& s = specs_[id];
    InstMeta m;
    m.ell = uint32_t(s.a_bits.size());
    m.wq = bit_width_u64(s.q - 1);
    m.wi = bit_width_u64(m.ell);
    meta_.push_back(m);
    for (int side = 0; side < 2; ++side) {
      const auto& span = side ? s.b_span : s.a_span;
      const auto& bits = side ? s.b_bits : s.a_bits;
      for (uint32_t pos = 0; pos < span.size(); ++pos) {
        if (pos > 0) {
          if (net.is_path_start(span[pos]) ||
              net.left_neighbor(span[pos]) != span[pos - 1])
            throw std::invalid_argument("span must follow the spine");
        }
        roles_[span[pos]].push_back({id, uint8_t(side), pos, 0});
      }
      for (auto& b : bits) {
        bool hosted = false;
        for (auto u : span) hosted = hosted || u == b.node;
        if (!hosted) throw std::invalid_argument("bit host outside its span");
        if (b.kind == EqBitSource::LabelBit && b.round >= prover_round)
          throw std::invalid_argument("bit source must precede the round");
      }
    }
    const DirEdge& be = net.edges.at(s.bridge_edge);
    bool a_has = false, b_has = false;
    for (auto u : s.a_span) a_has = a_has || u == be.tail || u == be.head;
    for (auto u : s.b_span) b_has = b_has || u == be.tail || u == be.head;
    if (!a_has || !b_has)
      throw std::invalid_argument("bridge edge must join the two spans");
    coin_of_[s.a_span[0]].push_back(id);
  }
  for (uint32_t v = 0; v < net.n; ++v) {
    std::sort(roles_[v].begin(), roles_[v].end(),
              [](const Role& x, const Role& y) {
                return x.inst != y.inst ? x.inst < y.inst : x.side < y.side;
              });
    uint32_t off = 0;
    for (auto& r : roles_[v]) {
      r.offset = off;
      off += meta_[r.inst].role_bits();
    }
    label_width_[v] = off;
    uint32_t coff = 0;
    for (auto id : coin_of_[v]) coff += meta_[id].wq;
    coin_width_[v] = coff;
  }
  finalized_ = true;
}

uint32_t EqEngine::max_label_width() const {
  uint32_t w = 0;
  for (auto x : label_width_) w = std::max(w, x);
  return w;
}

uint32_t EqEngine::max_coin_width() const {
  uint32_t w = 0;
  for (auto x : coin_width_) w = std::max(w, x);
  return w;
}

void EqEngine::draw(const CoinPrf& prf, Round& out) const {
  if (out.coins.size() < coin_of_.size()) out.coins.resize(coin_of_.size());
  for (uint32_t v = 0; v < coin_of_.size(); ++v) {
    if (coin_of_[v].empty()) continue;
    Bits b;
    for (auto id : coin_of_[v]) {
      uint64_t r = prf.uniform_below(specs_[id].q, coin_stream(vround_, v, id));
      b.append_field(r, meta_[id].wq);
    }
    out.coins[v] = b;
  }
}

void EqEngine::force_coins(const std::vector<uint64_t>& points,
                           Round& out) const {
  if (points.size() != specs_.size())
    throw std::invalid_argument("need one point per instance");
  if (out.coins.size() < coin_of_.size()) out.coins.resize(coin_of_.size());
  for (uint32_t v = 0; v < coin_of_.size(); ++v) {
    if (coin_of_[v].empty()) continue;
    Bits b;
    for (auto id : coin_of_[v]) b.append_field(points[id], meta_[id].wq);
    out.coins[v] = b;
  }
}

uint64_t EqEngine::drawn_point(uint32_t inst, const Transcript& t) const {
  uint32_t drawer = specs_.at(inst).a_span[0];
  uint32_t off = 0;
  for (auto id : coin_of_.at(drawer)) {
    if (id == inst) return t.coin(vround_, drawer).field(off, meta_[inst].wq);
    off += meta_[id].wq;
  }
  throw std::logic_error("instance has no recorded draw");
}

int EqEngine::read_source(const EqBitSource& src, const Network& net,
                          const Transcript& t) const {
  switch (src.kind) {
    case EqBitSource::InputBit:
      return net.inputs[src.node].bit(src.offset);
    case EqBitSource::LabelBit:
      return t.node_label(src.round, src.node).bit(src.offset);
    case EqBitSource::ConstBit:
      return int(src.offset & 1);
  }
  return 0;
}

int EqEngine::read_source_local(const EqBitSource& src,
                                const LocalView& view) const {
  switch (src.kind) {
    case EqBitSource::InputBit:
      if (src.node != view.self())
        throw std::logic_error("bit source not local to its host");
      return view.input().bit(src.offset);
    case EqBitSource::LabelBit:
      return view.label(src.round, src.node).bit(src.offset);
    case EqBitSource::ConstBit:
      return int(src.offset & 1);
  }
  return 0;
}

uint64_t EqEngine::side_eval(uint32_t inst, bool b_side, uint64_t r,
                             const Network& net, const Transcript& t) const {
  const EqInstanceSpec& s = specs_.at(inst);
  const auto& bits = b_side ? s.b_bits : s.a_bits;
  return poly_eval_fn(s.q, r, uint32_t(bits.size()), [&](uint32_t i) {
    return read_source(bits[i - 1], net, t);
  });
}

void EqEngine::fill_honest(const Network& net, const Transcript& t,
                           Round& out) const {
  // per instance and side, walk the span once accumulating the chain values
  struct Cell {
    uint64_t z1, z3, z4;
    uint32_t z2;
  };
  std::vector<std::vector<Bits>> fields(net.n);
  for (uint32_t v = 0; v < net.n; ++v)
    fields[v].resize(roles_[v].size());

  for (uint32_t id = 0; id < specs_.size(); ++id) {
    const EqInstanceSpec& s = specs_[id];
    uint64_t r = drawn_point(id, t);
    for (int side = 0; side < 2; ++side) {
      const auto& span = side ? s.b_span : s.a_span;
      const auto& bits = side ? s.b_bits : s.a_bits;
      uint64_t full = side_eval(id, side == 1, r, net, t);
      std::vector<int> host_of(span.size(), -1);
      for (uint32_t i = 0; i < bits.size(); ++i)
        for (uint32_t p = 0; p < span.size(); ++p)
          if (span[p] == bits[i].node) host_of[p] = int(i);
      uint64_t z3 = 0;
      uint32_t z2 = 0;
      for (uint32_t p = 0; p < span.size(); ++p) {
        if (host_of[p] >= 0) {
          ++z2;
          int bit = read_source(bits[host_of[p]], net, t);
          if (bit) z3 = (z3 + mod_pow(r, z2, s.q)) % s.q;
        }
        uint32_t v = span[p];
        Bits f;
        f.append_field(r, meta_[id].wq);
        f.append_field(z2, meta_[id].wi);
        f.append_field(z3, meta_[id].wq);
        f.append_field(full, meta_[id].wq);
        for (uint32_t ri = 0; ri < roles_[v].size(); ++ri)
          if (roles_[v][ri].inst == id && roles_[v][ri].side == side)
            fields[v][ri] = f;
      }
    }
  }
  for (uint32_t v = 0; v < net.n; ++v) {
    Bits lab;
    for (uint32_t ri = 0; ri < roles_[v].size(); ++ri) {
      // roles without a filled field (impossible by construction) stay zero
      Bits& f = fields[v][ri];
      if (f.size() != meta_[roles_[v][ri].inst].role_bits())
        f.resize(meta_[roles_[v][ri].inst].role_bits());
      for (uint32_t i = 0; i < f.size(); ++i) lab.append_bit(f.bit(i));
    }
    if (lab.size()) out.node_labels[v] = lab;
  }
}

const EqEngine::Role* EqEngine::role_at(uint32_t v, uint32_t inst,
                                        uint8_t side) const {
  for (auto& r : roles_.at(v))
    if (r.inst == inst && r.side == side) return &r;
  return nullptr;
}

EqEngine::FieldRef EqEngine::field_ref(uint32_t inst, bool b_side, uint32_t pos,
                                       uint32_t field) const {
  const EqInstanceSpec& s = specs_.at(inst);
  const auto& span = b_side ? s.b_span : s.a_span;
  uint32_t v = span.at(pos);
  const Role* role = role_at(v, inst, uint8_t(b_side ? 1 : 0));
  if (!role) throw std::logic_error("role not found");
  const InstMeta& m = meta_[inst];
  uint32_t off = role->offset;
  uint32_t widths[4] = {m.wq, m.wi, m.wq, m.wq};
  for (uint32_t f = 0; f < field; ++f) off += widths[f];
  return {v, off, widths[field]};
}

bool EqEngine::check_node(uint32_t v, const LocalView& view) const {
  for (auto& role : roles_.at(v)) {
    const EqInstanceSpec& s = specs_[role.inst];
    const InstMeta& m = meta_[role.inst];
    const auto& span = role.side ? s.b_span : s.a_span;
    const auto& bits = role.side ? s.b_bits : s.a_bits;
    const Bits& lab = view.my_label(pround_);
    uint64_t z1 = lab.field(role.offset, m.wq);
    uint64_t z2 = lab.field(role.offset + m.wq, m.wi);
    uint64_t z3 = lab.field(role.offset + m.wq + m.wi, m.wq);
    uint64_t z4 = lab.field(role.offset + 2 * m.wq + m.wi, m.wq);
    if (z1 >= s.q || z3 >= s.q || z4 >= s.q || z2 > bits.size()) return false;

    int host_bit = -1;
    for (uint32_t i = 0; i < bits.size(); ++i)
      if (bits[i].node == v) host_bit = read_source_local(bits[i], view);

    uint64_t pz1 = 0, pz3 = 0, pz4 = 0;
    uint64_t pz2 = 0;
    if (role.pos > 0) {
      uint32_t prev = span[role.pos - 1];
      const Role* prole = role_at(prev, role.inst, role.side);
      const Bits& plab = view.label(pround_, prev);
      pz1 = plab.field(prole->offset, m.wq);
      pz2 = plab.field(prole->offset + m.wq, m.wi);
      pz3 = plab.field(prole->offset + m.wq + m.wi, m.wq);
      pz4 = plab.field(prole->offset + 2 * m.wq + m.wi, m.wq);
      if (z1 != pz1 || z4 != pz4) return false;
    }
    if (host_bit >= 0) {
      if (z2 != pz2 + 1) return false;
      uint64_t expect = pz3;
      if (host_bit)
        expect = (expect + mod_pow(z1, z2, s.q)) % s.q;
      if (z3 != expect) return false;
    } else {
      if (z2 != pz2 || z3 != pz3) return false;
    }
    if (role.pos + 1 == span.size()) {
      if (z3 != z4) return false;
    }
    // the drawing node ties the point echo to its own coins
    if (role.side == 0 && role.pos == 0) {
      uint32_t off = 0;
      bool found = false;
      for (auto id : coin_of_.at(v)) {
        if (id == role.inst) {
          if (view.my_coins(vround_).field(off, m.wq) != z1) return false;
          found = true;
          break;
        }
        off += meta_[id].wq;
      }
      if (!found) return false;
    }
    // bridge comparison, evaluated from both endpoints
    const DirEdge& be = view.net().edges[s.bridge_edge];
    if (be.tail == v || be.head == v) {
      uint32_t other = be.tail == v ? be.head : be.tail;
      uint8_t oside = uint8_t(1 - role.side);
      const Role* orole = role_at(other, role.inst, oside);
      if (orole) {
        const Bits& olab = view.label(pround_, other);
        uint64_t oz1 = olab.field(orole->offset, m.wq);
        uint64_t oz4 = olab.field(orole->offset + 2 * m.wq + m.wi, m.wq);
        if (z1 != oz1 || z4 != oz4) return false;
      }
    }
  }
  return true;
}

}  // namespace lrdip

#include "lrdip/eq2.hpp"

namespace lrdip {

uint64_t Eq2Protocol::field_prime(uint32_t ell) {
  uint64_t lo = uint64_t(ell) * ell;
  uint64_t p = smallest_prime_in(lo, 2 * lo);
  if (!p) p = next_prime_at_least(lo);
  return p;
}

Eq2Protocol::Eq2Protocol(uint32_t ell, uint32_t gap, const Bits& alpha,
                         const Bits& beta)
    : ell_(ell), gap_(gap) {
  if (ell < 1 || gap < 1) throw std::invalid_argument("bad geometry");
  if (alpha.size() != ell || beta.size() != ell)
    throw std::invalid_argument("string width mismatch");
  q_ = field_prime(ell);
  uint32_t side = ell * gap;
  net_.n = 2 * side;
  for (uint32_t i = 0; i + 1 < side; ++i) net_.add_edge(i, i + 1, true);
  for (uint32_t i = side; i + 1 < 2 * side; ++i) net_.add_edge(i, i + 1, true);
  uint32_t bridge = net_.add_edge(0, side, false, true);
  net_.inputs.resize(net_.n);
  for (uint32_t i = 0; i < ell; ++i) {
    net_.inputs[i * gap].append_bit(alpha.bit(i));
    net_.inputs[side + i * gap].append_bit(beta.bit(i));
  }
  for (uint32_t v = 0; v < net_.n; ++v)
    if (net_.inputs[v].size() == 0) net_.inputs[v].resize(1);
  net_.finalize();

  EqInstanceSpec spec;
  spec.q = q_;
  spec.bridge_edge = bridge;
  for (uint32_t v = 0; v < side; ++v) spec.a_span.push_back(v);
  for (uint32_t v = side; v < 2 * side; ++v) spec.b_span.push_back(v);
  for (uint32_t i = 0; i < ell; ++i) {
    spec.a_bits.push_back({EqBitSource::InputBit, i * gap, 0, 0});
    spec.b_bits.push_back({EqBitSource::InputBit, side + i * gap, 0, 0});
  }
  eng_.add_instance(std::move(spec));
  eng_.finalize(net_, 0, 1);
}

Schema Eq2Protocol::schema(uint32_t r) const {
  if (r == 0) return {0, 0};
  return {eng_.max_label_width(), 0};
}

void Eq2Protocol::draw_coins(uint32_t r, const CoinPrf& prf,
                             const Transcript&, Round& out) const {
  if (r == 0) eng_.draw(prf, out);
}

void Eq2Protocol::honest_round(uint32_t r, const Transcript& t,
                               Round& out) const {
  if (r == 1) eng_.fill_honest(net_, t, out);
}

bool Eq2Protocol::decide_node(uint32_t v, const LocalView& view) const {
  return eng_.check_node(v, view);
}

void eq_pair(uint32_t ell, uint64_t seed, bool equal, Bits& alpha, Bits& beta) {
  CoinPrf prf(seed ^ 0xe91ULL);
  alpha = prf.draw_bits(ell, 11);
  beta = alpha;
  if (!equal) {
    uint32_t flips = 1 + uint32_t(prf.uniform_below(ell, 12)) / 2;
    for (uint32_t k = 0; k < flips; ++k)
      beta.flip_bit(uint32_t(prf.uniform_below(ell, 13 + k)));
    if (beta == alpha) beta.flip_bit(0);
  }
}

}  // namespace lrdip
