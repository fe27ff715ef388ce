#include "lrdip/mult.hpp"

#include <stdexcept>

namespace lrdip {

namespace {

// field indices within a machinery block (one bit each per node)
enum : uint32_t {
  F_SHIFT = 0,   // multiplicand shifted for this cluster
  F_MUL = 1,     // multiplier replica
  F_TGT = 2,     // claimed product target
  F_LOW = 3,     // multiplier low bits through this cluster
  F_LOWP = 4,    // multiplier low bits through the previous cluster
  F_HOT = 5,     // the single multiplier bit in shifted position
  F_PP = 6,      // partial product of this cluster
  F_ACC = 7,     // incoming accumulator
  F_OUT = 8,     // outgoing accumulator
  F_MBIT = 9,    // broadcast multiplier bit
  F_CARRY = 10,  // carry track for acc + pp
  MACH_FIELDS = 11
};

uint64_t low_mask(uint32_t bits) {
  return bits >= 64 ? ~uint64_t(0) : ((uint64_t(1) << bits) - 1);
}

}  // namespace

MultProtocol::MultProtocol(uint32_t w, uint64_t a, uint64_t b, uint64_t c) {
  build(w, a, b, c, 0);
}

MultProtocol::MultProtocol(uint32_t w, uint64_t a, uint64_t b, uint64_t c,
                           uint64_t m) {
  if (m < 2 || a >= m || b >= m || c >= m)
    throw std::invalid_argument("modular operands must be reduced");
  build(w, a, b, c, m);
}

void MultProtocol::build(uint32_t w, uint64_t a, uint64_t b, uint64_t c,
                         uint64_t m) {
  if (w < 2 || w > 16) throw std::invalid_argument("width out of range");
  w_ = w;
  cw_ = 2 * w;
  modular_ = m != 0;
  a_ = a;
  b_ = b;
  c_ = c;
  m_ = m;
  // quotient witness: for true claims (a*b - c) / m exactly
  if (modular_) {
    uint64_t prod = a * b;
    k_ = prod / m;
    if (prod % m == c) k_ = (prod - c) / m;
  }
  fields_ = modular_ ? 2 * MACH_FIELDS + 1 : MACH_FIELDS;

  net_.n = w * cw_;
  for (uint32_t v = 0; v + 1 < net_.n; ++v) net_.add_edge(v, v + 1, true);
  net_.inputs.resize(net_.n);
  net_.node_marks.resize(net_.n);
  for (uint32_t v = 0; v < net_.n; ++v) {
    uint32_t i = v / cw_ + 1, j = v % cw_ + 1;
    Bits in;
    in.append_bit(int((a >> (cw_ - j)) & 1));
    in.append_bit(int((b >> (cw_ - j)) & 1));
    in.append_bit(int((c >> (cw_ - j)) & 1));
    in.append_bit(modular_ ? int((m >> (cw_ - j)) & 1) : 0);
    net_.inputs[v] = in;
    net_.node_marks[v] = {i, j};
  }
  net_.finalize();

  uint64_t q = next_prime_at_least(2 * uint64_t(cw_) * cw_);
  uint32_t machineries = modular_ ? 2 : 1;
  for (uint32_t i = 2; i <= w_; ++i) {
    uint32_t prev0 = (i - 2) * cw_, cur0 = (i - 1) * cw_;
    uint32_t bridge = prev0 + cw_ - 1;  // path edge ids match left node ids
    for (uint32_t mach = 0; mach < machineries; ++mach) {
      uint32_t base = mach * MACH_FIELDS;
      auto make = [&](uint32_t fa, uint32_t fb, uint32_t a_from, uint32_t a_to,
                      uint32_t b_from, uint32_t b_to) {
        EqInstanceSpec spec;
        spec.q = q;
        spec.bridge_edge = bridge;
        for (uint32_t j = 1; j <= cw_; ++j) {
          spec.a_span.push_back(prev0 + j - 1);
          spec.b_span.push_back(cur0 + j - 1);
        }
        for (uint32_t j = a_from; j <= a_to; ++j)
          spec.a_bits.push_back(
              {EqBitSource::LabelBit, prev0 + j - 1, 0, base + fa});
        for (uint32_t j = b_from; j <= b_to; ++j)
          spec.b_bits.push_back(
              {EqBitSource::LabelBit, cur0 + j - 1, 0, base + fb});
        eng_.add_instance(std::move(spec));
      };
      make(F_SHIFT, F_SHIFT, 2, cw_, 1, cw_ - 1);  // shifted by one
      make(F_MUL, F_MUL, 1, cw_, 1, cw_);
      make(F_TGT, F_TGT, 1, cw_, 1, cw_);
      make(F_LOW, F_LOWP, 1, cw_, 1, cw_);  // low(i-1) feeds lowp(i)
      make(F_OUT, F_ACC, 1, cw_, 1, cw_);   // out(i-1) feeds acc(i)
    }
  }
  eng_.finalize(net_, 1, 2);
}

Schema MultProtocol::schema(uint32_t r) const {
  if (r == 0) return {fields_, 0};
  if (r == 1) return {0, 0};
  return {eng_.max_label_width(), 0};
}

void MultProtocol::draw_coins(uint32_t r, const CoinPrf& prf, const Transcript&,
                              Round& out) const {
  if (r == 1) eng_.draw(prf, out);
}

void MultProtocol::honest_round(uint32_t r, const Transcript& t,
                                Round& out) const {
  if (r == 2) {
    eng_.fill_honest(net_, t, out);
    return;
  }
  if (r != 0) return;
  // per-cluster machinery values; written bitwise MSB first
  for (uint32_t v = 0; v < net_.n; ++v) {
    uint32_t i = v / cw_ + 1, j = v % cw_ + 1;
    uint32_t shift = cw_ - j;  // bit of a 2w-wide value at this node
    Bits lab;
    auto emit_mach = [&](uint64_t mc, uint64_t mul, uint64_t tgt) {
      uint64_t z1 = mc << (i - 1);
      uint64_t z4 = mul & low_mask(i);
      uint64_t z5 = mul & low_mask(i - 1);
      int mbit = int((mul >> (i - 1)) & 1);
      uint64_t z6 = uint64_t(mbit) << (i - 1);
      uint64_t z7 = mbit ? z1 : 0;
      uint64_t z8 = mc * z5;
      uint64_t z9 = z8 + z7;
      // carry out of each bit position of z8 + z7
      uint64_t carries = (z8 + z7) ^ z8 ^ z7;
      carries >>= 1;  // carry out of position p equals carry into p+1
      lab.append_bit(int((z1 >> shift) & 1));
      lab.append_bit(int((mul >> shift) & 1));
      lab.append_bit(int((tgt >> shift) & 1));
      lab.append_bit(int((z4 >> shift) & 1));
      lab.append_bit(int((z5 >> shift) & 1));
      lab.append_bit(int((z6 >> shift) & 1));
      lab.append_bit(int((z7 >> shift) & 1));
      lab.append_bit(int((z8 >> shift) & 1));
      lab.append_bit(int((z9 >> shift) & 1));
      lab.append_bit(mbit);
      lab.append_bit(int((carries >> shift) & 1));
    };
    uint64_t s = a_ * b_;
    if (!modular_) {
      emit_mach(a_, b_, c_);
    } else {
      uint64_t tqt = k_ * m_;
      emit_mach(a_, b_, s);
      emit_mach(m_, k_, tqt);
      uint64_t carries = (tqt + c_) ^ tqt ^ c_;
      carries >>= 1;
      lab.append_bit(int((carries >> shift) & 1));
    }
    out.node_labels[v] = lab;
  }
}

bool MultProtocol::check_machinery(const LocalView& view, uint32_t base,
                                   bool second, uint32_t i, uint32_t j) const {
  const Bits& lab = view.my_label(0);
  uint32_t p = cw_ - j + 1;  // position from the right, 1-based
  int z1 = lab.bit(base + F_SHIFT), z2 = lab.bit(base + F_MUL);
  int z3 = lab.bit(base + F_TGT), z4 = lab.bit(base + F_LOW);
  int z5 = lab.bit(base + F_LOWP), z6 = lab.bit(base + F_HOT);
  int z7 = lab.bit(base + F_PP), z8 = lab.bit(base + F_ACC);
  int z9 = lab.bit(base + F_OUT), mb = lab.bit(base + F_MBIT);
  int carry = lab.bit(base + F_CARRY);

  // multiplier replica: first machinery reads the instance input, the
  // second one replicates the claimed quotient (high half must be zero)
  if (!second) {
    if (z2 != view.input().bit(1)) return false;
  } else {
    if (p > w_ && z2 != 0) return false;
  }
  // shifted multiplicand: grounded in cluster 1, zero under the shift
  if (i == 1 && z1 != (second ? view.input().bit(3) : view.input().bit(0)))
    return false;
  if (p < i && z1 != 0) return false;
  if (j == 1 && z1 != 0) return false;
  // low-bit windows of the multiplier
  if (z4 != (p <= i ? z2 : 0)) return false;
  if (z5 != (p <= i - 1 ? z2 : 0)) return false;
  if (z6 != (p == i ? mb : 0)) return false;
  // broadcast multiplier bit: constant in the cluster, anchored at p == i
  if (j > 1 && view.label(0, view.left()).bit(base + F_MBIT) != mb)
    return false;
  if (p == i && mb != z2) return false;
  // partial product
  if (z7 != (mb ? z1 : 0)) return false;
  if (i == 1 && z8 != 0) return false;
  // accumulator addition out = acc + pp
  int cin = (j == cw_) ? 0 : view.label(0, view.right()).bit(base + F_CARRY);
  if (z9 != (z8 ^ z7 ^ cin)) return false;
  if (carry != ((z8 + z7 + cin) >= 2 ? 1 : 0)) return false;
  if (j == 1 && carry != 0) return false;
  // product lands in the target track at the last cluster
  if (i == w_) {
    if (z9 != z3) return false;
    if (z4 != z2) return false;
  }
  // plain form: the target is the instance input everywhere
  if (!modular_ && !second && z3 != view.input().bit(2)) return false;
  return true;
}

bool MultProtocol::decide_node(uint32_t v, const LocalView& view) const {
  uint32_t i = view.marks()[0], j = view.marks()[1];
  if (!check_machinery(view, 0, false, i, j)) return false;
  if (modular_) {
    if (!check_machinery(view, MACH_FIELDS, true, i, j)) return false;
    // final reduction: s == t + c with the claimed quotient track
    const Bits& lab = view.my_label(0);
    int s = lab.bit(F_TGT);
    int tq = lab.bit(MACH_FIELDS + F_TGT);
    int cbit = view.input().bit(2);
    uint32_t cfield = 2 * MACH_FIELDS;
    int cin =
        (j == cw_) ? 0 : view.label(0, view.right()).bit(cfield);
    if (s != (tq ^ cbit ^ cin)) return false;
    if (lab.bit(cfield) != ((tq + cbit + cin) >= 2 ? 1 : 0)) return false;
    if (j == 1 && lab.bit(cfield) != 0) return false;
  }
  if (!eng_.check_node(v, view)) return false;
  return true;
}

}  // namespace lrdip
