#include "lrdip/arith.hpp"

#include <stdexcept>

namespace lrdip {

Bits gt_certificate(const Bits& big, const Bits& small) {
  uint32_t w = big.size();
  Bits lab(w);
  uint32_t pivot = w;  // first differing position, w if equal
  for (uint32_t i = 0; i < w; ++i)
    if (big.bit(i) != small.bit(i)) {
      pivot = i;
      break;
    }
  for (uint32_t i = pivot; i < w; ++i) lab.set_bit(i, 1);
  return lab;
}

bool gt_check(int self_bit, int left_bit, int a, int b, bool rightmost) {
  if (self_bit == 1 && (left_bit <= 0)) {
    // deciding position: the larger string must hold 1, the smaller 0
    if (!(a == 1 && b == 0)) return false;
  }
  if (self_bit == 0) {
    if (a != b) return false;
    if (left_bit == 1) return false;  // pattern must stay 0...01...1
  }
  if (rightmost && self_bit != 1) return false;
  return true;
}

namespace {

Network value_line(uint32_t w, std::initializer_list<uint64_t> values) {
  Network net = Network::line(w);
  for (uint32_t i = 0; i < w; ++i) {
    Bits in;
    for (uint64_t val : values)
      in.append_bit(int((val >> (w - 1 - i)) & 1));  // MSB leftmost
    net.inputs[i] = in;
  }
  return net;
}

}  // namespace

GtProtocol::GtProtocol(uint32_t w, uint64_t a, uint64_t b)
    : w_(w), a_(a), b_(b) {
  if (w == 0 || w > 63) throw std::invalid_argument("width out of range");
  net_ = value_line(w, {a, b});
}

void GtProtocol::honest_round(uint32_t, const Transcript&, Round& out) const {
  Bits abits, bbits;
  for (uint32_t i = 0; i < w_; ++i) {
    abits.append_bit(int((a_ >> (w_ - 1 - i)) & 1));
    bbits.append_bit(int((b_ >> (w_ - 1 - i)) & 1));
  }
  Bits cert = gt_certificate(abits, bbits);
  for (uint32_t v = 0; v < w_; ++v) {
    Bits lab;
    lab.append_bit(cert.bit(v));
    out.node_labels[v] = lab;
  }
}

bool GtProtocol::decide_node(uint32_t v, const LocalView& view) const {
  int self = view.my_label(0).bit(0);
  int left = view.has_left() ? view.label(0, view.left()).bit(0) : -1;
  int a = view.input().bit(0);
  int b = view.input().bit(1);
  return gt_check(self, left, a, b, view.path_end());
}

AddProtocol::AddProtocol(uint32_t w, uint64_t a, uint64_t b, uint64_t c)
    : w_(w) {
  if (w == 0 || w > 62) throw std::invalid_argument("width out of range");
  net_ = value_line(w, {a, b, c});
}

void AddProtocol::honest_round(uint32_t, const Transcript&, Round& out) const {
  // carry[v] = carry out of node v's position, computed right to left
  int carry = 0;
  std::vector<int> carries(w_, 0);
  for (uint32_t i = 0; i < w_; ++i) {
    uint32_t v = w_ - 1 - i;  // rightmost first
    int a = net_.inputs[v].bit(0), b = net_.inputs[v].bit(1);
    int sum = a + b + carry;
    carries[v] = sum >= 2 ? 1 : 0;
    carry = carries[v];
  }
  for (uint32_t v = 0; v < w_; ++v) {
    Bits lab;
    lab.append_bit(carries[v]);
    out.node_labels[v] = lab;
  }
}

bool AddProtocol::decide_node(uint32_t v, const LocalView& view) const {
  int a = view.input().bit(0), b = view.input().bit(1), c = view.input().bit(2);
  int carry_in =
      view.has_right() ? view.label(0, view.right()).bit(0) : 0;
  int sum = a + b + carry_in;
  if (c != (sum & 1)) return false;
  if (view.my_label(0).bit(0) != (sum >= 2 ? 1 : 0)) return false;
  if (view.path_start() && view.my_label(0).bit(0) != 0) return false;
  return true;
}

ModAddProtocol::ModAddProtocol(uint32_t w, uint64_t a, uint64_t b, uint64_t c,
                               uint64_t m)
    : w_(w) {
  if (w == 0 || w > 60) throw std::invalid_argument("width out of range");
  if (a >= m || b >= m || c >= m)
    throw std::invalid_argument("operands must be reduced");
  wraps_ = a + b >= m;
  net_ = value_line(w, {a, b, c, m});
}

void ModAddProtocol::honest_round(uint32_t, const Transcript&,
                                  Round& out) const {
  // chain 1 digits: a+b as is (flag 0) or a+b written into the shared track
  // (flag 1); chain 2 only in the wrapping case: m + c on the same track.
  std::vector<int> c1(w_, 0), c2(w_, 0), s(w_, 0);
  int carry1 = 0, carry2 = 0;
  for (uint32_t i = 0; i < w_; ++i) {
    uint32_t v = w_ - 1 - i;
    int a = net_.inputs[v].bit(0), b = net_.inputs[v].bit(1);
    int cc = net_.inputs[v].bit(2), mm = net_.inputs[v].bit(3);
    int sum1 = a + b + carry1;
    s[v] = sum1 & 1;
    carry1 = sum1 >= 2 ? 1 : 0;
    c1[v] = carry1;
    int sum2 = mm + cc + carry2;
    carry2 = sum2 >= 2 ? 1 : 0;
    c2[v] = carry2;
  }
  for (uint32_t v = 0; v < w_; ++v) {
    Bits lab;
    lab.append_bit(wraps_ ? 1 : 0);
    lab.append_bit(c1[v]);
    lab.append_bit(wraps_ ? s[v] : 0);
    lab.append_bit(wraps_ ? c2[v] : 0);
    out.node_labels[v] = lab;
  }
}

bool ModAddProtocol::decide_node(uint32_t v, const LocalView& view) const {
  const Bits& lab = view.my_label(0);
  int flag = lab.bit(0);
  int a = view.input().bit(0), b = view.input().bit(1);
  int c = view.input().bit(2), m = view.input().bit(3);
  if (view.has_left() && view.label(0, view.left()).bit(0) != flag)
    return false;
  int cin1 = view.has_right() ? view.label(0, view.right()).bit(1) : 0;
  if (flag == 0) {
    // no wrap: a + b == c digitwise
    int sum = a + b + cin1;
    if (c != (sum & 1)) return false;
    if (lab.bit(1) != (sum >= 2 ? 1 : 0)) return false;
    if (view.path_start() && lab.bit(1) != 0) return false;
  } else {
    // wrap: a + b and m + c must both equal the shared digit track, with
    // matching final carries, i.e. a + b == m + c exactly.
    int s = lab.bit(2);
    int cin2 = view.has_right() ? view.label(0, view.right()).bit(3) : 0;
    int sum1 = a + b + cin1;
    int sum2 = m + c + cin2;
    if (s != (sum1 & 1)) return false;
    if (lab.bit(1) != (sum1 >= 2 ? 1 : 0)) return false;
    if (s != (sum2 & 1)) return false;
    if (lab.bit(3) != (sum2 >= 2 ? 1 : 0)) return false;
    if (view.path_start() && lab.bit(1) != lab.bit(3)) return false;
  }
  return true;
}

}  // namespace lrdip
