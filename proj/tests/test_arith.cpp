#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrdip/arith.hpp"
#include "lrdip/eq2.hpp"
#include "lrdip/mult.hpp"
#include "lrdip/numtheory.hpp"

using namespace lrdip;

namespace {

Bits from_string(const char* s) {
  Bits b;
  for (const char* p = s; *p; ++p) b.append_bit(*p == '1');
  return b;
}

// Writes an arbitrary labeling for single-round protocols: node v gets the
// k bits of mask starting at v*k. Lets soundness tests sweep every labeling.
class MaskStrategy : public ProverStrategy {
public:
  MaskStrategy(uint64_t mask, uint32_t bits_per_node)
      : mask_(mask), k_(bits_per_node) {}
  std::string name() const override { return "mask"; }
  void prover_round(const Protocol& proto, uint32_t r, const Transcript& t,
                    Round& out) override {
    proto.honest_round(r, t, out);
    for (uint32_t v = 0; v < proto.net().n; ++v) {
      Bits lab;
      lab.append_field((mask_ >> (v * k_)) & ((1ull << k_) - 1), k_);
      out.node_labels[v] = lab;
    }
  }

private:
  uint64_t mask_;
  uint32_t k_;
};

bool accepts_any_labeling(const Protocol& proto, uint32_t bits_per_node) {
  uint32_t total = proto.net().n * bits_per_node;
  for (uint64_t mask = 0; mask < (1ull << total); ++mask) {
    MaskStrategy s(mask, bits_per_node);
    if (run_protocol(proto, &s, 1).accepted) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("comparison certificate marks the deciding position") {
  CHECK(gt_certificate(from_string("1011"), from_string("1001")) ==
        from_string("0011"));
  CHECK(gt_certificate(from_string("0111"), from_string("0000")) ==
        from_string("0111"));
  CHECK(gt_certificate(from_string("101"), from_string("101")) ==
        from_string("000"));
  CHECK(gt_check(1, -1, 1, 0, false));
  CHECK(gt_check(1, 0, 1, 0, true));
  CHECK(gt_check(1, 1, 0, 1, false));  // interior of the 1-run: bits free
  CHECK_FALSE(gt_check(1, 0, 0, 1, false));
  CHECK_FALSE(gt_check(0, 0, 1, 0, false));
  CHECK_FALSE(gt_check(0, 1, 0, 0, false));  // 1 then 0 breaks the pattern
  CHECK_FALSE(gt_check(0, -1, 0, 0, true));  // rightmost must be 1
}

TEST_CASE("greater than accepts exactly the true comparisons") {
  for (uint32_t w = 2; w <= 5; ++w)
    for (uint64_t a = 0; a < (1ull << w); ++a)
      for (uint64_t b = 0; b < (1ull << w); ++b) {
        GtProtocol proto(w, a, b);
        RunReport rep = run_protocol(proto, nullptr, 1);
        CHECK(rep.accepted == (a > b));
        CHECK(rep.proof_size_bits <= 1);
      }
}

TEST_CASE("greater than rejects no instances under every labeling") {
  for (uint32_t w = 2; w <= 4; ++w)
    for (uint64_t a = 0; a < (1ull << w); ++a)
      for (uint64_t b = a; b < (1ull << w); ++b) {
        GtProtocol proto(w, a, b);
        CHECK_FALSE(accepts_any_labeling(proto, 1));
      }
}

TEST_CASE("addition accepts exactly the true sums") {
  for (uint32_t w = 2; w <= 4; ++w)
    for (uint64_t a = 0; a < (1ull << w); ++a)
      for (uint64_t b = 0; b < (1ull << w); ++b) {
        if (a + b >= (1ull << w)) continue;
        AddProtocol proto(w, a, b, a + b);
        CHECK(run_protocol(proto, nullptr, 1).accepted);
      }
}

TEST_CASE("addition rejects wrong sums under every labeling") {
  for (uint32_t w = 2; w <= 3; ++w)
    for (uint64_t a = 0; a < (1ull << w); ++a)
      for (uint64_t b = 0; b < (1ull << w); ++b)
        for (uint64_t c = 0; c < (1ull << w); ++c) {
          if (a + b == c) continue;
          AddProtocol proto(w, a, b, c);
          CHECK_FALSE(accepts_any_labeling(proto, 1));
        }
}

TEST_CASE("modular addition accepts reduced true claims") {
  for (uint32_t w = 2; w <= 4; ++w)
    for (uint64_t m = 1; m < (1ull << w); ++m)
      for (uint64_t a = 0; a < m; ++a)
        for (uint64_t b = 0; b < m; ++b) {
          ModAddProtocol proto(w, a, b, (a + b) % m, m);
          CHECK(run_protocol(proto, nullptr, 1).accepted);
        }
}

TEST_CASE("modular addition rejects wrong residues under every labeling") {
  uint32_t w = 2;
  for (uint64_t m = 2; m < (1ull << w); ++m)
    for (uint64_t a = 0; a < m; ++a)
      for (uint64_t b = 0; b < m; ++b)
        for (uint64_t c = 0; c < m; ++c) {
          if (c == (a + b) % m) continue;
          ModAddProtocol proto(w, a, b, c, m);
          CHECK_FALSE(accepts_any_labeling(proto, 4));
        }
}

TEST_CASE("modular addition honest prover rejects wrong residues") {
  uint32_t w = 3;
  for (uint64_t m = 2; m < (1ull << w); ++m)
    for (uint64_t a = 0; a < m; ++a)
      for (uint64_t b = 0; b < m; ++b)
        for (uint64_t c = 0; c < m; ++c) {
          if (c == (a + b) % m) continue;
          ModAddProtocol proto(w, a, b, c, m);
          CHECK_FALSE(run_protocol(proto, nullptr, 1).accepted);
        }
}

TEST_CASE("modular addition requires reduced operands") {
  CHECK_THROWS(ModAddProtocol(3, 5, 1, 1, 5));
  CHECK_THROWS(ModAddProtocol(3, 1, 1, 6, 5));
}

TEST_CASE("equality pairs generator honors the equal flag") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Bits a, b;
    eq_pair(8, seed, true, a, b);
    CHECK(a == b);
    CHECK(a.size() == 8);
    eq_pair(8, seed, false, a, b);
    CHECK(a.size() == 8);
    CHECK_FALSE(a == b);
  }
}

TEST_CASE("equality protocol is complete for every coin value") {
  uint32_t ell = 4;
  uint64_t q = Eq2Protocol::field_prime(ell);
  CHECK(q == 17);
  for (uint32_t gap : {1u, 2u}) {
    Bits a, b;
    eq_pair(ell, 3, true, a, b);
    Eq2Protocol proto(ell, gap, a, b);
    REQUIRE(proto.q() == q);
    for (uint64_t r = 0; r < q; ++r) {
      Round coins;
      proto.engine().force_coins({r}, coins);
      RunReport rep = run_with_forced_coins(proto, nullptr, {coins.coins});
      CHECK(rep.accepted);
    }
  }
}

TEST_CASE("equality acceptance matches fingerprint collision exactly") {
  uint32_t ell = 4;
  uint64_t q = Eq2Protocol::field_prime(ell);
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    Bits a, b;
    eq_pair(ell, seed, false, a, b);
    Eq2Protocol proto(ell, 1, a, b);
    uint32_t collisions = 0;
    for (uint64_t r = 0; r < q; ++r) {
      Round coins;
      proto.engine().force_coins({r}, coins);
      RunReport rep = run_with_forced_coins(proto, nullptr, {coins.coins});
      bool collide = poly_eval(q, r, a) == poly_eval(q, r, b);
      CHECK(rep.accepted == collide);
      collisions += collide ? 1 : 0;
    }
    CHECK(collisions <= ell);  // degree bound, r = 0 included
    CHECK(collisions >= 1);    // r = 0 always collides
  }
}

TEST_CASE("equality message widths stay within the field budget") {
  Bits a, b;
  eq_pair(8, 1, true, a, b);
  Eq2Protocol proto(8, 1, a, b);
  CHECK(proto.q() == 67);
  Transcript t;
  RunReport rep = run_protocol(proto, nullptr, 5, &t);
  CHECK(rep.accepted);
  uint32_t wq = bit_width_u64(66);
  CHECK(rep.proof_size_bits <= 3 * wq + 4);
  CHECK(rep.coin_bits_max == wq);
}

TEST_CASE("product protocol accepts true products") {
  for (uint32_t w = 2; w <= 4; ++w)
    for (uint64_t a = 0; a < (1ull << w); ++a)
      for (uint64_t b = 0; b < (1ull << w); ++b) {
        MultProtocol proto(w, a, b, a * b);
        RunReport rep = run_protocol(proto, nullptr, uint64_t(a * 131 + b));
        CHECK(rep.accepted);
        CHECK_FALSE(rep.width_violation);
      }
}

TEST_CASE("product protocol honest prover rejects wrong targets") {
  uint32_t w = 3;
  for (uint64_t a = 0; a < (1ull << w); ++a)
    for (uint64_t b = 0; b < (1ull << w); ++b)
      for (uint64_t delta : {1ull, 7ull, 32ull}) {
        uint64_t c = (a * b + delta) % (1ull << (2 * w));
        if (c == a * b) continue;
        MultProtocol proto(w, a, b, c);
        for (uint64_t seed : {1ull, 2ull})
          CHECK_FALSE(run_protocol(proto, nullptr, seed).accepted);
      }
}

TEST_CASE("modular product accepts reduced true claims") {
  for (uint32_t w = 2; w <= 3; ++w)
    for (uint64_t m = 2; m < (1ull << w); ++m)
      for (uint64_t a = 0; a < m; ++a)
        for (uint64_t b = 0; b < m; ++b) {
          MultProtocol proto(w, a, b, (a * b) % m, m);
          CHECK(run_protocol(proto, nullptr, a * 17 + b).accepted);
        }
}

TEST_CASE("modular product honest prover rejects wrong residues") {
  uint32_t w = 3;
  for (uint64_t m = 2; m < (1ull << w); ++m)
    for (uint64_t a = 0; a < m; ++a)
      for (uint64_t b = 0; b < m; ++b) {
        uint64_t c = ((a * b) % m + 1) % m;
        if (c == (a * b) % m) continue;
        MultProtocol proto(w, a, b, c, m);
        for (uint64_t seed : {1ull, 2ull})
          CHECK_FALSE(run_protocol(proto, nullptr, seed).accepted);
      }
}

TEST_CASE("product protocol validates its arguments") {
  CHECK_THROWS(MultProtocol(1, 0, 0, 0));
  CHECK_THROWS(MultProtocol(17, 0, 0, 0));
  CHECK_THROWS(MultProtocol(3, 5, 1, 1, 5));   // unreduced operand
  CHECK_THROWS(MultProtocol(3, 1, 1, 6, 5));  // target not reduced
}
