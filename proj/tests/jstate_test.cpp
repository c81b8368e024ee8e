#include <gtest/gtest.h>

#include <set>

#include "lrjacobi/jacobi.hpp"
#include "lrjacobi/jstate.hpp"

using lrj::JacobiState;

namespace {

JacobiState S(int e, int alpha, int beta, int d) {
  return {std::uint8_t(e), std::uint8_t(alpha), std::uint8_t(beta), std::uint8_t(d)};
}

std::vector<JacobiState> valid_states() {
  std::vector<JacobiState> out;
  for (unsigned p = 0; p < 64; ++p)
    if (lrj::unpack_state(p).valid()) out.push_back(lrj::unpack_state(p));
  return out;
}

}  // namespace

TEST(JStateInit, Examples) {
  EXPECT_EQ(lrj::jstate_init(2, 3), S(0, 2, 3, 1));
  EXPECT_EQ(lrj::jstate_init(1, 1), S(0, 1, 1, 1));
  EXPECT_THROW((void)lrj::jstate_init(0, 4), lrj::invalid_input);
  EXPECT_THROW((void)lrj::jstate_init(1, 2), lrj::invalid_input);
}

TEST(JUpdate, HandTraces) {
  // Reciprocity fires: e += (3-1)(3-1)/4, then alpha <- 3 - 3.
  EXPECT_EQ(lrj::jupdate(S(0, 3, 3, 0), 1, 1), S(1, 0, 3, 1));
  // Same denominator, m = 0 mod 4.
  EXPECT_EQ(lrj::jupdate(S(0, 1, 3, 1), 1, 0), S(0, 1, 3, 1));
  // beta = 2: e += 3*0/2 + 3*2/2 = 3, alpha <- 1 - 6 = 3 (mod 4).
  EXPECT_EQ(lrj::jupdate(S(0, 1, 2, 1), 1, 3), S(1, 3, 2, 1));
}

TEST(JUpdate, SymmetricBranch) {
  // d_new = 0 mirrors d_new = 1 with alpha and beta exchanged.
  for (const auto& s : valid_states())
    for (unsigned m = 0; m < 4; ++m) {
      const JacobiState mirrored = S(s.e, s.beta, s.alpha, s.d ^ 1);
      const JacobiState r0 = lrj::jupdate(s, 0, m);
      const JacobiState r1 = lrj::jupdate(mirrored, 1, m);
      EXPECT_EQ(r0.e, r1.e);
      EXPECT_EQ(r0.alpha, r1.beta);
      EXPECT_EQ(r0.beta, r1.alpha);
    }
}

TEST(JUpdate, ValidityPreservedUnderRealReductions) {
  for (std::uint64_t b = 1; b <= 201; b += 2)
    for (std::uint64_t a = 1; a <= 200; ++a)
      for (auto policy : {lrj::QuotientPolicy::unit, lrj::QuotientPolicy::euclid, lrj::QuotientPolicy::lehmer}) {
        lrj::Nat x{a}, y{b};
        JacobiState s = lrj::jstate_init(x.low2(), y.low2());
        while (!x.is_zero() && !y.is_zero()) {
          lrj::reduce_step(policy, x, y, [&](lrj::ReductionEvent ev) {
            s = lrj::jupdate(s, ev);
            ASSERT_TRUE(s.valid()) << a << "/" << b;
          });
        }
      }
}

TEST(JUpdate, ModFourSufficiency) {
  for (const auto& s : valid_states())
    for (unsigned d_new = 0; d_new < 2; ++d_new)
      for (unsigned long long m = 1; m <= 64; ++m)
        EXPECT_EQ(lrj::jupdate_wide(s, d_new, m), lrj::jupdate(s, d_new, unsigned(m % 4)));
}

TEST(JStateFinish, Examples) {
  EXPECT_EQ(lrj::jstate_finish(S(0, 1, 1, 1), true), lrj::Symbol::plus);
  EXPECT_EQ(lrj::jstate_finish(S(1, 1, 1, 1), true), lrj::Symbol::minus);
  EXPECT_EQ(lrj::jstate_finish(S(0, 1, 1, 1), false), lrj::Symbol::zero);
  EXPECT_EQ(lrj::jstate_finish(S(1, 1, 1, 1), false), lrj::Symbol::zero);
}

TEST(FullTable, SizeAndIdentityRow) {
  EXPECT_EQ(lrj::full_table.size(), 512u);
  const JacobiState s = S(0, 1, 3, 1);
  EXPECT_EQ(lrj::full_table[lrj::pack_index(s, 1, 0)], lrj::pack_state(s));
}

TEST(FullTable, PackingLayout) {
  // (e:1)(alpha:2)(beta:2)(d:1)(d_new:1)(m4:2), most significant first.
  EXPECT_EQ(lrj::pack_index(S(1, 0, 0, 0), 0, 0), 0x100u);
  EXPECT_EQ(lrj::pack_index(S(0, 3, 0, 0), 0, 0), 0x0c0u);
  EXPECT_EQ(lrj::pack_index(S(0, 0, 3, 0), 0, 0), 0x030u);
  EXPECT_EQ(lrj::pack_index(S(0, 0, 0, 1), 0, 0), 0x008u);
  EXPECT_EQ(lrj::pack_index(S(0, 0, 0, 0), 1, 0), 0x004u);
  EXPECT_EQ(lrj::pack_index(S(0, 0, 0, 0), 0, 3), 0x003u);
}

TEST(FullTable, MatchesJUpdateExhaustively) {
  int valid = 0;
  for (unsigned i = 0; i < 512; ++i) {
    const JacobiState s = lrj::unpack_state(i >> 3);
    ASSERT_LT(lrj::full_table[i], 64u);
    if (!s.valid()) {
      EXPECT_EQ(lrj::full_table[i], i >> 3) << "sentinel at " << i;
      continue;
    }
    ++valid;
    EXPECT_EQ(lrj::unpack_state(lrj::full_table[i]), lrj::jupdate(s, (i >> 2) & 1, i & 3)) << i;
  }
  EXPECT_EQ(valid, 384);  // three quarters of the entries
}

TEST(CompactEncoding, Bijection) {
  std::set<unsigned> seen;
  for (unsigned k = 0; k < lrj::compact_states; ++k) {
    EXPECT_EQ(lrj::jstate_encode_compact(lrj::jstate_decode_compact(k)), k);
    seen.insert(k);
  }
  EXPECT_EQ(seen.size(), 26u);
  for (const auto& s : valid_states()) EXPECT_LT(lrj::jstate_encode_compact(s), 26u);
}

TEST(CompactEncoding, DOnlyMattersForThreeThree) {
  for (int e = 0; e < 2; ++e) {
    EXPECT_NE(lrj::jstate_encode_compact(S(e, 3, 3, 0)), lrj::jstate_encode_compact(S(e, 3, 3, 1)));
    EXPECT_EQ(lrj::jstate_encode_compact(S(e, 1, 3, 0)), lrj::jstate_encode_compact(S(e, 1, 3, 1)));
  }
  EXPECT_THROW((void)lrj::jstate_encode_compact(S(0, 2, 0, 1)), lrj::invalid_input);
}

TEST(CompactEncoding, FoldedDIsReallyIrrelevant) {
  // Where the encoding forgets d, both choices of d give the same transition.
  for (const auto& s : valid_states()) {
    if (s.alpha == 3 && s.beta == 3) continue;
    JacobiState t = s;
    t.d ^= 1;
    for (unsigned ev = 0; ev < 8; ++ev)
      EXPECT_EQ(lrj::jupdate(s, ev >> 2, ev & 3), lrj::jupdate(t, ev >> 2, ev & 3));
  }
}

TEST(CompactTable, MatchesJUpdateExhaustively) {
  EXPECT_EQ(lrj::compact_table.size(), 208u);
  for (const auto& s : valid_states())
    for (unsigned ev = 0; ev < 8; ++ev) {
      const JacobiState want = lrj::jupdate(s, ev >> 2, ev & 3);
      const JacobiState got =
          lrj::jstate_decode_compact(lrj::compact_table[lrj::jstate_encode_compact(s) * 8 + ev]);
      EXPECT_TRUE(lrj::equivalent_states(want, got));
    }
}

TEST(Updaters, AllAgreeOnSmallRange) {
  for (std::uint64_t b = 1; b <= 201; b += 2)
    for (std::uint64_t a = 0; a <= 200; ++a) {
      const auto direct = lrj::jacobi<lrj::DirectUpdater>(a, b, lrj::QuotientPolicy::euclid);
      EXPECT_EQ(lrj::jacobi<lrj::FullTableUpdater>(a, b, lrj::QuotientPolicy::euclid), direct);
      EXPECT_EQ(lrj::jacobi<lrj::CompactTableUpdater>(a, b, lrj::QuotientPolicy::euclid), direct);
      EXPECT_EQ(lrj::jacobi<lrj::CompactTableUpdater>(a, b, lrj::QuotientPolicy::lehmer), direct);
    }
}
