#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "lrjacobi/jacobi.hpp"

using lrj::Int;
using lrj::Nat;
using lrj::QuotientPolicy;
using lrj::Symbol;

namespace {

constexpr QuotientPolicy kPolicies[] = {QuotientPolicy::unit, QuotientPolicy::euclid, QuotientPolicy::lehmer};

int J(std::uint64_t a, std::uint64_t b, QuotientPolicy p = QuotientPolicy::lehmer) {
  return lrj::to_int(lrj::jacobi(a, b, p));
}

int K(long long a, long long b) { return lrj::to_int(lrj::kronecker(Int{a}, Int{b})); }

}  // namespace

TEST(Jacobi, Examples) {
  for (auto p : kPolicies) {
    EXPECT_EQ(J(0, 1, p), 1);
    EXPECT_EQ(J(0, 5, p), 0);
    EXPECT_EQ(J(2, 3, p), -1);
    EXPECT_EQ(J(19, 45, p), 1);
    EXPECT_EQ(J(6, 9, p), 0);
    EXPECT_EQ(J(5, 9, p), 1);
    EXPECT_EQ(J(1, 27, p), 1);
    EXPECT_EQ(J(2, 27, p), -1);
    EXPECT_EQ(J(3, 27, p), 0);
    EXPECT_EQ(J(506, 1103, p), -1);
  }
}

TEST(Jacobi, LargeKnownValue) {
  const Nat b = Nat::parse("21888242871839275222246405745257275088696311157297823662689037894645226208583");
  EXPECT_EQ(lrj::jacobi(Nat{76749407}, b, QuotientPolicy::lehmer), Symbol::minus);
  EXPECT_EQ(lrj::jacobi(Nat{76749407}, b, QuotientPolicy::euclid), Symbol::minus);
  EXPECT_EQ(lrj::binary_kronecker(Nat{76749407}, b), Symbol::minus);
}

TEST(Jacobi, RejectsEvenOrZeroDenominator) {
  EXPECT_THROW((void)lrj::jacobi(4, 8), lrj::invalid_input);
  EXPECT_THROW((void)lrj::jacobi(4, 0), lrj::invalid_input);
  EXPECT_THROW((void)lrj::binary_kronecker(3, 10), lrj::invalid_input);
}

TEST(Jacobi, HandTraceOfTwoOverThree) {
  // (2,3): a < b, b <- 3 - 1*2 = 1 with alpha = 2: e += 1*(3-1)/2 + 0 = 1.
  // Then a <- 2 - 2*1 = 0, survivor b = 1, result (-1)^1.
  const auto trace = lrj::invariant_probe(2, 3, QuotientPolicy::euclid);
  ASSERT_EQ(trace.size(), 2u);
  EXPECT_EQ(trace[1].state.e, 1);
  EXPECT_EQ(J(2, 3, QuotientPolicy::euclid), -1);
}

TEST(Gcd, Examples) {
  for (auto p : kPolicies) {
    EXPECT_EQ(lrj::gcd(45, 19, p), Nat{1});
    EXPECT_EQ(lrj::gcd(6, 9, p), Nat{3});
    EXPECT_EQ(lrj::gcd(12345, 12345, p), Nat{12345});
  }
  EXPECT_THROW((void)lrj::gcd(0, 5), lrj::invalid_input);
}

TEST(Gcd, MatchesStdGcd) {
  for (std::uint64_t a = 1; a <= 200; ++a)
    for (std::uint64_t b = 1; b <= 200; ++b)
      for (auto p : kPolicies) ASSERT_EQ(lrj::gcd(a, b, p), Nat{std::gcd(a, b)});
}

TEST(Kronecker, Examples) {
  EXPECT_EQ(K(1, 0), 1);
  EXPECT_EQ(K(-1, 0), 1);
  EXPECT_EQ(K(2, 0), 0);
  EXPECT_EQ(K(3, 0), 0);
  EXPECT_EQ(K(-1, 5), 1);
  EXPECT_EQ(K(-1, 7), -1);
  EXPECT_EQ(K(19, 45), 1);
  EXPECT_EQ(K(3, 2), -1);
  EXPECT_EQ(K(7, 2), 1);
  EXPECT_EQ(K(4, 2), 0);
  EXPECT_EQ(K(-3, -1), -1);
  EXPECT_EQ(K(3, -1), 1);
  EXPECT_EQ(K(0, -1), 1);
}

TEST(Kronecker, ReducesToJacobiForOddPositiveB) {
  for (long long b = 1; b <= 151; b += 2)
    for (long long a = 0; a <= 150; ++a) EXPECT_EQ(K(a, b), J(std::uint64_t(a), std::uint64_t(b)));
}

TEST(Kronecker, MatchesDefinitionOnSmallRange) {
  // Independent oracle: multiplicativity in the denominator over its prime
  // factorization, with (a|2), (a|-1) and (a|p) from the definitions.
  auto kron_two = [](long long a) {
    if (a % 2 == 0) return 0;
    const long long r = ((a % 8) + 8) % 8;
    return (r == 1 || r == 7) ? 1 : -1;
  };
  auto oracle = [&](long long a, long long b) {
    if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
    int s = 1;
    if (b < 0) {
      b = -b;
      if (a < 0) s = -1;
    }
    while (b % 2 == 0) {
      s *= kron_two(a);
      b /= 2;
    }
    const std::uint64_t am = std::uint64_t(((a % b) + b) % b);
    return s * lrj::to_int(lrj::jacobi_bruteforce(am, std::uint64_t(b)));
  };
  for (long long a = -60; a <= 60; ++a)
    for (long long b = -60; b <= 60; ++b) ASSERT_EQ(K(a, b), oracle(a, b)) << a << "," << b;
}

TEST(Int, Parse) {
  EXPECT_EQ(Int::parse("-5"), Int(-5));
  EXPECT_EQ(Int::parse("-0"), Int(0));
  EXPECT_FALSE(Int::parse("-0").negative);
  EXPECT_EQ(Int::parse("0x10"), Int(16));
  try {
    (void)Int::parse("-1x");
    FAIL();
  } catch (const lrj::parse_error& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(BinaryKronecker, Examples) {
  EXPECT_EQ(lrj::binary_kronecker(2, 7), Symbol::plus);
  EXPECT_EQ(lrj::binary_kronecker(2, 5), Symbol::minus);
  EXPECT_EQ(lrj::binary_kronecker(0, 1), Symbol::plus);
  EXPECT_EQ(lrj::binary_kronecker(0, 9), Symbol::zero);
}

TEST(BinaryKronecker, AgreesWithJacobi) {
  for (std::uint64_t b = 1; b <= 1001; b += 2)
    for (std::uint64_t a = 0; a <= 1000; ++a)
      ASSERT_EQ(lrj::binary_kronecker(a, b), lrj::jacobi(a, b, QuotientPolicy::euclid)) << a << "," << b;
}

TEST(Bruteforce, Examples) {
  EXPECT_EQ(lrj::jacobi_bruteforce(2, 3), Symbol::minus);
  EXPECT_EQ(lrj::jacobi_bruteforce(4, 7), Symbol::plus);
  EXPECT_EQ(lrj::jacobi_bruteforce(5, 9), Symbol::plus);
  EXPECT_EQ(lrj::jacobi_bruteforce(0, 1), Symbol::plus);
  EXPECT_EQ(lrj::jacobi_bruteforce(0, 3), Symbol::zero);
  EXPECT_THROW((void)lrj::jacobi_bruteforce(1, 4), lrj::oracle_range_error);
  EXPECT_THROW((void)lrj::jacobi_bruteforce(1, 1'000'001), lrj::oracle_range_error);
}

TEST(Jacobi, ZeroLaw) {
  for (std::uint64_t b = 1; b <= 301; b += 2)
    for (std::uint64_t a = 0; a <= 300; ++a) EXPECT_EQ(J(a, b) == 0, std::gcd(a, b) != 1) << a << "," << b;
}

TEST(Jacobi, Multiplicativity) {
  for (std::uint64_t b = 1; b <= 61; b += 2)
    for (std::uint64_t a1 = 0; a1 <= 60; ++a1)
      for (std::uint64_t a2 = 0; a2 <= 60; ++a2) ASSERT_EQ(J(a1 * a2, b), J(a1, b) * J(a2, b));
  for (std::uint64_t b1 = 1; b1 <= 61; b1 += 2)
    for (std::uint64_t b2 = 1; b2 <= 61; b2 += 2)
      for (std::uint64_t a = 0; a <= 60; ++a) ASSERT_EQ(J(a, b1 * b2), J(a, b1) * J(a, b2));
}

TEST(Jacobi, Periodicity) {
  for (std::uint64_t b = 1; b <= 201; b += 2)
    for (std::uint64_t a = 0; a <= 200; ++a) ASSERT_EQ(J(a, b), J(a + b, b));
}

TEST(Jacobi, QuadraticResiduesModPrimes) {
  for (std::uint64_t p = 3; p < 1000; p += 2) {
    bool prime = true;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
      if (p % d == 0) prime = false;
    if (!prime) continue;
    std::vector<bool> square(p, false);
    for (std::uint64_t x = 1; x < p; ++x) square[x * x % p] = true;
    for (std::uint64_t a = 1; a < p; ++a) ASSERT_EQ(J(a, p) == 1, bool(square[a])) << a << " mod " << p;
  }
}

TEST(Jacobi, CrossPolicyRandomLarge) {
  std::mt19937_64 rng(43);
  for (std::size_t bits : {256u, 1024u, 4096u})
    for (int rep = 0; rep < 100; ++rep) {
      const Nat a = lrj::random_below_pow2(rng, bits);
      const Nat b = lrj::random_odd_exact_bits(rng, bits);
      const Symbol e = lrj::jacobi(a, b, QuotientPolicy::euclid);
      ASSERT_EQ(lrj::jacobi(a, b, QuotientPolicy::lehmer), e);
      ASSERT_EQ(lrj::jacobi<lrj::CompactTableUpdater>(a, b, QuotientPolicy::lehmer), e);
      ASSERT_EQ(lrj::binary_kronecker(a, b), e);
    }
}

TEST(Jacobi, UnbalancedOperands) {
  // A tiny b against a huge a exercises the fallback division path.
  std::mt19937_64 rng(47);
  for (int rep = 0; rep < 100; ++rep) {
    const Nat a = lrj::random_exact_bits(rng, 3000);
    const std::uint64_t b = (rng() % 999'999) | 1;
    const Symbol want = lrj::jacobi_bruteforce(a, Nat{b});
    EXPECT_EQ(lrj::jacobi(a, b, QuotientPolicy::lehmer), want);
    // Small numerator, huge odd denominator.
    const Nat a_odd = a.is_odd() ? a : a + Nat{1};
    EXPECT_EQ(lrj::jacobi(Nat{b}, a_odd, QuotientPolicy::lehmer), lrj::binary_kronecker(Nat{b}, a_odd));
  }
}

TEST(InvariantProbe, HoldsOnSmallRange) {
  for (auto policy : {QuotientPolicy::unit, QuotientPolicy::euclid, QuotientPolicy::lehmer})
    for (std::uint64_t b0 = 1; b0 <= 151; b0 += 2)
      for (std::uint64_t a0 = 1; a0 <= 150; ++a0) {
        const Symbol target = lrj::jacobi_bruteforce(a0, b0);
        const auto trace = lrj::invariant_probe(a0, b0, policy);
        ASSERT_FALSE(trace.empty());
        EXPECT_EQ(trace.front().state.d, 1);
        EXPECT_EQ(trace.front().state.e, 0);
        for (const auto& snap : trace) ASSERT_TRUE(lrj::probe_invariant_holds(snap, target)) << a0 << "," << b0;
      }
}

TEST(InvariantProbe, RangeChecks) {
  EXPECT_THROW((void)lrj::invariant_probe(1, 2'000'001), lrj::oracle_range_error);
  EXPECT_THROW((void)lrj::invariant_probe(1, 4), lrj::invalid_input);
  EXPECT_TRUE(lrj::invariant_probe(0, 5).empty());
}
