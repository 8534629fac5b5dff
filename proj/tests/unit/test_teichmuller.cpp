#include <gtest/gtest.h>

#include <random>

#include "../oracles.hpp"
#include "padlog/error.hpp"
#include "padlog/numth.hpp"
#include "padlog/padic_io.hpp"
#include "padlog/teichmuller.hpp"

using namespace padlog;
using u64 = std::uint64_t;

TEST(Teichmuller, FiveAdicTwo) {
  const PAdicInt t = teichmuller_lift(2, 5, 22);
  EXPECT_EQ(format_digit_list(t), "2,1,2,1,3,4,2,3,0,3,2,2,0,4,1,3,2,4,0,4,3,4");
  EXPECT_TRUE(t == teichmuller_frobenius_oracle(2, 5, 22));
}

TEST(Teichmuller, RecurrenceIntermediates) {
  std::vector<u64> a1, q1, w1, a2, q2, w2;
  for (u64 a0 = 1; a0 <= 4; ++a0) {
    std::vector<TeichmullerStep> trace;
    teichmuller_lift(a0, 5, 3, &trace);
    ASSERT_GE(trace.size(), 2u);
    q1.push_back(trace[0].power_quotient.get_ui());
    w1.push_back(trace[0].weighted.get_ui());
    a1.push_back(trace[0].digit);
    q2.push_back(trace[1].power_quotient.get_ui());
    w2.push_back(trace[1].weighted.get_ui());
    a2.push_back(trace[1].digit);
  }
  EXPECT_EQ(q1, (std::vector<u64>{0, 3, 16, 3}));
  EXPECT_EQ(w1, (std::vector<u64>{0, 96, 768, 144}));
  EXPECT_EQ(a1, (std::vector<u64>{0, 1, 3, 4}));
  EXPECT_EQ(q2, (std::vector<u64>{0, 96, 4199, 23}));
  EXPECT_EQ(w2, (std::vector<u64>{0, 3072, 201552, 1104}));
  EXPECT_EQ(a2, (std::vector<u64>{0, 2, 2, 4}));
}

TEST(TeichmullerProperty, MatchesFrobeniusAndIsRootOfUnity) {
  for (u64 p : {3u, 5u, 7u, 11u, 13u, 31u}) {
    for (u64 a0 = 1; a0 < p; ++a0) {
      const std::size_t n = 12;
      const PAdicInt t = teichmuller_lift(a0, p, n);
      EXPECT_TRUE(t == teichmuller_frobenius_oracle(a0, p, n));
      EXPECT_EQ(t.digit(0), a0);
      // t^{p-1} = 1 and t^p = t.
      const mpz_class m = oracle::power(p, n);
      mpz_class r;
      mpz_class z = t.to_integer();
      mpz_powm_ui(r.get_mpz_t(), z.get_mpz_t(), p - 1, m.get_mpz_t());
      EXPECT_EQ(r, 1);
    }
  }
}

TEST(Teichmuller, TwoAdic) {
  const auto [one, minus_one] = teichmuller_set_p2(6);
  EXPECT_EQ(format_digit_list(one), "1,0,0,0,0,0");
  EXPECT_EQ(format_digit_list(minus_one), "1,1,1,1,1,1");
  EXPECT_THROW(teichmuller_lift(0, 5, 4), Error);
  EXPECT_THROW(teichmuller_lift(5, 5, 4), Error);
}

TEST(TeichmullerProperty, UnitDecomposition) {
  std::mt19937_64 rng(5);
  for (u64 p : {2u, 3u, 5u, 7u}) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 2 + rng() % 14;
      mpz_class z = oracle::random_below(rng, oracle::power(p, n));
      if (z % p == 0) z += 1;
      const PAdicInt u = PAdicInt::from_integer(z, p, n);
      const UnitDecomposition d = decompose_unit(u);
      EXPECT_TRUE(d.teich * d.principal == u);
      EXPECT_EQ(d.principal.digit(0), 1u);
      if (p == 2) EXPECT_EQ(d.principal.digit(1), 0u);
    }
  }
}

TEST(Teichmuller, Depth) {
  EXPECT_EQ(depth(PAdicInt::from_integer(26L, 5, 6)), Depth::finite(2));
  EXPECT_EQ(depth(PAdicInt::from_integer(1L, 5, 6)), Depth::at_least(6));
  EXPECT_EQ(depth_of_integer(1, 5), Depth::infinite());
  EXPECT_EQ(depth_of_integer(-3, 2).value, 2u);
  EXPECT_TRUE(depth_of_integer(-3, 2).in_u2);
  EXPECT_FALSE(depth(PAdicInt::from_integer(3L, 2, 6)).in_u2);
  EXPECT_THROW(depth(PAdicInt::from_integer(2L, 5, 6)), Error);
  EXPECT_EQ(depth_at_most(Depth::finite(1), Depth::finite(2)), std::optional<bool>(true));
  EXPECT_EQ(depth_at_most(Depth::finite(3), Depth::finite(2)), std::optional<bool>(false));
  EXPECT_EQ(depth_at_most(Depth::finite(3), Depth::at_least(2)), std::nullopt);
  EXPECT_EQ(depth_at_most(Depth::at_least(3), Depth::finite(2)), std::optional<bool>(false));
}
