#include <gtest/gtest.h>

#include <map>

#include "../oracles.hpp"
#include "padlog/error.hpp"
#include "padlog/numth.hpp"
#include "padlog/residue_group.hpp"

using namespace padlog;

TEST(ResidueGroup, EulerPhiAgreesWithCount) {
  for (u64 n = 1; n < 600; ++n) {
    u64 count = 0;
    for (u64 a = 1; a <= n; ++a) count += oracle::gcd(a, n) == 1;
    EXPECT_EQ(euler_phi(n), count) << n;
  }
}

TEST(ResidueGroup, OrderAgreesWithIteration) {
  for (u64 m : {7u, 8u, 25u, 27u, 64u, 121u, 360u, 625u}) {
    for (u64 a = 1; a < m; ++a) {
      if (oracle::gcd(a, m) != 1) continue;
      EXPECT_EQ(order_mod(static_cast<i64>(a), m), oracle::order(a, m));
    }
  }
  EXPECT_THROW(order_mod(10, 25), Error);
}

TEST(ResidueGroup, OrderProfiles) {
  const OrderProfile two = order_profile(2, 5, 10);
  for (const auto& row : two.rows) EXPECT_EQ(row.order, 4 * nt::checked_pow(5, row.level - 1));
  const OrderProfile gauss = order_profile(14, 29, 5);
  EXPECT_EQ(gauss.rows[0].order, 28u);
  EXPECT_EQ(gauss.rows[1].order, 28u);
  EXPECT_EQ(gauss.stable_exponent, 2u);
  for (unsigned n = 2; n <= 5; ++n) EXPECT_EQ(gauss.rows[n - 1].order, 28 * nt::checked_pow(29, n - 2));
  // a = 3 mod 4 at p = 2: orders 1, 2, 2, 4, 8, ...
  const OrderProfile three = order_profile(3, 2, 8);
  EXPECT_EQ(three.rows[0].order, 1u);
  EXPECT_EQ(three.rows[1].order, 2u);
  EXPECT_EQ(three.rows[2].order, 2u);
  EXPECT_EQ(three.rows[3].order, 4u);
}

// The growth law holds for every unit below 200 and small primes.
TEST(ResidueGroupProperty, GrowthLaw) {
  for (u64 p : {2u, 3u, 5u, 7u}) {
    for (i64 a = -100; a <= 100; ++a) {
      if (a == 0 || static_cast<u64>(a < 0 ? -a : a) % p == 0) continue;
      EXPECT_NO_THROW(order_profile(a, p, 6)) << a << " " << p;
    }
  }
}

TEST(ResidueGroup, BruteDlog) {
  EXPECT_EQ(brute_dlog(-3, 5, 2, 10), std::optional<u64>(11));
  EXPECT_EQ(brute_dlog(2, 1, 5, 2), std::optional<u64>(20));
  EXPECT_EQ(brute_dlog(26, 6, 5, 2), std::nullopt);
  EXPECT_THROW(brute_dlog(2, 3, 5, 20), Error);
  EXPECT_TRUE(subgroup_contains(-4, 6, 5, 6));
  EXPECT_FALSE(subgroup_contains(26, 6, 5, 3));
}

TEST(ResidueGroup, Structure) {
  EXPECT_EQ(group_structure(8).invariant_factors(), (std::vector<u64>{2, 2}));
  EXPECT_FALSE(group_structure(8).cyclic.has_value());
  EXPECT_EQ(group_structure(25).cyclic, std::optional<u64>(20));
  EXPECT_EQ(group_structure(2).order(), 1u);
  EXPECT_EQ(group_structure(360).invariant_factors(), (std::vector<u64>{2, 2, 2, 12}));
  EXPECT_EQ(invariant_factors(std::vector<u64>{4, 6}), (std::vector<u64>{2, 12}));
}

// Structure theorem against an element-order census of Z_n^*.
TEST(ResidueGroupProperty, StructureMatchesCensus) {
  for (u64 n = 2; n <= 400; ++n) {
    std::map<u64, u64> census;
    for (u64 a = 1; a < n; ++a) {
      if (oracle::gcd(a, n) == 1) ++census[oracle::order(a, n)];
    }
    EXPECT_EQ(group_structure(n).invariant_factors(), invariant_factors_from_order_census(census)) << n;
  }
}
