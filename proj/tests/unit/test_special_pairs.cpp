#include <gtest/gtest.h>

#include "../oracles.hpp"
#include "padlog/error.hpp"
#include "padlog/numth.hpp"
#include "padlog/special_pairs.hpp"
#include "padlog/tables.hpp"

using namespace padlog;
using u64 = std::uint64_t;

TEST(SpecialPairs, ReferencePair) {
  const SpecialPairReport r = analyze_pair(-3, 5, 2, 6);
  EXPECT_TRUE(r.is_special);
  EXPECT_EQ(r.x_o, std::optional<u64>(11));
  EXPECT_EQ(r.ord_a, 16u);
  EXPECT_EQ(r.x_order, std::optional<u64>(4));
  EXPECT_EQ(r.max_possible, 4u);
}

TEST(SpecialPairs, XOrderRows) {
  for (unsigned n = 5; n <= 10; ++n) {
    const SpecialPairReport r = analyze_pair(-3, 5, 2, n);
    EXPECT_EQ(r.ord_a, nt::checked_pow(2, n - 2));
    EXPECT_EQ(*r.x_o % nt::checked_pow(2, n - 2), n == 5 ? 3u : 11u);
    EXPECT_EQ(*r.x_order, nt::checked_pow(2, n - 4));
    EXPECT_EQ(r.max_possible, nt::checked_pow(2, n - 4));
    EXPECT_EQ(brute_dlog(-3, 5, 2, n), r.x_o);
  }
}

TEST(SpecialPairs, SelfPair) {
  const SpecialPairReport r = analyze_pair(7, 7, 5, 3);
  EXPECT_EQ(r.x_o, std::optional<u64>(1));
  EXPECT_EQ(r.x_order, std::optional<u64>(1));
  EXPECT_EQ(r.is_special, r.max_possible == 1);
}

TEST(SpecialPairs, NegatedPair) {
  const SpecialPairReport r = analyze_pair(-(1 - 5), -(1 + 5), 5, 3);
  EXPECT_EQ(r.ord_a, 2u * 25u);
  EXPECT_EQ(r.ord_b, 2u * 25u);
  EXPECT_NE(r.failure, SpecialFailure::SubgroupsDiffer);
}

TEST(SpecialPairs, Failures) {
  EXPECT_EQ(analyze_pair(10, 3, 5, 2).failure, SpecialFailure::NotCoprime);
  EXPECT_EQ(analyze_pair(26, 6, 5, 2).failure, SpecialFailure::SubgroupsDiffer);
  EXPECT_THROW(analyze_pair(2, 3, 5, 10), Error);
}

TEST(SpecialPairs, Cycles) {
  EXPECT_EQ(format_cycles(cycle_decomposition(3, 4).cycles), "(1 3)(2)");
  EXPECT_EQ(format_cycles(cycle_decomposition(3, 8).cycles), "(1 3)(2 6)(4)(5 7)");
  EXPECT_EQ(format_cycles(cycle_decomposition(1, 5).cycles), "(1)(2)(3)(4)");
  EXPECT_THROW(cycle_decomposition(4, 8), Error);
}

// Cycle lengths divide the order of x, and the cycles partition 1..m-1.
TEST(SpecialPairsProperty, CycleStructure) {
  for (u64 m = 2; m < 200; ++m) {
    for (u64 x = 1; x < m; ++x) {
      if (oracle::gcd(x, m) != 1) continue;
      const CycleDecomposition c = cycle_decomposition(x, m);
      const u64 ord = oracle::order(x, m);
      u64 total = 0;
      for (const auto& cycle : c.cycles) {
        EXPECT_EQ(ord % cycle.size(), 0u);
        total += cycle.size();
        for (std::size_t i = 0; i < cycle.size(); ++i) {
          EXPECT_EQ(cycle[(i + 1) % cycle.size()], static_cast<u64>(static_cast<unsigned __int128>(cycle[i]) * x % m));
          EXPECT_GE(cycle[i], cycle.front());
        }
      }
      EXPECT_EQ(total, m - 1);
    }
  }
}

// Index of <a> in Z_{p^n}^* is eventually constant for the two reference pairs.
TEST(SpecialPairsProperty, IndexStabilizes) {
  std::vector<u64> idx2, idx5;
  for (unsigned n = 2; n <= 10; ++n) {
    idx2.push_back(analyze_pair(-3, 5, 2, n).index);
    idx5.push_back(analyze_pair(4, -6, 5, std::min(n, 8u)).index);
  }
  for (std::size_t i = 1; i < idx2.size(); ++i) EXPECT_EQ(idx2[i], idx2.front());
  for (std::size_t i = 1; i < idx5.size(); ++i) EXPECT_EQ(idx5[i], idx5.front());
  EXPECT_EQ(idx2.front(), 2u);
  EXPECT_EQ(idx5.front(), 2u);
}
