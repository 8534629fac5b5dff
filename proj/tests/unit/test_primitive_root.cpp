#include <gtest/gtest.h>

#include "../oracles.hpp"
#include "padlog/error.hpp"
#include "padlog/numth.hpp"
#include "padlog/primitive_root.hpp"

using namespace padlog;
using u64 = std::uint64_t;

TEST(PrimitiveRoot, GaussSearch) {
  EXPECT_EQ(gauss_search(2), 1u);
  EXPECT_EQ(gauss_search(7), 5u);
  EXPECT_EQ(gauss_search(41), 7u);
  std::vector<GaussStep> trace;
  gauss_search(97, &trace);
  for (std::size_t i = 1; i < trace.size(); ++i) EXPECT_GT(trace[i].order, trace[i - 1].order);
  EXPECT_EQ(trace.back().order, 96u);
}

TEST(PrimitiveRootProperty, GaussSearchFindsRoots) {
  for (u64 p = 3; p < 2000; p += 2) {
    if (!nt::is_prime(p)) continue;
    EXPECT_EQ(oracle::order(gauss_search(p), p), p - 1) << p;
  }
}

TEST(PrimitiveRoot, Stabilize) {
  const auto c29 = stabilize(14, 29);
  EXPECT_EQ(c29.root, 15u);
  EXPECT_EQ(c29.derivation, RootDerivation::Negated);
  const auto c43 = stabilize(19, 43);
  EXPECT_EQ(c43.root, 26u);
  EXPECT_EQ(c43.derivation, RootDerivation::NegatedSquare);
  EXPECT_EQ(stabilize(2, 5).derivation, RootDerivation::Direct);
  const auto alt = stabilize(14, 29, true);
  EXPECT_EQ(alt.root, 14u * 30u % (29u * 29u));
  EXPECT_TRUE(is_primitive_root(static_cast<i64>(alt.root), 29 * 29));
  EXPECT_THROW(stabilize(4, 7), Error);
  EXPECT_THROW(stabilize(1, 2), Error);
}

TEST(PrimitiveRootProperty, StabilizedRootsWorkModPCubed) {
  for (u64 p = 3; p < 50; p += 2) {
    if (!nt::is_prime(p)) continue;
    for (u64 r = 2; r < p; ++r) {
      if (!is_primitive_root(static_cast<i64>(r), p)) continue;
      const u64 s = stabilize(r, p).root;
      EXPECT_EQ(oracle::order(s, p * p * p), p * p * (p - 1)) << p << " " << r;
    }
  }
}

TEST(PrimitiveRoot, SqrtMinusOne) {
  EXPECT_EQ(nt::mul_mod(sqrt_minus_one(13), sqrt_minus_one(13), 13), 12u);
  EXPECT_THROW(sqrt_minus_one(7), Error);
}

TEST(PrimitiveRoot, HasPrimitiveRoot) {
  for (u64 n = 2; n < 300; ++n) {
    const u64 phi = [&] {
      u64 c = 0;
      for (u64 a = 1; a < n; ++a) c += oracle::gcd(a, n) == 1;
      return c;
    }();
    bool any = false;
    for (u64 a = 1; a < n && !any; ++a) any = oracle::gcd(a, n) == 1 && oracle::order(a, n) == phi;
    EXPECT_EQ(has_primitive_root(n), any) << n;
  }
}

TEST(PrimitiveRoot, StableRootsAgreeWithDefinition) {
  for (u64 p = 3; p <= 97; p += 2) {
    if (!nt::is_prime(p)) continue;
    std::vector<u64> expected;
    for (u64 r = 2; r < p; ++r) {
      if (oracle::order(r, p) == p - 1 && oracle::order(r, p * p) == p * (p - 1)) expected.push_back(r);
    }
    EXPECT_EQ(all_stable_roots(p), expected) << p;
  }
  EXPECT_EQ(stable_root_representatives(13), (std::vector<u64>{2, 6}));
  EXPECT_EQ(stable_root_representatives(29), (std::vector<u64>{2, 3, 8, 10, 11, 15}));
}
