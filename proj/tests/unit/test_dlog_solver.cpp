#include <gtest/gtest.h>

#include <random>

#include "../oracles.hpp"
#include "padlog/dlog_solver.hpp"
#include "padlog/error.hpp"
#include "padlog/numth.hpp"
#include "padlog/padic_io.hpp"

using namespace padlog;
using u64 = std::uint64_t;

namespace {

std::vector<u64> xs(const DlogResult& r) {
  std::vector<u64> out;
  for (const auto& row : r.levels) out.push_back(row.x_n);
  return out;
}

PAdicInt P(long z, u64 p, std::size_t n) { return PAdicInt::from_integer(z, p, n); }

}  // namespace

TEST(Lifting, ReferenceTraces) {
  EXPECT_EQ(xs(solve_by_lifting(-3, 5, 2, 10)), (std::vector<u64>{1, 1, 1, 3, 3, 11, 11, 11, 11, 11}));
  EXPECT_EQ(solve_by_lifting(-2, 3, 5, 4).levels.back().x_n, 357u);
  EXPECT_EQ(format_digit_list(PAdicInt::from_integer(357L, 5, 4)), "2,1,4,2");
  EXPECT_EQ(solve_by_lifting(-4, 6, 5, 6).levels.back().x_n, 929u);
  const DlogResult r = solve_by_lifting(-3, 5, 2, 16);
  EXPECT_EQ(format_digit_list(*r.x), "1,1,0,1,0,0,0,0,1,0,1,1,1,1");
  EXPECT_EQ(r.effective_precision, 14u);
}

TEST(Lifting, Errors) {
  EXPECT_THROW(solve_by_lifting(1, 5, 2, 4), Error);
  EXPECT_THROW(solve_by_lifting(10, 3, 5, 4), Error);
  EXPECT_THROW(solve_by_lifting(2, 3, 4, 4), Error);
  const DlogResult r = solve_by_lifting(26, 6, 5, 4);
  EXPECT_EQ(r.verdict, Verdict::Unsolvable);
  EXPECT_EQ(r.failed_level, std::optional<std::size_t>(2));
  EXPECT_EQ(brute_dlog(26, 6, 5, 2), std::nullopt);
}

TEST(Lifting, ConvergenceCertificate) {
  DlogResult r = solve_by_lifting(-3, 5, 2, 10);
  EXPECT_TRUE(convergence_certificate(r.levels, -3, 2));
  std::vector<LevelRow> constant(5);
  for (std::size_t i = 0; i < 5; ++i) constant[i] = {i + 1, 7, 1};
  EXPECT_TRUE(convergence_certificate(constant, 5, 3));
  r.levels[4].x_n += 1;
  EXPECT_FALSE(convergence_certificate(r.levels, -3, 2));
}

// Every lifted x_n equals the exhaustive answer, sampled up to p^n = 10^5.
TEST(LiftingProperty, MatchesBruteForce) {
  std::mt19937_64 rng(17);
  for (u64 p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 97u}) {
    for (unsigned n = 1; nt::checked_pow(p, n) <= 100000; ++n) {
      const u64 m = nt::checked_pow(p, n);
      for (int trial = 0; trial < 60; ++trial) {
        const u64 a = 2 + rng() % (m - 1);
        const u64 b = 1 + rng() % (m - 1);
        if (a % p == 0 || b % p == 0 || a % m == 1) continue;
        const auto expected = oracle::dlog(a, b, m);
        const LiftingTrace t = lifting_trace(a, b, p, n);
        if (expected) {
          ASSERT_FALSE(t.failed_level);
          EXPECT_EQ(t.rows.back().x_n, *expected) << a << " " << b << " " << m;
        } else {
          ASSERT_TRUE(t.failed_level);
          const u64 fail_mod = nt::checked_pow(p, static_cast<unsigned>(*t.failed_level));
          EXPECT_FALSE(oracle::dlog(a, b, fail_mod).has_value());
        }
      }
    }
  }
}

TEST(LogRatio, Examples) {
  const std::size_t N = 10;
  for (long p : {3L, 5L, 7L, 11L}) {
    const DlogResult r = solve_log_ratio(PrincipalUnit::from_integer(1 - p, p, N + 1),
                                         PrincipalUnit::from_integer(1 + p, p, N + 1), N + 1);
    ASSERT_EQ(r.verdict, Verdict::Solvable);
    const auto m = static_cast<std::uint64_t>(p * p * p * p);
    const auto brute = oracle::dlog(m * p + 1 - p, 1 + p, m * p);
    ASSERT_TRUE(brute);
    EXPECT_EQ(reduce_mod(*r.x, 4), *brute % m) << p;
    EXPECT_EQ(r.effective_precision, N);
  }
  const DlogResult same = solve_log_ratio(PrincipalUnit::from_integer(6, 5, 8), PrincipalUnit::from_integer(6, 5, 8), 8);
  EXPECT_EQ(same.x->to_integer(), 1);

  const DlogResult sq = solve_log_ratio(PrincipalUnit::from_integer(9, 2, 17), PrincipalUnit::from_integer(25, 2, 17), 17);
  ASSERT_EQ(sq.verdict, Verdict::Solvable);
  EXPECT_EQ(format_power_sum(sq.x->truncated(14)), "1 + 2 + 2^3 + 2^8 + 2^10 + 2^11 + 2^12 + 2^13 + O(2^14)");

  const DlogResult none = solve_log_ratio(PrincipalUnit::from_integer(26, 5, 8), PrincipalUnit::from_integer(6, 5, 8), 8);
  EXPECT_EQ(none.verdict, Verdict::Unsolvable);
}

TEST(LogRatio, PowRecoversTarget) {
  const DlogResult r = solve_log_ratio(PrincipalUnit::from_integer(-4, 5, 9), PrincipalUnit::from_integer(6, 5, 9), 9);
  const PrincipalUnit a = PrincipalUnit::from_integer(-4, 5, 8);
  EXPECT_EQ(padic_pow(a, *r.x, 8).value.to_integer(), 6);
}

// For principal-unit integer pairs the two methods give the same digits.
TEST(MethodAgreement, LogRatioMatchesLifting) {
  for (long p : {2L, 3L, 5L, 7L}) {
    const long step = p == 2 ? 4 : p;
    for (long a = 1 + step; a < 1 + 6 * step; a += step) {
      for (long b = 1 + step; b < 1 + 8 * step; b += step) {
        const std::size_t digits = 12;
        const DlogResult ratio = solve_log_ratio(PrincipalUnit::from_integer(a, p, digits + 6),
                                                 PrincipalUnit::from_integer(b, p, digits + 6), digits + 6);
        if (ratio.verdict != Verdict::Solvable) continue;
        std::size_t n = digits;
        DlogResult lift = solve_by_lifting(a, b, p, n);
        while (lift.effective_precision < digits && nt::checked_pow(p, 1) && n < 40) {
          Integer bound;
          mpz_ui_pow_ui(bound.get_mpz_t(), p, n + 1);
          if (bound > Integer(static_cast<unsigned long>(nt::kMaxModulus))) break;
          lift = solve_by_lifting(a, b, p, ++n);
        }
        const std::size_t k = std::min({digits, lift.effective_precision, ratio.effective_precision});
        ASSERT_GT(k, 0u);
        EXPECT_TRUE(ratio.x->truncated(k) == lift.x->truncated(k)) << a << " " << b << " " << p;
      }
    }
  }
}

TEST(Existence, Examples) {
  for (long p : {3L, 5L, 7L}) {
    const ExistenceVerdict v = check_existence(P(1 + p * p, p, 8), P(1 + p, p, 8));
    EXPECT_EQ(v.conclusion, Verdict::Unsolvable);
    EXPECT_EQ(v.reason, ExistenceReason::PrincipalDepthFails);
  }
  EXPECT_EQ(check_existence(P(7, 5, 8), P(7, 5, 8)).conclusion, Verdict::Solvable);
  EXPECT_EQ(check_existence(P(-4, 5, 8), P(6, 5, 8)).conclusion, Verdict::Solvable);
  EXPECT_EQ(check_existence(P(6, 5, 8), P(7, 5, 8)).reason, ExistenceReason::TargetNotPrincipal);
  EXPECT_EQ(check_existence(P(26, 5, 8), P(3, 5, 8)).conclusion, Verdict::Unsolvable);
  EXPECT_THROW(check_existence(P(1, 5, 8), P(6, 5, 8)), Error);
  EXPECT_THROW(check_existence(P(5, 5, 8), P(6, 5, 8)), Error);
  // Sufficient condition fails for a general unit: undetermined.
  const ExistenceVerdict g = check_existence(P(4, 5, 8), P(2, 5, 8));
  EXPECT_FALSE(g.torsion_ok);
  EXPECT_EQ(g.conclusion, Verdict::Undetermined);
}

// depth(a) <= depth(b) iff a^x = b is solvable, on 1 + p^r s at level 8.
TEST(ExistenceProperty, PrincipalIff) {
  for (long p : {3L, 5L, 7L}) {
    for (long ra = 1; ra <= 4; ++ra) {
      for (long sa = 1; sa < p; ++sa) {
        const long a = 1 + static_cast<long>(nt::checked_pow(p, ra)) * sa;
        for (long rb = 1; rb <= 4; ++rb) {
          for (long sb = 1; sb < p; ++sb) {
            const long b = 1 + static_cast<long>(nt::checked_pow(p, rb)) * sb;
            const ExistenceVerdict v = check_existence(P(a, p, 8), P(b, p, 8));
            const bool solvable = solve_by_lifting(a, b, p, 8).verdict == Verdict::Solvable;
            EXPECT_EQ(v.conclusion == Verdict::Solvable, ra <= rb);
            EXPECT_EQ(solvable, ra <= rb) << a << " " << b << " " << p;
          }
        }
      }
    }
  }
}

// The index of <a> in the p-part of Z_{p^n}^* is p^{depth(a) - 1}.
TEST(ExistenceProperty, IndexOfPrincipalSubgroup) {
  for (u64 p : {3u, 5u, 7u}) {
    for (unsigned r = 1; r <= 3; ++r) {
      for (u64 s = 1; s < p; ++s) {
        const u64 a = 1 + nt::checked_pow(p, r) * s;
        for (unsigned n = r; n <= 6; ++n) {
          const u64 m = nt::checked_pow(p, n);
          const u64 p_part = nt::checked_pow(p, n - 1);
          EXPECT_EQ(p_part / oracle::order(a, m), nt::checked_pow(p, r - 1));
        }
      }
    }
  }
}

TEST(Units, Examples) {
  const DlogResult principal = solve_units(P(6, 5, 8), P(11, 5, 8), 8);
  EXPECT_EQ(principal.torsion, (TorsionResidue{0, 1}));
  EXPECT_EQ(principal.method, Method::Combined);

  const DlogResult ex9 = solve_units(P(-3, 2, 16), P(5, 2, 16), 16);
  EXPECT_EQ(format_digit_list(*ex9.x), "1,1,0,1,0,0,0,0,1,0,1,1,1,1");

  const DlogResult two = solve_units(P(2, 5, 8), P(4, 5, 8), 8);
  EXPECT_EQ(two.torsion, (TorsionResidue{2, 4}));
  for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(brute_dlog(2, 4, 5, n), std::optional<u64>(2));
  EXPECT_EQ(two.x->to_integer() % 5, 2);

  EXPECT_THROW(solve_units(P(4, 5, 8), P(2, 5, 8), 8), Error);
  EXPECT_THROW(solve_units(P(5, 2, 8), P(3, 2, 8), 8), Error);
}

// An integer e solves a^e = b mod p^n iff e = t mod m and e = x mod p^{n-c}.
TEST(UnitsProperty, PairDescribesAllSolutions) {
  for (long p : {3L, 5L, 7L}) {
    const std::size_t N = 5;
    for (long a = 2; a < 30; ++a) {
      if (a % p == 0) continue;
      for (long b = 2; b < 30; ++b) {
        if (b % p == 0) continue;
        DlogResult r;
        try {
          r = solve_units(P(a, p, N + 4), P(b, p, N + 4), N + 4);
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::Unsolvable);
          EXPECT_FALSE(oracle::dlog(a, b, p).has_value());
          continue;
        }
        if (r.verdict != Verdict::Solvable) continue;
        const std::size_t k = std::min(N, r.effective_precision);
        const u64 pk = nt::checked_pow(p, static_cast<unsigned>(k));
        const u64 x = r.x->truncated(k).to_integer().get_ui();
        const u64 mk = nt::checked_pow(p, static_cast<unsigned>(k + 1));
        int hits = 0;
        for (u64 j = 0; j < r.torsion->modulus; ++j) {
          const u64 e = x + j * pk;
          if (e % r.torsion->modulus != r.torsion->residue) continue;
          ++hits;
          EXPECT_EQ(nt::pow_mod(nt::reduce(a, mk), e, mk), nt::reduce(b, mk)) << a << " " << b << " " << p;
        }
        EXPECT_EQ(hits, 1);
      }
    }
  }
}

TEST(SolutionIsUnit, DepthEquality) {
  EXPECT_TRUE(solution_is_unit(PrincipalUnit::from_integer(-4, 5, 8), PrincipalUnit::from_integer(6, 5, 8)));
  EXPECT_FALSE(solution_is_unit(PrincipalUnit::from_integer(6, 5, 8), PrincipalUnit::from_integer(7776, 5, 8)));
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const long a = 1 + 7 * static_cast<long>(1 + rng() % 6);
    const PrincipalUnit ua = PrincipalUnit::from_integer(a, 7, 10);
    const PrincipalUnit ub = PrincipalUnit::make(pow(ua.value, Integer(7 * static_cast<long>(1 + rng() % 5))));
    EXPECT_FALSE(solution_is_unit(ua, ub));
    const DlogResult r = solve_log_ratio(ua, ub, 10);
    EXPECT_EQ(r.x->digit(0), 0u);
  }
}
