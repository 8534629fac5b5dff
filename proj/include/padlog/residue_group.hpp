#pragma once

// Finite-level facts about Z_{p^n}^* and Z_n^*: Euler phi, element orders,
// order profiles across levels, group structure, and an exhaustive discrete
// log used as the reference oracle by the solver tests.
//
// Integer inputs may be negative; they are reduced to [0, m) first.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace padlog {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Default ceiling on p^n for exhaustive enumeration.
inline constexpr u64 kBruteForceCap = 10'000'000;

/// A finite abelian group as a list of cyclic factor sizes. `factors` keeps
/// the construction order (per prime of the modulus: the part of order prime
/// to p, then the p-part); `cyclic` is set when the group is cyclic.
struct AbelianStructure {
  std::vector<u64> factors;
  std::optional<u64> cyclic;

  u64 order() const;
  u64 exponent() const;
  /// Canonical d_1 | d_2 | ... | d_r, ascending, trivial factors dropped.
  std::vector<u64> invariant_factors() const;

  friend bool operator==(const AbelianStructure&, const AbelianStructure&) = default;
};

std::vector<u64> invariant_factors(std::span<const u64> factors);

/// Recovers the invariant factors of a finite abelian group from the number
/// of elements of each order.
std::vector<u64> invariant_factors_from_order_census(const std::map<u64, u64>& order_counts);

u64 euler_phi(u64 n);

/// Multiplicative order of a modulo `modulus`, by factoring phi and
/// descending. Throws NotCoprime.
u64 order_mod(i64 a, u64 modulus);

struct OrderRow {
  unsigned level;
  u64 order;
};

struct OrderProfile {
  i64 base;
  u64 prime;
  std::vector<OrderRow> rows;
  /// Largest level whose order still equals the order modulo p (a lower bound
  /// when the order never moved within the rows).
  unsigned stable_exponent;
};

/// Orders of a modulo p, p^2, ..., p^{n_max}. Checks the growth law
/// order(n) = order(k) * p^{n-k} for n >= k and throws InternalInvariant if it
/// is ever violated. For p = 2 and a = 3 (mod 4) the law starts at level 2.
OrderProfile order_profile(i64 a, u64 p, unsigned n_max);

/// Smallest x in [1, ord(a)] with a^x = b modulo p^n, by enumeration.
std::optional<u64> brute_dlog(i64 a, i64 b, u64 p, unsigned n, u64 cap = kBruteForceCap);

/// Whether b lies in the subgroup of Z_{p^n}^* generated by a.
bool subgroup_contains(i64 a, i64 b, u64 p, unsigned n, u64 cap = kBruteForceCap);

/// Structure of Z_n^* from the prime-power structure theorems composed over
/// the factorization of n.
AbelianStructure group_structure(u64 n);

}  // namespace padlog
