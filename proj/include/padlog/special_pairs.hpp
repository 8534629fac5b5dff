#pragma once

// Special pairs (a, b) mod p^n: a, b prime to p, <a> = <b> in Z_{p^n}^*, and
// the exponent x_o with a^{x_o} = b of maximal order in Z_{o(a)}^*.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "padlog/residue_group.hpp"

namespace padlog {

enum class SpecialFailure { None, NotCoprime, SubgroupsDiffer, OrderNotMaximal };

std::string_view to_string(SpecialFailure f);

struct SpecialPairReport {
  i64 a;
  i64 b;
  u64 p;
  unsigned n;
  bool is_special;
  SpecialFailure failure;
  std::optional<u64> x_o;      // smallest x in [1, o(a)] with a^x = b
  u64 ord_a = 0;
  u64 ord_b = 0;
  std::optional<u64> x_order;  // order of x_o in Z_{o(a)}^*
  u64 max_possible = 0;        // exponent of Z_{o(a)}^*
  u64 index = 0;               // [Z_{p^n}^* : <a>]
};

inline constexpr u64 kSpecialPairCap = 1'000'000;

/// Throws ModulusTooLarge when p^n > cap.
SpecialPairReport analyze_pair(i64 a, i64 b, u64 p, unsigned n, u64 cap = kSpecialPairCap);

struct CycleDecomposition {
  u64 modulus;
  std::vector<std::vector<u64>> cycles;
};

/// Cycles of t -> x t mod m on {1, ..., m - 1}, each starting at its least
/// element, ordered by that element. Throws NotCoprime.
CycleDecomposition cycle_decomposition(u64 x, u64 m);

}  // namespace padlog
