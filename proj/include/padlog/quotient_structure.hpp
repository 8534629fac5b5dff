#pragma once

// The k-th power map on Q_(p)^* = Z x T x Z_(p), where T is the torsion of
// the units (Z_{p-1} for odd p, {+1, -1} for p = 2) and the last coordinate
// is U_1 (odd p) or U_2 (p = 2) under the logarithm.

#include <cstdint>
#include <string>
#include <vector>

#include "padlog/residue_group.hpp"

namespace padlog {

/// One coordinate of a group written as Z x T x Z_(p).
struct GroupComponent {
  enum class Kind {
    Free,    // scale * Z, isomorphic to Z
    PAdic,   // p^scale * Z_(p), isomorphic to Z_(p)
    Cyclic,  // Z_scale; scale 1 is the trivial group
  };
  Kind kind;
  u64 scale;

  friend bool operator==(const GroupComponent&, const GroupComponent&) = default;
};

struct SymbolicGroup {
  std::vector<GroupComponent> components;

  /// Sizes of the cyclic components, trivial ones dropped, in order.
  std::vector<u64> finite_factors() const;
  bool is_finite() const;
  std::string to_string(u64 p) const;

  friend bool operator==(const SymbolicGroup&, const SymbolicGroup&) = default;
};

struct PowerMapReport {
  u64 p;
  u64 k;
  u64 torsion_order;  // |T|
  u64 d1;             // |T| / gcd(|T|, k)
  u64 d2;             // gcd(|T|, k)
  unsigned m;         // v_p(k)
  SymbolicGroup image;
  SymbolicGroup kernel;
  SymbolicGroup domain_mod_kernel;
  SymbolicGroup codomain_mod_image;
};

PowerMapReport power_map_report(u64 p, u64 k);

/// Cokernel of x -> x^k on Z_{p^n}^* predicted from the cyclic
/// decomposition of the unit group, as a factor list (trivial ones dropped).
std::vector<u64> predicted_unit_cokernel(u64 p, unsigned n, u64 k);

/// Exhaustive cokernel of x -> x^k on Z_{p^n}^*. Throws ModulusTooLarge past
/// `cap`.
inline constexpr u64 kCokernelCap = 100'000;
AbelianStructure verify_cokernel_finite_level(u64 p, unsigned n, u64 k, u64 cap = kCokernelCap);

}  // namespace padlog
