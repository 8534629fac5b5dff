#pragma once

// Primitive roots of p and their stabilization to every p^n.

#include <cstdint>
#include <string_view>
#include <vector>

#include "padlog/residue_group.hpp"

namespace padlog {

enum class RootDerivation { Direct, Negated, NegatedSquare, MultipliedByOnePlusP };

std::string_view to_string(RootDerivation d);

/// A residue r in [1, p-1] that generates Z_p^* and Z_{p^2}^*, hence every
/// Z_{p^n}^*.
struct PrimitiveRootCertificate {
  u64 p;
  u64 root;
  RootDerivation derivation;
  /// For MultipliedByOnePlusP the root is a residue modulo p^2, not p.
  u64 root_modulus;
};

bool is_primitive_root(i64 r, u64 n);

struct GaussStep {
  u64 element;
  u64 order;
};

/// Order-escalation search for a primitive root of p, starting from 2. Each
/// step picks the smallest b outside <a> and combines a and b into an element
/// of order lcm(ord a, ord b). The recorded orders strictly increase.
u64 gauss_search(u64 p, std::vector<GaussStep>* trace = nullptr);

/// x with x^2 = -1 (mod p), as r^{(p-1)/4} for a primitive root r.
/// Throws WrongResidueClass unless p = 1 (mod 4).
u64 sqrt_minus_one(u64 p);

/// Lifts a primitive root of p to one of p^2 (and so of all p^n): r itself,
/// else -r when p = 1 (mod 4) or -r^2 when p = 3 (mod 4). With
/// `use_one_plus_p` a failing r is replaced by r(1 + p) mod p^2 instead.
PrimitiveRootCertificate stabilize(u64 r, u64 p, bool use_one_plus_p = false);

/// True iff n is 2, 4, p^m or 2p^m for an odd prime p.
bool has_primitive_root(u64 n);

inline constexpr u64 kStableRootTableLimit = 100;

/// Every r in [2, p-1] that is a primitive root of both p and p^2 (p odd,
/// p <= 100).
std::vector<u64> all_stable_roots(u64 p);

/// One representative of each pair {r, p - r} of stable roots, the smaller
/// when both qualify. For p = 3 (mod 4), -r is never a primitive root and
/// this returns all_stable_roots(p).
std::vector<u64> stable_root_representatives(u64 p);

}  // namespace padlog
