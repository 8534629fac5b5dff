#pragma once

// Word-size modular arithmetic shared by the finite-level modules. Moduli are
// kept below 2^62 so that every product fits an unsigned 128-bit intermediate.

#include <cstdint>
#include <utility>
#include <vector>

namespace padlog::nt {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline constexpr u64 kMaxModulus = u64{1} << 62;

struct PrimePower {
  u64 prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m);

/// Canonical representative of `a` in [0, m); negative inputs wrap.
u64 reduce(i64 a, u64 m);

u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);

/// Inverse of a modulo m by the extended Euclidean algorithm.
/// Throws NotCoprime when gcd(a, m) != 1.
u64 inverse_mod(u64 a, u64 m);

bool is_prime(u64 n);

/// Trial-division factorization, primes ascending. factorize(1) is empty.
Factorization factorize(u64 n);

/// p^n, throwing ModulusTooLarge when the result would reach kMaxModulus.
u64 checked_pow(u64 p, unsigned n);

/// Largest e with p^e | z (z != 0).
unsigned valuation(u64 z, u64 p);

/// Number of elements in Z_n^* together with its factorization, derived from
/// the factorization of n.
Factorization phi_factorization(const Factorization& n_factors);

u64 product(const Factorization& f);

}  // namespace padlog::nt
