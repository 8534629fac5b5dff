#include "padlog/numth.hpp"

#include <map>
#include <string>

#include "padlog/error.hpp"

namespace padlog::nt {

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 reduce(i64 a, u64 m) {
  if (a >= 0) return static_cast<u64>(a) % m;
  // -(a + 1) avoids overflow for INT64_MIN.
  u64 magnitude = static_cast<u64>(-(a + 1)) + 1;
  u64 r = magnitude % m;
  return r == 0 ? 0 : m - r;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

u64 inverse_mod(u64 a, u64 m) {
  if (m == 1) return 0;
  __int128 old_r = static_cast<__int128>(a % m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) fail(ErrorCode::NotCoprime, std::to_string(a) + " has no inverse modulo " + std::to_string(m));
  if (old_s < 0) old_s += m;
  return static_cast<u64>(old_s);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for all 64-bit n.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  Factorization out;
  if (n < 2) return out;
  auto take = [&](u64 p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  take(2);
  take(3);
  for (u64 p = 5; p * p <= n; p += 6) {
    take(p);
    take(p + 2);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

u64 checked_pow(u64 p, unsigned n) {
  u64 result = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (result > (kMaxModulus - 1) / p) {
      fail(ErrorCode::ModulusTooLarge, std::to_string(p) + "^" + std::to_string(n) + " exceeds 2^62");
    }
    result *= p;
  }
  return result;
}

unsigned valuation(u64 z, u64 p) {
  unsigned e = 0;
  while (z != 0 && z % p == 0) {
    z /= p;
    ++e;
  }
  return e;
}

Factorization phi_factorization(const Factorization& n_factors) {
  std::map<u64, unsigned> acc;
  for (const auto& [p, k] : n_factors) {
    if (k > 1) acc[p] += k - 1;
    for (const auto& [q, e] : factorize(p - 1)) acc[q] += e;
  }
  Factorization out;
  for (const auto& [q, e] : acc) out.push_back({q, e});
  return out;
}

u64 product(const Factorization& f) {
  u64 r = 1;
  for (const auto& [p, e] : f) {
    for (unsigned i = 0; i < e; ++i) r *= p;
  }
  return r;
}

}  // namespace padlog::nt
