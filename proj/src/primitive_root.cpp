#include "padlog/primitive_root.hpp"

#include <algorithm>
#include <string>

#include "padlog/error.hpp"
#include "padlog/numth.hpp"

namespace padlog {

namespace {

void require_prime(u64 p) {
  if (!nt::is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

bool generates_p_and_p2(u64 r, u64 p) {
  return order_mod(static_cast<i64>(r), p) == p - 1 && order_mod(static_cast<i64>(r), p * p) == p * (p - 1);
}

}  // namespace

std::string_view to_string(RootDerivation d) {
  switch (d) {
    case RootDerivation::Direct: return "direct";
    case RootDerivation::Negated: return "negated";
    case RootDerivation::NegatedSquare: return "negated-square";
    case RootDerivation::MultipliedByOnePlusP: return "multiplied-by-1+p";
  }
  return "?";
}

bool is_primitive_root(i64 r, u64 n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "modulus must be positive");
  return order_mod(r, n) == euler_phi(n);
}

u64 gauss_search(u64 p, std::vector<GaussStep>* trace) {
  require_prime(p);
  if (p == 2) {
    if (trace) trace->push_back({1, 1});
    return 1;
  }
  const auto target = nt::factorize(p - 1);
  u64 a = 2;
  while (true) {
    const u64 t = order_mod(static_cast<i64>(a), p);
    if (trace) {
      if (!trace->empty() && trace->back().order >= t) fail(ErrorCode::InternalInvariant, "orders failed to increase");
      trace->push_back({a, t});
    }
    if (t == p - 1) return a;

    std::vector<bool> in_subgroup(p, false);
    for (u64 x = 1, i = 0; i < t; ++i, x = nt::mul_mod(x, a, p)) in_subgroup[x] = true;
    u64 b = 2;
    while (in_subgroup[b]) ++b;
    const u64 s = order_mod(static_cast<i64>(b), p);

    // Split lcm(t, s) = m * n with m | t, n | s coprime: each prime power of
    // the lcm goes to whichever order contains it, ties to t.
    u64 m = 1, n = 1;
    for (const auto& [q, e] : nt::factorize(nt::lcm(t, s))) {
      const u64 qe = nt::checked_pow(q, e);
      if (t % qe == 0) {
        m *= qe;
      } else {
        n *= qe;
      }
    }
    a = nt::mul_mod(nt::pow_mod(a, t / m, p), nt::pow_mod(b, s / n, p), p);
  }
}

u64 sqrt_minus_one(u64 p) {
  require_prime(p);
  if (p % 4 != 1) fail(ErrorCode::WrongResidueClass, std::to_string(p) + " is not 1 mod 4");
  return nt::pow_mod(gauss_search(p), (p - 1) / 4, p);
}

PrimitiveRootCertificate stabilize(u64 r, u64 p, bool use_one_plus_p) {
  require_prime(p);
  if (p == 2) fail(ErrorCode::NotInRange, "Z_{2^n}^* is not cyclic for n >= 3");
  r %= p;
  if (r == 0 || order_mod(static_cast<i64>(r), p) != p - 1) {
    fail(ErrorCode::NotAPrimitiveRoot, std::to_string(r) + " is not a primitive root of " + std::to_string(p));
  }
  if (generates_p_and_p2(r, p)) return {p, r, RootDerivation::Direct, p};
  if (use_one_plus_p) {
    const u64 p2 = p * p;
    const u64 lifted = nt::mul_mod(r, 1 + p, p2);
    if (order_mod(static_cast<i64>(lifted), p2) != p * (p - 1)) fail(ErrorCode::InternalInvariant, "r(1+p) failed to generate");
    return {p, lifted, RootDerivation::MultipliedByOnePlusP, p2};
  }
  PrimitiveRootCertificate cert{p, 0, RootDerivation::Negated, p};
  if (p % 4 == 1) {
    cert.root = p - r;
  } else {
    cert.root = p - nt::mul_mod(r, r, p);
    cert.derivation = RootDerivation::NegatedSquare;
  }
  if (!generates_p_and_p2(cert.root, p)) fail(ErrorCode::InternalInvariant, "stabilized root fails modulo p^2");
  return cert;
}

bool has_primitive_root(u64 n) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "has_primitive_root needs n >= 2");
  if (n == 2 || n == 4) return true;
  if (n % 2 == 0) n /= 2;
  if (n % 2 == 0) return false;
  return nt::factorize(n).size() == 1;
}

std::vector<u64> all_stable_roots(u64 p) {
  require_prime(p);
  if (p == 2 || p > kStableRootTableLimit) {
    fail(ErrorCode::NotInRange, "table covers odd primes up to " + std::to_string(kStableRootTableLimit));
  }
  std::vector<u64> out;
  for (u64 r = 2; r < p; ++r) {
    if (generates_p_and_p2(r, p)) out.push_back(r);
  }
  return out;
}

std::vector<u64> stable_root_representatives(u64 p) {
  const auto all = all_stable_roots(p);
  if (p % 4 == 3) return all;
  std::vector<u64> out;
  for (u64 r : all) {
    const bool partner_listed = std::binary_search(all.begin(), all.end(), p - r);
    if (!partner_listed || r < p - r) out.push_back(r);
  }
  return out;
}

}  // namespace padlog
