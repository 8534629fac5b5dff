#include "padlog/special_pairs.hpp"

#include <string>

#include "padlog/error.hpp"
#include "padlog/numth.hpp"

namespace padlog {

std::string_view to_string(SpecialFailure f) {
  switch (f) {
    case SpecialFailure::None: return "none";
    case SpecialFailure::NotCoprime: return "not-coprime";
    case SpecialFailure::SubgroupsDiffer: return "subgroups-differ";
    case SpecialFailure::OrderNotMaximal: return "order-not-maximal";
  }
  return "?";
}

SpecialPairReport analyze_pair(i64 a, i64 b, u64 p, unsigned n, u64 cap) {
  if (!nt::is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  const u64 modulus = nt::checked_pow(p, n);
  if (modulus > cap) fail(ErrorCode::ModulusTooLarge, std::to_string(modulus) + " exceeds the special-pair cap");

  SpecialPairReport r{a, b, p, n, false, SpecialFailure::None, std::nullopt, 0, 0, std::nullopt, 0, 0};
  const u64 ar = nt::reduce(a, modulus);
  const u64 br = nt::reduce(b, modulus);
  if (ar % p == 0 || br % p == 0) {
    r.failure = SpecialFailure::NotCoprime;
    return r;
  }
  r.ord_a = order_mod(static_cast<i64>(ar), modulus);
  r.ord_b = order_mod(static_cast<i64>(br), modulus);
  r.index = euler_phi(modulus) / r.ord_a;
  r.max_possible = r.ord_a < 2 ? 1 : group_structure(r.ord_a).exponent();

  u64 y = ar % modulus;
  for (u64 x = 1; x <= r.ord_a; ++x) {
    if (y == br) {
      r.x_o = x;
      break;
    }
    y = nt::mul_mod(y, ar, modulus);
  }
  if (!r.x_o || r.ord_a != r.ord_b) {
    r.failure = SpecialFailure::SubgroupsDiffer;
    return r;
  }
  r.x_order = r.ord_a == 1 ? 1 : order_mod(static_cast<i64>(*r.x_o % r.ord_a), r.ord_a);
  if (*r.x_order != r.max_possible) {
    r.failure = SpecialFailure::OrderNotMaximal;
    return r;
  }
  r.is_special = true;
  return r;
}

CycleDecomposition cycle_decomposition(u64 x, u64 m) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "modulus must be positive");
  if (nt::gcd(x % m, m) != 1 && m > 1) fail(ErrorCode::NotCoprime, std::to_string(x) + " is not coprime to " + std::to_string(m));
  CycleDecomposition out{m, {}};
  std::vector<bool> seen(m, false);
  for (u64 start = 1; start < m; ++start) {
    if (seen[start]) continue;
    std::vector<u64> cycle;
    for (u64 t = start; !seen[t]; t = nt::mul_mod(t, x, m)) {
      seen[t] = true;
      cycle.push_back(t);
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

}  // namespace padlog
