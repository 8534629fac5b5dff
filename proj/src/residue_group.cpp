#include "padlog/residue_group.hpp"

#include <algorithm>
#include <string>

#include "padlog/error.hpp"
#include "padlog/numth.hpp"

namespace padlog {

namespace {

u64 checked_prime_power(u64 p, unsigned n) {
  if (!nt::is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  return nt::checked_pow(p, n);
}

u64 unit_residue(i64 a, u64 m, const char* name) {
  u64 r = nt::reduce(a, m);
  if (nt::gcd(r, m) != 1) fail(ErrorCode::NotCoprime, std::string(name) + " = " + std::to_string(a) + " is not coprime to " + std::to_string(m));
  return r;
}

u64 order_with_phi(u64 a, u64 m, const nt::Factorization& phi) {
  u64 t = nt::product(phi);
  for (const auto& [q, e] : phi) {
    for (unsigned i = 0; i < e && t % q == 0; ++i) {
      if (nt::pow_mod(a, t / q, m) != 1 % m) break;
      t /= q;
    }
  }
  return t;
}

}  // namespace

u64 AbelianStructure::order() const {
  u64 r = 1;
  for (u64 f : factors) r *= f;
  return r;
}

u64 AbelianStructure::exponent() const {
  u64 r = 1;
  for (u64 f : factors) r = nt::lcm(r, f);
  return r;
}

std::vector<u64> AbelianStructure::invariant_factors() const { return padlog::invariant_factors(factors); }

std::vector<u64> invariant_factors(std::span<const u64> factors) {
  std::map<u64, std::vector<u64>> by_prime;
  for (u64 f : factors) {
    for (const auto& [q, e] : nt::factorize(f)) by_prime[q].push_back(nt::checked_pow(q, e));
  }
  std::size_t rank = 0;
  for (auto& [q, powers] : by_prime) {
    std::sort(powers.begin(), powers.end(), std::greater<>());
    rank = std::max(rank, powers.size());
  }
  // Largest invariant factor collects the largest power of every prime.
  std::vector<u64> out(rank, 1);
  for (const auto& [q, powers] : by_prime) {
    for (std::size_t i = 0; i < powers.size(); ++i) out[rank - 1 - i] *= powers[i];
  }
  return out;
}

std::vector<u64> invariant_factors_from_order_census(const std::map<u64, u64>& order_counts) {
  u64 total = 0;
  for (const auto& [ord, count] : order_counts) total += count;
  std::vector<u64> elementary;
  for (const auto& [q, e] : nt::factorize(total)) {
    // count[j] = #{x : x^{q^j} = 1}; successive ratios q^{r_j} give the number
    // r_j of cyclic q-factors of exponent >= j.
    std::vector<unsigned> r;
    u64 prev = 1;
    for (unsigned j = 1; j <= e; ++j) {
      u64 qj = nt::checked_pow(q, j);
      u64 count = 0;
      for (const auto& [ord, c] : order_counts) {
        if (qj % ord == 0) count += c;
      }
      unsigned rj = nt::valuation(count / prev, q);
      if (rj == 0) break;
      r.push_back(rj);
      prev = count;
    }
    for (std::size_t j = 0; j < r.size(); ++j) {
      unsigned next = j + 1 < r.size() ? r[j + 1] : 0;
      for (unsigned c = 0; c < r[j] - next; ++c) elementary.push_back(nt::checked_pow(q, static_cast<unsigned>(j + 1)));
    }
  }
  return invariant_factors(elementary);
}

u64 euler_phi(u64 n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "phi(0) is undefined");
  return nt::product(nt::phi_factorization(nt::factorize(n)));
}

u64 order_mod(i64 a, u64 modulus) {
  if (modulus == 0) fail(ErrorCode::InvalidArgument, "modulus must be positive");
  if (modulus == 1) return 1;
  u64 r = unit_residue(a, modulus, "a");
  return order_with_phi(r, modulus, nt::phi_factorization(nt::factorize(modulus)));
}

OrderProfile order_profile(i64 a, u64 p, unsigned n_max) {
  if (n_max == 0) fail(ErrorCode::InvalidArgument, "n_max must be at least 1");
  checked_prime_power(p, n_max);
  unit_residue(a, p, "a");
  OrderProfile profile{a, p, {}, 1};
  for (unsigned n = 1; n <= n_max; ++n) profile.rows.push_back({n, order_mod(a, nt::checked_pow(p, n))});

  const u64 base_order = profile.rows.front().order;
  unsigned k = 1;
  while (k < n_max && profile.rows[k].order == base_order) ++k;
  profile.stable_exponent = k;

  // For p = 2 and a = 3 (mod 4) the order doubles once between levels 1 and
  // 2 and the law applies from there on.
  unsigned law_start = 1;
  if (p == 2 && n_max >= 2 && nt::reduce(a, 4) == 3) law_start = 2;
  const u64 law_order = profile.rows[law_start - 1].order;
  unsigned law_k = law_start;
  while (law_k < n_max && profile.rows[law_k].order == law_order) ++law_k;
  if (law_start == 1) law_k = k;
  for (unsigned n = law_k; n <= n_max; ++n) {
    u64 expected = law_order * nt::checked_pow(p, n - law_k);
    if (profile.rows[n - 1].order != expected) {
      fail(ErrorCode::InternalInvariant, "order growth law violated at level " + std::to_string(n));
    }
  }
  return profile;
}

std::optional<u64> brute_dlog(i64 a, i64 b, u64 p, unsigned n, u64 cap) {
  const u64 m = checked_prime_power(p, n);
  if (m > cap) fail(ErrorCode::ModulusTooLarge, std::to_string(p) + "^" + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap));
  const u64 ar = unit_residue(a, m, "a");
  const u64 br = unit_residue(b, m, "b");
  u64 cur = ar % m;
  for (u64 x = 1;; ++x) {
    if (cur == br % m) return x;
    if (cur == 1 % m) return std::nullopt;
    cur = nt::mul_mod(cur, ar, m);
  }
}

bool subgroup_contains(i64 a, i64 b, u64 p, unsigned n, u64 cap) {
  const u64 m = checked_prime_power(p, n);
  const u64 ord = order_mod(a, m);
  const u64 br = unit_residue(b, m, "b");
  if (nt::pow_mod(br, ord, m) != 1 % m) return false;
  return brute_dlog(a, b, p, n, cap).has_value();
}

AbelianStructure group_structure(u64 n) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "group_structure needs n >= 2");
  AbelianStructure s;
  for (const auto& [p, k] : nt::factorize(n)) {
    if (p == 2) {
      if (k >= 2) s.factors.push_back(2);
      if (k >= 3) s.factors.push_back(nt::checked_pow(2, k - 2));
    } else {
      if (p - 1 > 1) s.factors.push_back(p - 1);
      if (k >= 2) s.factors.push_back(nt::checked_pow(p, k - 1));
    }
  }
  if (s.invariant_factors().size() <= 1) s.cyclic = s.order();
  return s;
}

}  // namespace padlog
