#include "padlog/quotient_structure.hpp"

#include <map>
#include <string>

#include "padlog/error.hpp"
#include "padlog/numth.hpp"

namespace padlog {

namespace {

using K = GroupComponent::Kind;

GroupComponent free_part(u64 scale) { return {K::Free, scale}; }
GroupComponent padic_part(u64 exponent) { return {K::PAdic, exponent}; }
GroupComponent cyclic(u64 n) { return {K::Cyclic, n}; }

}  // namespace

std::vector<u64> SymbolicGroup::finite_factors() const {
  std::vector<u64> out;
  for (const auto& c : components) {
    if (c.kind == K::Cyclic && c.scale > 1) out.push_back(c.scale);
  }
  return out;
}

bool SymbolicGroup::is_finite() const {
  for (const auto& c : components) {
    if (c.kind != K::Cyclic) return false;
  }
  return true;
}

std::string SymbolicGroup::to_string(u64 p) const {
  std::string out;
  for (const auto& c : components) {
    if (!out.empty()) out += " x ";
    switch (c.kind) {
      case K::Free:
        out += c.scale == 1 ? "Z" : std::to_string(c.scale) + "Z";
        break;
      case K::PAdic:
        out += c.scale == 0 ? "Z_(" + std::to_string(p) + ")"
                            : std::to_string(p) + "^" + std::to_string(c.scale) + " Z_(" + std::to_string(p) + ")";
        break;
      case K::Cyclic:
        out += c.scale == 1 ? "0" : "Z_" + std::to_string(c.scale);
        break;
    }
  }
  return out;
}

PowerMapReport power_map_report(u64 p, u64 k) {
  if (!nt::is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (k == 0) fail(ErrorCode::InvalidArgument, "k must be at least 1");
  PowerMapReport r;
  r.p = p;
  r.k = k;
  r.torsion_order = p == 2 ? 2 : p - 1;
  r.d2 = nt::gcd(r.torsion_order, k);
  r.d1 = r.torsion_order / r.d2;
  r.m = nt::valuation(k, p);
  const u64 pm = nt::checked_pow(p, r.m);

  r.image = {{free_part(k), cyclic(r.d1), padic_part(r.m)}};
  r.kernel = {{cyclic(1), cyclic(r.d2), cyclic(1)}};
  r.domain_mod_kernel = {{free_part(1), cyclic(r.d1), padic_part(0)}};
  r.codomain_mod_image = {{cyclic(k), cyclic(r.d2), cyclic(pm)}};
  return r;
}

std::vector<u64> predicted_unit_cokernel(u64 p, unsigned n, u64 k) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "n must be at least 1");
  // Z_{p^n}^* = Z_t x Z_{p^e}.
  u64 t = p == 2 ? (n >= 2 ? 2 : 1) : p - 1;
  unsigned e = p == 2 ? (n >= 2 ? n - 2 : 0) : n - 1;
  std::vector<u64> out;
  const u64 torsion = nt::gcd(t, k);
  if (torsion > 1) out.push_back(torsion);
  const unsigned m = std::min<unsigned>(nt::valuation(k, p), e);
  if (m > 0) out.push_back(nt::checked_pow(p, m));
  return out;
}

AbelianStructure verify_cokernel_finite_level(u64 p, unsigned n, u64 k, u64 cap) {
  if (!nt::is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (k == 0) fail(ErrorCode::InvalidArgument, "k must be at least 1");
  const u64 modulus = nt::checked_pow(p, n);
  if (modulus > cap) fail(ErrorCode::ModulusTooLarge, std::to_string(modulus) + " exceeds the enumeration cap");

  std::vector<bool> in_image(modulus, false);
  u64 image_size = 0;
  for (u64 x = 1; x < modulus; ++x) {
    if (x % p == 0) continue;
    const u64 y = nt::pow_mod(x, k, modulus);
    if (!in_image[y]) {
      in_image[y] = true;
      ++image_size;
    }
  }
  // Order of the coset g * image is the least t with g^t in the image; it
  // divides k because every g^k lies in the image.
  std::map<u64, u64> census;
  for (u64 g = 1; g < modulus; ++g) {
    if (g % p == 0) continue;
    u64 y = g % modulus;
    u64 t = 1;
    while (!in_image[y]) {
      y = nt::mul_mod(y, g, modulus);
      ++t;
    }
    ++census[t];
  }
  for (auto& [order, count] : census) {
    if (count % image_size != 0) fail(ErrorCode::InternalInvariant, "coset census not divisible by image size");
    count /= image_size;
  }
  AbelianStructure s;
  s.factors = invariant_factors_from_order_census(census);
  if (s.factors.size() <= 1) s.cyclic = s.order();
  return s;
}

}  // namespace padlog
