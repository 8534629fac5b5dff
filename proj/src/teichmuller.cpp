#include "padlog/teichmuller.hpp"

#include "padlog/error.hpp"
#include "padlog/numth.hpp"
#include "padlog/residue_group.hpp"

namespace padlog {

namespace {

Integer power_of(std::uint64_t p, std::size_t n) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, n);
  return r;
}

void require_prime(std::uint64_t p) {
  if (!nt::is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

}  // namespace

std::string to_string(const Depth& d) {
  switch (d.kind) {
    case Depth::Kind::Finite: return std::to_string(d.value);
    case Depth::Kind::AtLeast: return ">=" + std::to_string(d.value);
    case Depth::Kind::Infinite: return "inf";
  }
  return "?";
}

std::optional<bool> depth_at_most(const Depth& a, const Depth& b) {
  using K = Depth::Kind;
  if (a.kind == K::Infinite) {
    if (b.kind == K::Infinite) return true;
    if (b.kind == K::Finite) return false;
    return std::nullopt;
  }
  if (a.kind == K::Finite) {
    if (b.kind == K::Finite) return a.value <= b.value;
    if (b.kind == K::Infinite) return true;
    if (b.value >= a.value) return true;
    return std::nullopt;
  }
  // a is only bounded below.
  if (b.kind == K::Finite && b.value < a.value) return false;
  return std::nullopt;
}

PAdicInt teichmuller_lift(std::uint64_t a0, std::uint64_t p, std::size_t precision,
                          std::vector<TeichmullerStep>* trace) {
  require_prime(p);
  if (a0 < 1 || a0 > p - 1) fail(ErrorCode::NotInRange, "constant digit must lie in [1, p-1]");
  if (precision == 0) fail(ErrorCode::InvalidArgument, "precision must be at least 1");
  const u64 k = order_mod(static_cast<i64>(a0), p);
  const unsigned long k_inv = static_cast<unsigned long>(nt::inverse_mod(k % p, p));

  std::vector<Digit> digits{static_cast<Digit>(a0)};
  Integer x = static_cast<unsigned long>(a0);
  Integer p_n = static_cast<unsigned long>(p);
  for (std::size_t n = 1; n < precision; ++n) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), x.get_mpz_t(), k);
    Integer numerator = power - 1;
    if (!mpz_divisible_p(numerator.get_mpz_t(), p_n.get_mpz_t())) {
      fail(ErrorCode::InternalInvariant, "x_n^k != 1 mod p^n at n = " + std::to_string(n));
    }
    Integer quotient;
    mpz_divexact(quotient.get_mpz_t(), numerator.get_mpz_t(), p_n.get_mpz_t());
    Integer weighted = quotient * k_inv * static_cast<unsigned long>(a0) * static_cast<unsigned long>(p - 1);
    Integer digit_value;
    mpz_fdiv_r_ui(digit_value.get_mpz_t(), weighted.get_mpz_t(), p);
    const Digit digit = static_cast<Digit>(digit_value.get_ui());
    if (trace) trace->push_back({n, quotient, weighted, digit});

    x += digit_value * p_n;
    p_n *= static_cast<unsigned long>(p);
    Integer check;
    Integer k_big = static_cast<unsigned long>(k);
    mpz_powm(check.get_mpz_t(), x.get_mpz_t(), k_big.get_mpz_t(), p_n.get_mpz_t());
    if (check != 1) fail(ErrorCode::InternalInvariant, "lifted digit fails x^k = 1 at n = " + std::to_string(n));
    digits.push_back(digit);
  }
  return PAdicInt::from_digits(std::move(digits), p);
}

PAdicInt teichmuller_frobenius_oracle(std::uint64_t a0, std::uint64_t p, std::size_t precision) {
  require_prime(p);
  if (precision == 0) fail(ErrorCode::InvalidArgument, "precision must be at least 1");
  const Integer modulus = power_of(p, precision);
  const Integer exponent = static_cast<unsigned long>(p);
  Integer x = static_cast<unsigned long>(a0 % p);
  for (std::size_t i = 0; i < precision; ++i) {
    mpz_powm(x.get_mpz_t(), x.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  }
  return PAdicInt::from_integer(x, p, precision);
}

std::pair<PAdicInt, PAdicInt> teichmuller_set_p2(std::size_t precision) {
  return {PAdicInt::from_integer(1L, 2, precision), PAdicInt::from_digits(std::vector<Digit>(precision, 1), 2)};
}

UnitDecomposition decompose_unit(const PAdicInt& u) {
  if (!u.is_prime_base()) fail(ErrorCode::NotPrime, std::to_string(u.base()) + " is not prime");
  if (!u.is_unit()) fail(ErrorCode::NotAUnit, "constant digit is zero");
  const std::uint64_t p = u.base();
  const std::size_t n = u.precision();
  if (p == 2) {
    if (n < 2) fail(ErrorCode::InsufficientPrecision, "need u mod 4 to split off the sign");
    const bool plus = u.digit(1) == 0;
    auto [one, minus_one] = teichmuller_set_p2(n);
    PAdicInt teich = plus ? one : minus_one;
    return {teich, mul(u, teich)};
  }
  PAdicInt teich = teichmuller_lift(u.digit(0), p, n);
  return {teich, mul(u, invert_unit(teich))};
}

Depth depth(const PAdicInt& u) {
  if (!u.is_prime_base()) fail(ErrorCode::NotPrime, std::to_string(u.base()) + " is not prime");
  if (u.is_zero_literal() || u.digit(0) != 1) fail(ErrorCode::NotPrincipalUnit, "unit is not 1 mod p");
  const ValuationBound v = valuation(sub(u, PAdicInt::from_integer(1L, u.base(), u.precision())));
  Depth d = v.is_exact() ? Depth::finite(v.amount) : Depth::at_least(v.amount);
  if (u.base() == 2) d.in_u2 = u.precision() < 2 || u.digit(1) == 0;
  return d;
}

Depth depth_of_integer(const Integer& u, std::uint64_t p) {
  require_prime(p);
  Integer w = u - 1;
  if (w == 0) return Depth::infinite();
  if (!mpz_divisible_ui_p(w.get_mpz_t(), p)) fail(ErrorCode::NotPrincipalUnit, "integer is not 1 mod p");
  std::size_t r = 0;
  while (mpz_divisible_ui_p(w.get_mpz_t(), p)) {
    mpz_divexact_ui(w.get_mpz_t(), w.get_mpz_t(), p);
    ++r;
  }
  Depth d = Depth::finite(r);
  if (p == 2) d.in_u2 = r >= 2;
  return d;
}

}  // namespace padlog
