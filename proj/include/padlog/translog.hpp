#pragma once

// The p-adic exponential and logarithm between p Z_(p) and U_1 (odd p), and
// between 4 Z_(2) and U_2.
//
// Series are summed in Z_(p) without materializing rationals: x^n / n! is
// computed as x^n shifted right by v_p(n!) times the inverse of the unit part
// of n!. Each sum stops at the first index from which a monotone lower bound
// on the term valuations reaches the requested precision.

#include <cstdint>

#include "padlog/padic.hpp"
#include "padlog/teichmuller.hpp"

namespace padlog {

/// An element of U_1 (odd p) or U_2 (p = 2) together with its depth.
struct PrincipalUnit {
  PAdicInt value;
  Depth level;

  /// Throws DomainError when value is outside U_1 / U_2.
  static PrincipalUnit make(PAdicInt value);
  static PrincipalUnit from_integer(const Integer& z, std::uint64_t p, std::size_t precision) {
    return make(PAdicInt::from_integer(z, p, precision));
  }
};

/// Smallest admissible valuation of exp arguments and log(u) values.
std::size_t minimum_log_valuation(std::uint64_t p);

/// v_p(n!) = sum_i floor(n / p^i).
std::size_t factorial_valuation(std::uint64_t n, std::uint64_t p);

/// exp(x) for v_p(x) >= 1 (odd p) or >= 2 (p = 2). Throws DomainError
/// otherwise and InsufficientPrecision when x is known to fewer than
/// `precision` digits.
PrincipalUnit padic_exp(const PAdicInt& x, std::size_t precision);

/// log(u), a value in p^k Z_(p) for u in U_k.
PAdicInt padic_log(const PrincipalUnit& u, std::size_t precision);

/// alpha^{p^{k-1}}, mapping U_1 onto U_k (odd p). Verifies that the result
/// lies in U_k and that log(result) = p^{k-1} log(alpha).
PrincipalUnit power_u1_to_uk(const PrincipalUnit& alpha, unsigned k);

/// a^x := exp(x log a).
PrincipalUnit padic_pow(const PrincipalUnit& a, const PAdicInt& x, std::size_t precision);

}  // namespace padlog
