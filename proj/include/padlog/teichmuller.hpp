#pragma once

// Teichmüller units and the decomposition of a unit into its finite-order
// part times a principal unit.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padlog/padic.hpp"

namespace padlog {

/// v_p(u - 1) for a principal unit u.
struct Depth {
  enum class Kind { Finite, AtLeast, Infinite };

  Kind kind = Kind::Finite;
  std::size_t value = 0;
  /// p = 2 only: whether u = 1 (mod 4). Always true for odd p.
  bool in_u2 = true;

  static Depth finite(std::size_t r) { return {Kind::Finite, r, true}; }
  static Depth at_least(std::size_t r) { return {Kind::AtLeast, r, true}; }
  static Depth infinite() { return {Kind::Infinite, 0, true}; }

  bool is_finite() const { return kind == Kind::Finite; }

  friend bool operator==(const Depth&, const Depth&) = default;
};

std::string to_string(const Depth& d);

/// depth(a) <= depth(b), or nullopt when the known digits cannot decide it.
std::optional<bool> depth_at_most(const Depth& a, const Depth& b);

/// One row of the digit recurrence: A_n = k^{-1} a_0 ((x_n^k - 1) / p^n) (p - 1),
/// a_n = A_n mod p, with every quantity kept exact.
struct TeichmullerStep {
  std::size_t index;
  Integer power_quotient;  // (x_n^k - 1) / p^n
  Integer weighted;        // A_n
  Digit digit;             // a_n
};

/// The unique Teichmüller unit with constant digit a0, digit by digit.
/// Each new digit is checked against x_{n+1}^k = 1 (mod p^{n+1}).
PAdicInt teichmuller_lift(std::uint64_t a0, std::uint64_t p, std::size_t precision,
                          std::vector<TeichmullerStep>* trace = nullptr);

/// Limit of a0^{p^n}: iterates x -> x^p modulo p^precision.
PAdicInt teichmuller_frobenius_oracle(std::uint64_t a0, std::uint64_t p, std::size_t precision);

/// {1, -1}; -1 has every 2-adic digit equal to 1.
std::pair<PAdicInt, PAdicInt> teichmuller_set_p2(std::size_t precision);

struct UnitDecomposition {
  PAdicInt teich;
  PAdicInt principal;
};

/// u = teich * principal with principal = 1 (mod p), or (mod 4) when p = 2.
UnitDecomposition decompose_unit(const PAdicInt& u);

/// Depth of a principal unit (for p = 2, of any odd unit; see Depth::in_u2).
/// Throws NotPrincipalUnit otherwise. Truncated values equal to 1 report
/// AtLeast(precision).
Depth depth(const PAdicInt& u);

/// Depth of an exact integer; the integer 1 has infinite depth.
Depth depth_of_integer(const Integer& u, std::uint64_t p);

}  // namespace padlog
