#pragma once

// Truncated p-adic integers.
//
// A PAdicInt is a base, a precision N and the digits d_0 .. d_{N-1}
// (least significant first) of a value known modulo base^N. Binary
// operations truncate to the shorter operand. The canonical zero literal is
// the one value known exactly; it has no digits and unbounded precision.
//
// Any base >= 2 is accepted by from_integer, add, sub, mul and neg. Everything
// that needs units or valuations (inversion, valuation, unit_factor) requires
// a prime base and throws NotPrime otherwise: Z_(n) has zero divisors when n
// is composite.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace padlog {

using Integer = mpz_class;
using Digit = std::uint32_t;

struct ValuationBound {
  enum class Kind { Exact, AtLeast, Infinite };

  Kind kind = Kind::Exact;
  std::size_t amount = 0;

  static ValuationBound exact(std::size_t v) { return {Kind::Exact, v}; }
  static ValuationBound at_least(std::size_t v) { return {Kind::AtLeast, v}; }
  static ValuationBound infinite() { return {Kind::Infinite, 0}; }

  bool is_exact() const { return kind == Kind::Exact; }
  bool is_infinite() const { return kind == Kind::Infinite; }

  friend bool operator==(const ValuationBound&, const ValuationBound&) = default;
};

std::string to_string(const ValuationBound& v);

class PAdicInt {
 public:
  static constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

  static PAdicInt from_integer(const Integer& z, std::uint64_t base, std::size_t precision);
  static PAdicInt from_integer(long z, std::uint64_t base, std::size_t precision) {
    return from_integer(Integer(z), base, precision);
  }
  /// Digits least significant first; precision is digits.size().
  static PAdicInt from_digits(std::vector<Digit> digits, std::uint64_t base);
  /// The canonical exact zero.
  static PAdicInt zero(std::uint64_t base);

  std::uint64_t base() const { return base_; }
  bool is_prime_base() const { return prime_base_; }
  std::size_t precision() const { return zero_literal_ ? kUnbounded : digits_.size(); }
  bool is_zero_literal() const { return zero_literal_; }

  std::span<const Digit> digits() const { return digits_; }
  /// Digit i; zero for the zero literal. Throws InsufficientPrecision past N.
  Digit digit(std::size_t i) const;

  bool is_unit() const { return !zero_literal_ && digits_.front() != 0; }
  /// True when every known digit vanishes (including the zero literal).
  bool is_zero() const;

  /// Keeps the first `precision` digits. Throws InsufficientPrecision when
  /// asked for more than is known.
  PAdicInt truncated(std::size_t precision) const;

  /// Reads the known digits as an integer representative and re-expands it at
  /// a larger precision with zero high digits. Only valid for callers whose
  /// result depends on the value modulo base^precision() alone.
  PAdicInt representative_at(std::size_t precision) const;

  /// Sum of d_i base^i over all known digits.
  Integer to_integer() const;

 private:
  PAdicInt(std::uint64_t base, bool prime_base, std::vector<Digit> digits, bool zero_literal)
      : base_(base), prime_base_(prime_base), digits_(std::move(digits)), zero_literal_(zero_literal) {}

  std::uint64_t base_;
  bool prime_base_;
  std::vector<Digit> digits_;
  bool zero_literal_;

  friend PAdicInt add(const PAdicInt&, const PAdicInt&);
  friend PAdicInt mul(const PAdicInt&, const PAdicInt&);
  friend PAdicInt neg(const PAdicInt&);
  friend PAdicInt shift_left(const PAdicInt&, std::size_t);
  friend PAdicInt shift_right(const PAdicInt&, std::size_t);
};

PAdicInt add(const PAdicInt& x, const PAdicInt& y);
PAdicInt sub(const PAdicInt& x, const PAdicInt& y);
PAdicInt mul(const PAdicInt& x, const PAdicInt& y);
PAdicInt neg(const PAdicInt& x);
PAdicInt pow(const PAdicInt& x, const Integer& e);

/// Multiplication by base^k; the result is known to k more digits.
PAdicInt shift_left(const PAdicInt& x, std::size_t k);
/// Exact division by base^k; consumes k digits of precision. Throws
/// DomainError when one of the k lowest digits is nonzero.
PAdicInt shift_right(const PAdicInt& x, std::size_t k);

/// Two-sided inverse of a unit at working precision (Newton iteration).
PAdicInt invert_unit(const PAdicInt& x);

ValuationBound valuation(const PAdicInt& x);

/// max over primes q | n of v_q(z). Not a valuation on Z when n is composite;
/// no ultrametric inequality holds for it in general.
unsigned composite_valuation(const Integer& z, std::uint64_t n);

struct UnitFactor {
  std::size_t exponent;
  PAdicInt unit;
};

/// x = p^exponent * unit with a nonzero constant digit.
UnitFactor unit_factor(const PAdicInt& x);

/// Image of x in Z/p^level Z as the integer sum of the first `level` digits.
Integer reduce_mod(const PAdicInt& x, std::size_t level);

struct Comparison {
  bool equal;
  std::size_t precision;  // the precision the digits were compared at
};

Comparison compare(const PAdicInt& x, const PAdicInt& y);

/// Equality at the smaller of the two precisions; different bases compare
/// unequal.
inline bool operator==(const PAdicInt& x, const PAdicInt& y) { return compare(x, y).equal; }

inline PAdicInt operator+(const PAdicInt& x, const PAdicInt& y) { return add(x, y); }
inline PAdicInt operator-(const PAdicInt& x, const PAdicInt& y) { return sub(x, y); }
inline PAdicInt operator*(const PAdicInt& x, const PAdicInt& y) { return mul(x, y); }
inline PAdicInt operator-(const PAdicInt& x) { return neg(x); }

/// Floating display of e^{-v(x - y)}; zero when the difference is the exact
/// zero, an upper bound when the valuation is only bounded below.
double display_distance(const PAdicInt& x, const PAdicInt& y);

}  // namespace padlog
