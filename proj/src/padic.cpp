#include "padlog/padic.hpp"

#include <algorithm>
#include <cmath>

#include "padlog/error.hpp"
#include "padlog/numth.hpp"

namespace padlog {

namespace {

void require_prime(const PAdicInt& x, const char* op) {
  if (!x.is_prime_base()) {
    fail(ErrorCode::NotPrime, std::string(op) + " needs a prime base, got " + std::to_string(x.base()));
  }
}

void require_same_base(const PAdicInt& x, const PAdicInt& y) {
  if (x.base() != y.base()) {
    fail(ErrorCode::BaseMismatch, std::to_string(x.base()) + " vs " + std::to_string(y.base()));
  }
}

void require_base(std::uint64_t base) {
  if (base < 2 || base > std::numeric_limits<Digit>::max()) {
    fail(ErrorCode::InvalidArgument, "base must lie in [2, 2^32), got " + std::to_string(base));
  }
}

void require_precision(std::size_t precision) {
  if (precision == 0) fail(ErrorCode::InvalidArgument, "precision must be at least 1");
}

}  // namespace

std::string to_string(const ValuationBound& v) {
  switch (v.kind) {
    case ValuationBound::Kind::Exact: return std::to_string(v.amount);
    case ValuationBound::Kind::AtLeast: return ">=" + std::to_string(v.amount);
    case ValuationBound::Kind::Infinite: return "inf";
  }
  return "?";
}

PAdicInt PAdicInt::from_integer(const Integer& z, std::uint64_t base, std::size_t precision) {
  require_base(base);
  require_precision(precision);
  Integer modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), base, precision);
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), modulus.get_mpz_t());
  std::vector<Digit> digits(precision, 0);
  for (std::size_t i = 0; i < precision && r != 0; ++i) {
    digits[i] = static_cast<Digit>(mpz_fdiv_q_ui(r.get_mpz_t(), r.get_mpz_t(), base));
  }
  return PAdicInt(base, nt::is_prime(base), std::move(digits), false);
}

PAdicInt PAdicInt::from_digits(std::vector<Digit> digits, std::uint64_t base) {
  require_base(base);
  require_precision(digits.size());
  for (Digit d : digits) {
    if (d >= base) fail(ErrorCode::InvalidArgument, "digit " + std::to_string(d) + " out of range for base " + std::to_string(base));
  }
  return PAdicInt(base, nt::is_prime(base), std::move(digits), false);
}

PAdicInt PAdicInt::zero(std::uint64_t base) {
  require_base(base);
  return PAdicInt(base, nt::is_prime(base), {}, true);
}

Digit PAdicInt::digit(std::size_t i) const {
  if (zero_literal_) return 0;
  if (i >= digits_.size()) {
    fail(ErrorCode::InsufficientPrecision, "digit " + std::to_string(i) + " of a value known to " + std::to_string(digits_.size()));
  }
  return digits_[i];
}

bool PAdicInt::is_zero() const {
  return std::all_of(digits_.begin(), digits_.end(), [](Digit d) { return d == 0; });
}

PAdicInt PAdicInt::truncated(std::size_t precision) const {
  require_precision(precision);
  if (zero_literal_) return PAdicInt(base_, prime_base_, std::vector<Digit>(precision, 0), false);
  if (precision > digits_.size()) {
    fail(ErrorCode::InsufficientPrecision, "cannot extend " + std::to_string(digits_.size()) + " known digits to " + std::to_string(precision));
  }
  return PAdicInt(base_, prime_base_, std::vector<Digit>(digits_.begin(), digits_.begin() + precision), false);
}

PAdicInt PAdicInt::representative_at(std::size_t precision) const {
  require_precision(precision);
  std::vector<Digit> digits(precision, 0);
  std::copy_n(digits_.begin(), std::min(precision, digits_.size()), digits.begin());
  return PAdicInt(base_, prime_base_, std::move(digits), false);
}

Integer PAdicInt::to_integer() const {
  Integer acc = 0;
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
    acc *= static_cast<unsigned long>(base_);
    acc += static_cast<unsigned long>(*it);
  }
  return acc;
}

PAdicInt add(const PAdicInt& x, const PAdicInt& y) {
  require_same_base(x, y);
  if (x.zero_literal_) return y;
  if (y.zero_literal_) return x;
  const std::size_t n = std::min(x.digits_.size(), y.digits_.size());
  const std::uint64_t p = x.base_;
  std::vector<Digit> out(n);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t s = std::uint64_t{x.digits_[i]} + y.digits_[i] + carry;
    carry = s >= p ? 1 : 0;
    out[i] = static_cast<Digit>(s - carry * p);
  }
  return PAdicInt(p, x.prime_base_, std::move(out), false);
}

PAdicInt neg(const PAdicInt& x) {
  if (x.zero_literal_) return x;
  // -x = (complement of every digit) + 1.
  const std::uint64_t p = x.base_;
  std::vector<Digit> out(x.digits_.size());
  std::uint64_t carry = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t s = (p - 1 - x.digits_[i]) + carry;
    carry = s >= p ? 1 : 0;
    out[i] = static_cast<Digit>(s - carry * p);
  }
  return PAdicInt(p, x.prime_base_, std::move(out), false);
}

PAdicInt sub(const PAdicInt& x, const PAdicInt& y) { return add(x, neg(y)); }

PAdicInt mul(const PAdicInt& x, const PAdicInt& y) {
  require_same_base(x, y);
  if (x.zero_literal_) return x;
  if (y.zero_literal_) return y;
  const std::size_t n = std::min(x.digits_.size(), y.digits_.size());
  const std::uint64_t p = x.base_;
  std::vector<Digit> out(n);
  // Column-wise schoolbook product: column k collects x_i y_{k-i}.
  unsigned __int128 carry = 0;
  for (std::size_t k = 0; k < n; ++k) {
    unsigned __int128 column = carry;
    for (std::size_t i = 0; i <= k; ++i) {
      column += static_cast<unsigned __int128>(x.digits_[i]) * y.digits_[k - i];
    }
    out[k] = static_cast<Digit>(column % p);
    carry = column / p;
  }
  return PAdicInt(p, x.prime_base_, std::move(out), false);
}

PAdicInt pow(const PAdicInt& x, const Integer& e) {
  if (e < 0) fail(ErrorCode::InvalidArgument, "negative exponent");
  PAdicInt result = PAdicInt::from_integer(1L, x.base(), x.is_zero_literal() ? 1 : x.precision());
  if (x.is_zero_literal()) return e == 0 ? result : x;
  PAdicInt base = x;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, base);
    if (i + 1 < bits) base = mul(base, base);
  }
  return result;
}

PAdicInt shift_left(const PAdicInt& x, std::size_t k) {
  if (x.zero_literal_ || k == 0) return x;
  std::vector<Digit> out(k, 0);
  out.insert(out.end(), x.digits_.begin(), x.digits_.end());
  return PAdicInt(x.base_, x.prime_base_, std::move(out), false);
}

PAdicInt shift_right(const PAdicInt& x, std::size_t k) {
  if (x.zero_literal_ || k == 0) return x;
  if (k >= x.digits_.size()) {
    fail(ErrorCode::InsufficientPrecision, "dividing by p^" + std::to_string(k) + " leaves no known digits");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (x.digits_[i] != 0) fail(ErrorCode::DomainError, "value is not divisible by p^" + std::to_string(k));
  }
  return PAdicInt(x.base_, x.prime_base_, std::vector<Digit>(x.digits_.begin() + k, x.digits_.end()), false);
}

PAdicInt invert_unit(const PAdicInt& x) {
  require_prime(x, "invert_unit");
  if (!x.is_unit()) fail(ErrorCode::NotAUnit, "constant digit is zero");
  const std::uint64_t p = x.base();
  const std::size_t n = x.precision();
  const PAdicInt two = PAdicInt::from_integer(2L, p, n);
  // y <- y (2 - x y) doubles the number of correct digits each round.
  PAdicInt y = PAdicInt::from_integer(Integer(static_cast<unsigned long>(nt::inverse_mod(x.digit(0), p))), p, 1);
  std::size_t known = 1;
  while (known < n) {
    known = std::min(n, 2 * known);
    PAdicInt xk = x.truncated(known);
    PAdicInt yk = y.representative_at(known);
    y = mul(yk, sub(two.truncated(known), mul(xk, yk)));
  }
  return y;
}

ValuationBound valuation(const PAdicInt& x) {
  require_prime(x, "valuation");
  if (x.is_zero_literal()) return ValuationBound::infinite();
  const auto digits = x.digits();
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] != 0) return ValuationBound::exact(i);
  }
  return ValuationBound::at_least(digits.size());
}

unsigned composite_valuation(const Integer& z, std::uint64_t n) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "composite_valuation needs n >= 2");
  if (z == 0) fail(ErrorCode::ZeroInput, "valuation of zero is infinite");
  unsigned best = 0;
  for (const auto& [q, e] : nt::factorize(n)) {
    (void)e;
    Integer rest = abs(z);
    unsigned v = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), q)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), q);
      ++v;
    }
    best = std::max(best, v);
  }
  return best;
}

UnitFactor unit_factor(const PAdicInt& x) {
  ValuationBound v = valuation(x);
  if (!v.is_exact()) fail(ErrorCode::IndeterminateValuation, "every known digit is zero");
  return {v.amount, shift_right(x, v.amount)};
}

Integer reduce_mod(const PAdicInt& x, std::size_t level) {
  if (x.is_zero_literal()) return 0;
  if (level > x.precision()) {
    fail(ErrorCode::InsufficientPrecision, "level " + std::to_string(level) + " exceeds precision " + std::to_string(x.precision()));
  }
  if (level == 0) return 0;
  return x.truncated(level).to_integer();
}

Comparison compare(const PAdicInt& x, const PAdicInt& y) {
  if (x.base() != y.base()) return {false, 0};
  const std::size_t n = std::min(x.precision(), y.precision());
  if (n == PAdicInt::kUnbounded) return {true, n};
  for (std::size_t i = 0; i < n; ++i) {
    if (x.digit(i) != y.digit(i)) return {false, n};
  }
  return {true, n};
}

double display_distance(const PAdicInt& x, const PAdicInt& y) {
  ValuationBound v = valuation(sub(x, y));
  if (v.is_infinite()) return 0.0;
  return std::exp(-static_cast<double>(v.amount));
}

}  // namespace padlog
