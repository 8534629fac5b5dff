#include "padlog/translog.hpp"

#include <string>

#include "padlog/error.hpp"

namespace padlog {

namespace {

std::size_t floor_log(std::uint64_t n, std::uint64_t p) {
  std::size_t r = 0;
  while (n >= p) {
    n /= p;
    ++r;
  }
  return r;
}

std::size_t exact_valuation(std::uint64_t n, std::uint64_t p) {
  std::size_t r = 0;
  while (n % p == 0) {
    n /= p;
    ++r;
  }
  return r;
}

std::uint64_t strip(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n;
}

void require_known(const PAdicInt& x, std::size_t precision) {
  if (precision == 0) fail(ErrorCode::InvalidArgument, "precision must be at least 1");
  if (!x.is_zero_literal() && x.precision() < precision) {
    fail(ErrorCode::InsufficientPrecision, "argument known to " + std::to_string(x.precision()) + " digits, " +
                                               std::to_string(precision) + " requested");
  }
}

void check_term(const PAdicInt& term, std::size_t bound) {
  const ValuationBound v = valuation(term);
  if (v.is_exact() && v.amount < bound) fail(ErrorCode::InternalInvariant, "series term below its valuation bound");
}

}  // namespace

std::size_t minimum_log_valuation(std::uint64_t p) { return p == 2 ? 2 : 1; }

PrincipalUnit PrincipalUnit::make(PAdicInt value) {
  if (!value.is_prime_base()) fail(ErrorCode::NotPrime, std::to_string(value.base()) + " is not prime");
  if (value.is_zero_literal() || value.digit(0) != 1) fail(ErrorCode::DomainError, "not a principal unit");
  Depth d = depth(value);
  if (value.base() == 2 && !d.in_u2) fail(ErrorCode::DomainError, "the 2-adic logarithm needs u = 1 mod 4");
  return {std::move(value), d};
}

std::size_t factorial_valuation(std::uint64_t n, std::uint64_t p) {
  std::size_t total = 0;
  for (std::uint64_t q = n / p; q > 0; q /= p) total += q;
  return total;
}

PrincipalUnit padic_exp(const PAdicInt& x, std::size_t precision) {
  require_known(x, precision);
  if (!x.is_prime_base()) fail(ErrorCode::NotPrime, std::to_string(x.base()) + " is not prime");
  const std::uint64_t p = x.base();
  const std::size_t n_digits = precision;
  const PAdicInt one = PAdicInt::from_integer(1L, p, n_digits);
  const PAdicInt arg = x.is_zero_literal() ? PAdicInt::from_integer(0L, p, n_digits) : x.truncated(n_digits);

  const ValuationBound v = valuation(arg);
  if (!v.is_exact()) {
    if (v.amount < minimum_log_valuation(p) && v.amount < n_digits) fail(ErrorCode::DomainError, "valuation undetermined");
    return PrincipalUnit::make(one);
  }
  if (v.amount < minimum_log_valuation(p)) {
    fail(ErrorCode::DomainError, "exp needs v_p(x) >= " + std::to_string(minimum_log_valuation(p)) + ", got " + std::to_string(v.amount));
  }

  // Terms n >= stop have valuation >= n v - (n - 1)/(p - 1) >= N; that bound
  // grows with n because v > 1/(p - 1).
  auto lower_bound = [&](std::uint64_t n) -> long long {
    return static_cast<long long>(n * v.amount) - static_cast<long long>((n - 1) / (p - 1));
  };
  std::uint64_t stop = 1;
  while (lower_bound(stop) < static_cast<long long>(n_digits)) ++stop;

  const std::size_t guard = factorial_valuation(stop - 1, p);
  const std::size_t work = n_digits + guard;
  const PAdicInt rep = arg.representative_at(work);

  PAdicInt sum = PAdicInt::from_integer(1L, p, n_digits);
  PAdicInt power = PAdicInt::from_integer(1L, p, work);
  PAdicInt unit_factorial = PAdicInt::from_integer(1L, p, work);
  for (std::uint64_t n = 1; n < stop; ++n) {
    power = mul(power, rep);
    unit_factorial = mul(unit_factorial, PAdicInt::from_integer(Integer(static_cast<unsigned long>(strip(n, p))), p, work));
    const std::size_t f = factorial_valuation(n, p);
    PAdicInt term = mul(shift_right(power, f), invert_unit(unit_factorial.truncated(work - f)));
    check_term(term, n * v.amount - f);
    sum = add(sum, term.truncated(n_digits));
  }
#ifndef NDEBUG
  {
    const std::size_t f = factorial_valuation(stop, p);
    if (stop * v.amount < f + n_digits) fail(ErrorCode::InternalInvariant, "first discarded exp term is too large");
  }
#endif
  PrincipalUnit result = PrincipalUnit::make(sum);
  if (auto ok = depth_at_most(Depth::finite(v.amount), result.level); ok && !*ok) {
    fail(ErrorCode::InternalInvariant, "exp left U_v");
  }
  return result;
}

PAdicInt padic_log(const PrincipalUnit& u, std::size_t precision) {
  require_known(u.value, precision);
  const std::uint64_t p = u.value.base();
  const std::size_t n_digits = precision;
  const PAdicInt w = sub(u.value.truncated(n_digits), PAdicInt::from_integer(1L, p, n_digits));
  const ValuationBound v = valuation(w);
  if (!v.is_exact()) return PAdicInt::from_integer(0L, p, n_digits);
  if (v.amount < minimum_log_valuation(p)) fail(ErrorCode::DomainError, "log needs u in U_1 (U_2 for p = 2)");

  // Term n has valuation n k - v_p(n) >= n k - floor(log_p n), nondecreasing.
  auto lower_bound = [&](std::uint64_t n) -> long long {
    return static_cast<long long>(n * v.amount) - static_cast<long long>(floor_log(n, p));
  };
  std::uint64_t stop = 1;
  while (lower_bound(stop) < static_cast<long long>(n_digits)) ++stop;

  const std::size_t guard = stop > 1 ? floor_log(stop - 1, p) : 0;
  const std::size_t work = n_digits + guard;
  const PAdicInt rep = w.representative_at(work);

  PAdicInt sum = PAdicInt::from_integer(0L, p, n_digits);
  PAdicInt power = PAdicInt::from_integer(1L, p, work);
  for (std::uint64_t n = 1; n < stop; ++n) {
    power = mul(power, rep);
    const std::size_t e = exact_valuation(n, p);
    PAdicInt unit = PAdicInt::from_integer(Integer(static_cast<unsigned long>(strip(n, p))), p, work - e);
    PAdicInt term = mul(shift_right(power, e), invert_unit(unit));
    check_term(term, n * v.amount - e);
    term = term.truncated(n_digits);
    sum = (n % 2 == 1) ? add(sum, term) : sub(sum, term);
  }
#ifndef NDEBUG
  if (stop * v.amount < exact_valuation(stop, p) + n_digits) fail(ErrorCode::InternalInvariant, "first discarded log term is too large");
#endif
  return sum;
}

PrincipalUnit power_u1_to_uk(const PrincipalUnit& alpha, unsigned k) {
  const std::uint64_t p = alpha.value.base();
  if (p == 2) fail(ErrorCode::DomainError, "the U_1 -> U_k power map is stated for odd p");
  if (k == 0) fail(ErrorCode::InvalidArgument, "k must be at least 1");
  PAdicInt value = alpha.value;
  for (unsigned i = 1; i < k; ++i) value = pow(value, Integer(static_cast<unsigned long>(p)));
  PrincipalUnit result = PrincipalUnit::make(value);
  if (auto ok = depth_at_most(Depth::finite(k), result.level); ok && !*ok) {
    fail(ErrorCode::InternalInvariant, "power map left U_k");
  }
  const std::size_t n = value.precision();
  PAdicInt scaled = shift_left(padic_log(alpha, n), k - 1).truncated(n);
  if (!(padic_log(result, n) == scaled)) fail(ErrorCode::InternalInvariant, "log(alpha^{p^{k-1}}) != p^{k-1} log(alpha)");
  return result;
}

PrincipalUnit padic_pow(const PrincipalUnit& a, const PAdicInt& x, std::size_t precision) {
  require_known(x, precision);
  PAdicInt exponent = x.is_zero_literal() ? PAdicInt::from_integer(0L, a.value.base(), precision) : x.truncated(precision);
  return padic_exp(mul(exponent, padic_log(a, precision)), precision);
}

}  // namespace padlog
