#include "padlog/dlog_solver.hpp"

#include <string>

#include "padlog/error.hpp"
#include "padlog/numth.hpp"

namespace padlog {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Solvable: return "solvable";
    case Verdict::Unsolvable: return "unsolvable";
    case Verdict::Undetermined: return "undetermined";
  }
  return "?";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Lifting: return "lifting";
    case Method::LogRatio: return "log-ratio";
    case Method::Combined: return "combined";
  }
  return "?";
}

std::string_view to_string(ExistenceReason r) {
  switch (r) {
    case ExistenceReason::PrincipalDepthHolds: return "principal-depth-holds";
    case ExistenceReason::PrincipalDepthFails: return "principal-depth-fails";
    case ExistenceReason::TargetNotPrincipal: return "target-not-principal";
    case ExistenceReason::TorsionAndDepthHold: return "torsion-and-depth-hold";
    case ExistenceReason::SufficiencyUnmet: return "sufficiency-unmet";
    case ExistenceReason::PrecisionExhausted: return "precision-exhausted";
  }
  return "?";
}

namespace {

void require_units(const PAdicInt& a, const PAdicInt& b) {
  if (a.base() != b.base()) fail(ErrorCode::BaseMismatch, "a and b have different bases");
  if (!a.is_prime_base()) fail(ErrorCode::NotPrime, std::to_string(a.base()) + " is not prime");
  if (!a.is_unit()) fail(ErrorCode::NotAUnit, "a is not a unit");
  if (!b.is_unit()) fail(ErrorCode::NotAUnit, "b is not a unit");
  if (a.base() == 2 && (a.precision() < 2 || b.precision() < 2)) {
    fail(ErrorCode::InsufficientPrecision, "2-adic units need at least two digits");
  }
}

bool is_one_to_precision(const PAdicInt& a) {
  if (a.digit(0) != 1) return false;
  for (std::size_t i = 1; i < a.precision(); ++i) {
    if (a.digit(i) != 0) return false;
  }
  return true;
}

// The Teichmuller part of a unit as an element of Z_p^* (odd p) or {1, -1}
// encoded as 1, 3 mod 4 (p = 2), together with its order.
struct Torsion {
  u64 residue;
  u64 modulus;  // p or 4
  u64 order;
};

Torsion torsion_of(const PAdicInt& u) {
  const u64 p = u.base();
  if (p == 2) {
    const u64 r = u.digit(1) == 0 ? 1 : 3;
    return {r, 4, r == 1 ? 1u : 2u};
  }
  const u64 r = u.digit(0);
  return {r, p, order_mod(static_cast<i64>(r), p)};
}

// Smallest t in [0, ord a) with a^t = b, by enumeration.
std::optional<u64> torsion_dlog(const Torsion& a, const Torsion& b) {
  u64 y = 1 % a.modulus;
  for (u64 t = 0; t < a.order; ++t) {
    if (y == b.residue) return t;
    y = nt::mul_mod(y, a.residue, a.modulus);
  }
  return std::nullopt;
}

bool principal(const Torsion& t) { return t.residue == 1; }

}  // namespace

ExistenceVerdict check_existence(const PAdicInt& a, const PAdicInt& b) {
  require_units(a, b);
  if (is_one_to_precision(a)) fail(ErrorCode::AIsOne, "a = 1 to every known digit");

  const Torsion ta = torsion_of(a);
  const Torsion tb = torsion_of(b);
  const UnitDecomposition da = decompose_unit(a);
  const UnitDecomposition db = decompose_unit(b);

  ExistenceVerdict v{depth(da.principal), depth(db.principal), false, Verdict::Undetermined,
                     ExistenceReason::PrecisionExhausted};
  // p = 2: the torsion parts must be equal.
  v.torsion_ok = a.base() == 2 ? ta.residue == tb.residue : torsion_dlog(ta, tb).has_value();

  const std::optional<bool> depth_ok = depth_at_most(v.depth_a, v.depth_b);

  if (principal(ta)) {
    if (!principal(tb)) {
      v.conclusion = Verdict::Unsolvable;
      v.reason = ExistenceReason::TargetNotPrincipal;
    } else if (depth_ok) {
      v.conclusion = *depth_ok ? Verdict::Solvable : Verdict::Unsolvable;
      v.reason = *depth_ok ? ExistenceReason::PrincipalDepthHolds : ExistenceReason::PrincipalDepthFails;
    }
    return v;
  }
  if (v.torsion_ok && depth_ok.value_or(false)) {
    v.conclusion = Verdict::Solvable;
    v.reason = ExistenceReason::TorsionAndDepthHold;
  } else if (!v.torsion_ok || depth_ok.has_value()) {
    v.reason = ExistenceReason::SufficiencyUnmet;
  }
  return v;
}

DlogResult solve_log_ratio(const PrincipalUnit& a, const PrincipalUnit& b, std::size_t precision) {
  if (a.value.base() != b.value.base()) fail(ErrorCode::BaseMismatch, "a and b have different bases");
  if (precision == 0) fail(ErrorCode::InvalidArgument, "precision must be at least 1");
  if (a.value.precision() < precision || b.value.precision() < precision) {
    fail(ErrorCode::InsufficientPrecision, "inputs known to fewer digits than requested");
  }
  DlogResult result;
  result.method = Method::LogRatio;

  const std::optional<bool> depth_ok = depth_at_most(a.level, b.level);
  if (!depth_ok) return result;
  if (!*depth_ok) {
    result.verdict = Verdict::Unsolvable;
    return result;
  }

  if (!a.level.is_finite() || a.level.value >= precision) return result;

  const PAdicInt la = padic_log(a, precision);
  const PAdicInt lb = padic_log(b, precision);
  const UnitFactor fa = unit_factor(la);
  const std::size_t loss = fa.exponent;
  if (loss >= precision) return result;

  const std::size_t kept = precision - loss;
  PAdicInt x = mul(shift_right(lb, loss), invert_unit(fa.unit.truncated(kept)));
  x = x.truncated(kept);

  const PAdicInt check = padic_pow(a, x, kept).value;
  if (!(check == b.value.truncated(kept))) fail(ErrorCode::InternalInvariant, "exp(x log a) != b");

  result.verdict = Verdict::Solvable;
  result.x = std::move(x);
  result.torsion = TorsionResidue{0, 1};
  result.effective_precision = kept;
  return result;
}

LiftingTrace lifting_trace(u64 a, u64 b, u64 p, std::size_t n_max) {
  LiftingTrace trace;
  trace.rows.reserve(n_max);
  const u64 top = nt::checked_pow(p, static_cast<unsigned>(n_max));
  auto mul = [top](u64 x, u64 y) { return top <= 0xFFFFFFFFu ? x * y % top : nt::mul_mod(x, y, top); };
  a %= top;
  b %= top;

  u64 ord = order_mod(static_cast<i64>(a % p), p);
  // Level 1 by enumeration over [1, ord].
  u64 x = 0;
  u64 power = 1;  // a^x mod p^{n_max}
  for (u64 t = 1; t <= ord; ++t) {
    power = mul(power, a);
    if (power % p == b % p) {
      x = t;
      break;
    }
  }
  if (x == 0) {
    trace.failed_level = 1;
    return trace;
  }
  trace.rows.push_back({1, x, ord});

  // Invariants: power = a^x and step = a^ord modulo p^{n_max}.
  u64 step = nt::pow_mod(a, ord, top);
  u64 modulus = p;
  for (std::size_t n = 2; n <= n_max; ++n) {
    modulus *= p;
    const u64 target = b % modulus;
    const u64 growth = step % modulus == 1 ? 1 : p;
    bool found = false;
    for (u64 j = 0; j < growth; ++j) {
      if (power % modulus == target) {
        x += j * ord;
        found = true;
        break;
      }
      power = mul(power, step);
    }
    if (!found) {
      trace.failed_level = n;
      return trace;
    }
    if (growth != 1) {
      ord *= p;
      u64 next = 1;
      for (u64 i = 0; i < p; ++i) next = mul(next, step);
      step = next;
    }
    trace.rows.push_back({n, x, ord});
  }
  return trace;
}

DlogResult solve_by_lifting(i64 a, i64 b, u64 p, std::size_t n_max) {
  if (!nt::is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (n_max == 0) fail(ErrorCode::InvalidArgument, "n_max must be at least 1");
  if (a == 1) fail(ErrorCode::AIsOne, "a = 1");
  const u64 modulus = nt::checked_pow(p, static_cast<unsigned>(n_max));
  const u64 ar = nt::reduce(a, modulus);
  const u64 br = nt::reduce(b, modulus);
  if (ar % p == 0) fail(ErrorCode::NotCoprime, "p divides a");
  if (br % p == 0) fail(ErrorCode::NotCoprime, "p divides b");

  LiftingTrace trace = lifting_trace(ar, br, p, n_max);
  DlogResult result;
  result.method = Method::Lifting;
  result.levels = std::move(trace.rows);
  result.failed_level = trace.failed_level;
  if (trace.failed_level) {
    result.verdict = Verdict::Unsolvable;
    return result;
  }
  result.verdict = Verdict::Solvable;
  const LevelRow& last = result.levels.back();
  const std::size_t e = nt::valuation(last.order, p);
  const u64 m = last.order / nt::checked_pow(p, static_cast<unsigned>(e));
  result.torsion = TorsionResidue{last.x_n % m, m};
  result.effective_precision = e;
  if (e > 0) result.x = PAdicInt::from_integer(Integer(static_cast<unsigned long>(last.x_n)), p, e);
  return result;
}

DlogResult solve_units(const PAdicInt& a, const PAdicInt& b, std::size_t precision) {
  require_units(a, b);
  if (is_one_to_precision(a)) fail(ErrorCode::AIsOne, "a = 1 to every known digit");
  const Torsion ta = torsion_of(a);
  const Torsion tb = torsion_of(b);
  const std::optional<u64> t = torsion_dlog(ta, tb);
  if (!t) fail(ErrorCode::Unsolvable, "Teichmuller part of b is not a power of that of a");

  const UnitDecomposition da = decompose_unit(a.truncated(std::min(a.precision(), precision)));
  const UnitDecomposition db = decompose_unit(b.truncated(std::min(b.precision(), precision)));
  const PrincipalUnit pa = PrincipalUnit::make(da.principal);
  const PrincipalUnit pb = PrincipalUnit::make(db.principal);

  DlogResult result = solve_log_ratio(pa, pb, precision);
  result.method = Method::Combined;
  if (result.verdict == Verdict::Solvable) result.torsion = TorsionResidue{*t, ta.order};
  return result;
}

bool solution_is_unit(const PrincipalUnit& a, const PrincipalUnit& b) {
  if (!a.level.is_finite() || !b.level.is_finite()) {
    fail(ErrorCode::InsufficientPrecision, "depths not determined at the known precision");
  }
  return a.level.value == b.level.value;
}

bool convergence_certificate(std::span<const LevelRow> trace, i64 a, u64 p) {
  for (std::size_t i = 0; i + 1 < trace.size(); ++i) {
    const u64 modulus = nt::checked_pow(p, static_cast<unsigned>(trace[i].n));
    const u64 ord = order_mod(a, modulus);
    const u64 lo = trace[i].x_n;
    const u64 hi = trace[i + 1].x_n;
    const u64 diff = hi >= lo ? hi - lo : lo - hi;
    if (diff % ord != 0) return false;
  }
  return true;
}

}  // namespace padlog
