#pragma once

// Solving a^x = b over the p-adic integers.
//
// Three routes:
//   lifting    x_n = smallest x in [1, ord_{p^n}(a)] with a^x = b mod p^n,
//              each level found among x_{n-1} + j ord_{p^{n-1}}(a);
//   log-ratio  x = log b / log a for principal units;
//   combined   general units split into Teichmuller and principal parts; the
//              answer is a residue t mod m for the torsion part together with
//              the log-ratio x for the principal part.
//
// For general units only sufficiency of the existence test is known, so the
// existence check can answer Undetermined.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "padlog/padic.hpp"
#include "padlog/residue_group.hpp"
#include "padlog/teichmuller.hpp"
#include "padlog/translog.hpp"

namespace padlog {

enum class Verdict { Solvable, Unsolvable, Undetermined };
enum class Method { Lifting, LogRatio, Combined };

std::string_view to_string(Verdict v);
std::string_view to_string(Method m);

struct LevelRow {
  std::size_t n;
  u64 x_n;
  u64 order;  // ord_{p^n}(a)

  friend bool operator==(const LevelRow&, const LevelRow&) = default;
};

struct TorsionResidue {
  u64 residue;
  u64 modulus;

  friend bool operator==(const TorsionResidue&, const TorsionResidue&) = default;
};

struct DlogResult {
  Verdict verdict = Verdict::Undetermined;
  Method method = Method::Lifting;
  std::optional<PAdicInt> x;
  std::optional<TorsionResidue> torsion;
  std::vector<LevelRow> levels;
  /// Digits of x that are determined by the inputs.
  std::size_t effective_precision = 0;
  /// Level at which a lifting run found no solution.
  std::optional<std::size_t> failed_level;
};

enum class ExistenceReason {
  PrincipalDepthHolds,    // both principal, depth(a) <= depth(b)
  PrincipalDepthFails,    // both principal, depth(a) > depth(b)
  TargetNotPrincipal,     // a principal, b not: every a^x is principal
  TorsionAndDepthHold,    // general units, sufficient condition met
  SufficiencyUnmet,       // general units, sufficient condition fails
  PrecisionExhausted,     // depths not comparable at the known precision
};

std::string_view to_string(ExistenceReason r);

struct ExistenceVerdict {
  Depth depth_a;
  Depth depth_b;
  bool torsion_ok;
  Verdict conclusion;
  ExistenceReason reason;
};

/// Throws NotAUnit, BaseMismatch, AIsOne (a is 1 to every known digit).
ExistenceVerdict check_existence(const PAdicInt& a, const PAdicInt& b);

/// x = log b / log a. The result carries N - v_p(log a) digits.
DlogResult solve_log_ratio(const PrincipalUnit& a, const PrincipalUnit& b, std::size_t precision);

/// Low-level lifting run on residues a, b mod p^{n_max} (units, p prime).
/// Stops at the first level without a solution.
struct LiftingTrace {
  std::vector<LevelRow> rows;
  std::optional<std::size_t> failed_level;
};
LiftingTrace lifting_trace(u64 a, u64 b, u64 p, std::size_t n_max);

/// Level trace of x_n for n = 1..n_max plus the digit limit x_{n_max} mod
/// p^{v_p(ord)}. Throws NotCoprime, AIsOne, ModulusTooLarge.
DlogResult solve_by_lifting(i64 a, i64 b, u64 p, std::size_t n_max);

/// General units. Throws Unsolvable when b's Teichmuller part is not a power
/// of a's.
DlogResult solve_units(const PAdicInt& a, const PAdicInt& b, std::size_t precision);

/// x is a unit of Z_(p) exactly when depth(a) = depth(b).
bool solution_is_unit(const PrincipalUnit& a, const PrincipalUnit& b);

/// Checks ord_{p^n}(a) | x_{n+1} - x_n for consecutive rows.
bool convergence_certificate(std::span<const LevelRow> trace, i64 a, u64 p);

}  // namespace padlog
