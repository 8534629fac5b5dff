// padlog: command-line front end to the padlog library.
//
// Exit codes: 0 solvable (or success), 2 unsolvable, 3 undetermined,
// 64 usage error, 65 domain error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "padlog/dlog_solver.hpp"
#include "padlog/error.hpp"
#include "padlog/numth.hpp"
#include "padlog/padic_io.hpp"
#include "padlog/primitive_root.hpp"
#include "padlog/quotient_structure.hpp"
#include "padlog/residue_group.hpp"
#include "padlog/special_pairs.hpp"
#include "padlog/tables.hpp"
#include "padlog/teichmuller.hpp"

using namespace padlog;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitUnsolvable = 2;
constexpr int kExitUndetermined = 3;
constexpr int kExitUsage = 64;
constexpr int kExitDomain = 65;

bool g_json = false;

void emit(const Json& row) { std::cout << row.dump() << "\n"; }

std::string join(const std::vector<u64>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

u64 cap_from_env(u64 fallback) {
  const char* s = std::getenv("PADLOG_MAX_MODULUS");
  if (!s || !*s) return fallback;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    fail(ErrorCode::InvalidArgument, "PADLOG_MAX_MODULUS must be a positive integer");
  }
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Solvable: return 0;
    case Verdict::Unsolvable: return kExitUnsolvable;
    case Verdict::Undetermined: return kExitUndetermined;
  }
  return kExitUndetermined;
}

std::string digits_of(u64 value, u64 p) {
  std::size_t count = 1;
  for (u64 v = value / p; v > 0; v /= p) ++count;
  return format_digit_list(PAdicInt::from_integer(Integer(static_cast<unsigned long>(value)), p, count));
}

// ---- dlog ----

struct DlogArgs {
  u64 p = 0;
  i64 a = 0;
  i64 b = 0;
  std::size_t digits = 10;
  std::string method = "auto";
};

// Lifts until ord_{p^n}(a) carries at least `digits` powers of p, or the
// modulus limit is reached.
DlogResult lift_to_digits(const DlogArgs& args) {
  std::size_t n = args.digits;
  const std::size_t limit = args.digits + 64;
  DlogResult r = solve_by_lifting(args.a, args.b, args.p, n);
  while (r.verdict == Verdict::Solvable && r.effective_precision < args.digits && n < limit) {
    n += args.digits - r.effective_precision;
    if (n > limit) n = limit;
    Integer bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), args.p, n);
    if (bound > Integer(static_cast<unsigned long>(nt::kMaxModulus))) break;
    r = solve_by_lifting(args.a, args.b, args.p, n);
  }
  return r;
}

// Raises the working precision until the quotient keeps `digits` digits.
template <typename Solve>
DlogResult widen_until(std::size_t digits, Solve solve) {
  std::size_t work = digits;
  DlogResult r = solve(work);
  for (int round = 0; round < 8 && r.verdict == Verdict::Solvable && r.effective_precision < digits; ++round) {
    work += digits - r.effective_precision;
    r = solve(work);
  }
  return r;
}

bool lifting_fits(const DlogArgs& args) {
  Integer bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), args.p, args.digits + 1);
  return bound <= Integer(static_cast<unsigned long>(nt::kMaxModulus));
}

int run_dlog(const DlogArgs& args) {
  if (!nt::is_prime(args.p)) fail(ErrorCode::NotPrime, std::to_string(args.p) + " is not prime");
  if (args.a == 1) fail(ErrorCode::AIsOne, "a = 1");
  std::string method = args.method;
  if (method == "auto") method = lifting_fits(args) ? "lift" : "units";

  DlogResult r;
  if (method == "lift") {
    r = lift_to_digits(args);
  } else if (method == "log") {
    r = widen_until(args.digits, [&](std::size_t w) {
      return solve_log_ratio(PrincipalUnit::from_integer(args.a, args.p, w),
                             PrincipalUnit::from_integer(args.b, args.p, w), w);
    });
  } else {
    r = widen_until(args.digits, [&](std::size_t w) {
      return solve_units(PAdicInt::from_integer(Integer(static_cast<long>(args.a)), args.p, w),
                         PAdicInt::from_integer(Integer(static_cast<long>(args.b)), args.p, w), w);
    });
  }

  std::optional<PAdicInt> x;
  if (r.x) x = r.x->truncated(std::min(args.digits, r.x->precision()));

  if (g_json) {
    for (const LevelRow& row : r.levels) {
      Json j;
      j["n"] = row.n;
      j["x_n"] = row.x_n;
      j["digits"] = digits_of(row.x_n, args.p);
      j["verdict"] = "solvable";
      emit(j);
    }
    if (r.failed_level) {
      Json j;
      j["n"] = *r.failed_level;
      j["x_n"] = nullptr;
      j["digits"] = nullptr;
      j["verdict"] = "unsolvable";
      emit(j);
    }
    Json s;
    s["n"] = nullptr;
    s["x_n"] = nullptr;
    s["digits"] = x ? Json(format_digit_list(*x)) : Json(nullptr);
    s["verdict"] = std::string(to_string(r.verdict));
    s["method"] = std::string(to_string(r.method));
    s["precision"] = x ? x->precision() : 0;
    if (r.torsion) s["torsion"] = std::to_string(r.torsion->residue) + " mod " + std::to_string(r.torsion->modulus);
    emit(s);
  } else {
    std::cout << "dlog p=" << args.p << " a=" << args.a << " b=" << args.b << " method=" << to_string(r.method) << "\n";
    if (!r.levels.empty()) {
      std::cout << "n\tx_n\n";
      for (const LevelRow& row : r.levels) std::cout << row.n << "\t" << row.x_n << "\n";
    }
    if (r.failed_level) std::cout << "no solution mod " << args.p << "^" << *r.failed_level << "\n";
    std::cout << "verdict: " << to_string(r.verdict) << "\n";
    if (x) {
      std::cout << "digits: " << format_digit_list(*x) << "\n";
      std::cout << "x = " << format_power_sum(*x) << "\n";
    }
    if (r.torsion && r.torsion->modulus > 1) {
      std::cout << "torsion: x = " << r.torsion->residue << " mod " << r.torsion->modulus << "\n";
    }
  }
  return verdict_exit(r.verdict);
}

// ---- teich ----

int run_teich(u64 p, u64 a0, std::size_t digits) {
  const PAdicInt t = teichmuller_lift(a0, p, digits);
  const bool oracle = t == teichmuller_frobenius_oracle(a0, p, digits);
  if (!oracle) fail(ErrorCode::InternalInvariant, "recurrence and Frobenius iteration disagree");
  if (g_json) {
    Json j;
    j["p"] = p;
    j["a0"] = a0;
    j["digits"] = format_digit_list(t);
    j["frobenius_check"] = oracle;
    emit(j);
  } else {
    std::cout << format_digit_list(t) << "\n" << format_power_sum(t) << "\n";
  }
  return 0;
}

// ---- proot ----

Json proot_row(u64 p) {
  Json j;
  j["p"] = p;
  j["gauss_root"] = gauss_search(p, nullptr);
  if (p != 2 && p <= kStableRootTableLimit) {
    j["stable_roots"] = all_stable_roots(p);
    j["representatives"] = stable_root_representatives(p);
  }
  if (p != 2) {
    const PrimitiveRootCertificate c = stabilize(gauss_search(p, nullptr), p);
    j["stable_root"] = c.root;
    j["derivation"] = std::string(to_string(c.derivation));
  }
  return j;
}

int run_proot(std::optional<u64> p, std::vector<u64> range, std::optional<u64> stabilize_r) {
  std::vector<u64> primes;
  if (p) {
    if (!nt::is_prime(*p)) fail(ErrorCode::NotPrime, std::to_string(*p) + " is not prime");
    primes.push_back(*p);
  }
  if (range.size() == 2) {
    for (u64 q = range[0]; q <= range[1]; ++q) {
      if (nt::is_prime(q)) primes.push_back(q);
    }
  }
  if (primes.empty()) fail(ErrorCode::InvalidArgument, "give -p or --range LO HI");

  if (stabilize_r) {
    if (primes.size() != 1) fail(ErrorCode::InvalidArgument, "--stabilize needs a single -p");
    const PrimitiveRootCertificate c = stabilize(*stabilize_r, primes.front());
    if (g_json) {
      Json j;
      j["p"] = c.p;
      j["r"] = *stabilize_r;
      j["root"] = c.root;
      j["derivation"] = std::string(to_string(c.derivation));
      emit(j);
    } else {
      std::cout << c.root << " (" << to_string(c.derivation) << ")\n";
    }
    return 0;
  }
  for (u64 q : primes) {
    const Json j = proot_row(q);
    if (g_json) {
      emit(j);
    } else {
      std::cout << "p=" << q << " gauss_root=" << j["gauss_root"].get<u64>();
      if (j.contains("stable_roots")) std::cout << " stable_roots=" << join(j["stable_roots"].get<std::vector<u64>>());
      std::cout << "\n";
    }
  }
  return 0;
}

// ---- structure ----

int run_structure(u64 n) {
  const AbelianStructure s = group_structure(n);
  const std::vector<u64> inv = s.invariant_factors();
  if (g_json) {
    Json j;
    j["n"] = n;
    j["factors"] = s.factors;
    j["invariant_factors"] = inv;
    j["order"] = s.order();
    j["cyclic"] = s.cyclic.has_value();
    emit(j);
  } else {
    std::cout << join(s.factors) << "\n";
    std::cout << "order " << s.order() << ", " << (s.cyclic ? "cyclic" : "not cyclic") << "\n";
  }
  return 0;
}

// ---- quotient ----

int run_quotient(u64 p, u64 k, std::optional<unsigned> level) {
  const PowerMapReport r = power_map_report(p, k);
  const std::vector<u64> quotient = r.codomain_mod_image.finite_factors();
  std::optional<AbelianStructure> finite;
  if (level) finite = verify_cokernel_finite_level(p, *level, k, cap_from_env(kCokernelCap));
  if (g_json) {
    Json j;
    j["p"] = p;
    j["k"] = k;
    j["d1"] = r.d1;
    j["d2"] = r.d2;
    j["m"] = r.m;
    j["image"] = r.image.to_string(p);
    j["kernel"] = r.kernel.to_string(p);
    j["domain_mod_kernel"] = r.domain_mod_kernel.to_string(p);
    j["codomain_mod_image"] = r.codomain_mod_image.to_string(p);
    j["quotient"] = quotient;
    if (finite) {
      j["level"] = *level;
      j["finite_cokernel"] = finite->factors;
      j["predicted_cokernel"] = predicted_unit_cokernel(p, *level, k);
    }
    emit(j);
  } else {
    std::cout << join(quotient) << "\n";
    std::cout << "image      " << r.image.to_string(p) << "\n";
    std::cout << "kernel     " << r.kernel.to_string(p) << "\n";
    std::cout << "dom/ker    " << r.domain_mod_kernel.to_string(p) << "\n";
    std::cout << "codom/im   " << r.codomain_mod_image.to_string(p) << "\n";
    if (finite) {
      std::cout << "cokernel on Z_" << p << "^" << *level << "^*: " << join(finite->factors) << " (predicted "
                << join(predicted_unit_cokernel(p, *level, k)) << ")\n";
    }
  }
  return 0;
}

// ---- special ----

int run_special(i64 a, i64 b, u64 p, unsigned n) {
  const SpecialPairReport r = analyze_pair(a, b, p, n, cap_from_env(kSpecialPairCap));
  std::string cycles;
  if (r.x_o && r.ord_a > 1 && nt::gcd(*r.x_o % r.ord_a, r.ord_a) == 1) {
    cycles = format_cycles(cycle_decomposition(*r.x_o, r.ord_a).cycles);
  }
  if (g_json) {
    Json j;
    j["a"] = a;
    j["b"] = b;
    j["p"] = p;
    j["n"] = n;
    j["special"] = r.is_special;
    j["failure"] = std::string(to_string(r.failure));
    j["x_o"] = r.x_o ? Json(*r.x_o) : Json(nullptr);
    j["ord_a"] = r.ord_a;
    j["x_order"] = r.x_order ? Json(*r.x_order) : Json(nullptr);
    j["max_possible"] = r.max_possible;
    j["index"] = r.index;
    j["permutation"] = cycles;
    emit(j);
  } else {
    std::cout << (r.is_special ? "special" : "not special");
    if (!r.is_special) std::cout << " (" << to_string(r.failure) << ")";
    std::cout << "\n";
    if (r.x_o) std::cout << "x_o = " << *r.x_o << " in Z_" << r.ord_a << "^*\n";
    if (r.x_order) std::cout << "order of x_o = " << *r.x_order << ", maximum " << r.max_possible << "\n";
    std::cout << "index of <a> = " << r.index << "\n";
    if (!cycles.empty()) std::cout << cycles << "\n";
  }
  return 0;
}

// ---- tables ----

int run_tables(const std::string& name) {
  if (name == "list") {
    for (const auto& t : table_names()) std::cout << t << "\n";
    return 0;
  }
  for (const TableRow& row : build_table(name)) {
    if (g_json) {
      emit(row);
    } else {
      bool first = true;
      for (const auto& [key, value] : row.items()) {
        if (!first) std::cout << "  ";
        first = false;
        std::cout << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump());
      }
      std::cout << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  // CLI11 short options are one character; accept the two-letter "-a0" too.
  std::vector<std::string> args(argv, argv + argc);
  for (auto& a : args) {
    if (a == "-a0") a = "--a0";
  }
  std::vector<char*> raw;
  for (auto& a : args) raw.push_back(a.data());
  raw.push_back(nullptr);

  CLI::App app{"p-adic discrete logarithms and related tables"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "Emit json-lines");

  DlogArgs dlog;
  auto* dlog_cmd = app.add_subcommand("dlog", "Solve a^x = b in Z_(p)");
  dlog_cmd->add_option("-p", dlog.p, "Prime")->required();
  dlog_cmd->add_option("-a", dlog.a, "Base")->required();
  dlog_cmd->add_option("-b", dlog.b, "Target")->required();
  dlog_cmd->add_option("-N", dlog.digits, "Digits of x")->check(CLI::Range(1, 4096));
  dlog_cmd->add_option("--method", dlog.method, "lift | log | units | auto")
      ->check(CLI::IsMember({"lift", "log", "units", "auto"}));

  u64 teich_p = 0, teich_a0 = 0;
  std::size_t teich_n = 10;
  auto* teich_cmd = app.add_subcommand("teich", "Teichmuller lift of a0");
  teich_cmd->add_option("-p", teich_p, "Prime")->required();
  teich_cmd->add_option("--a0", teich_a0, "Constant digit in [1, p-1]")->required();
  teich_cmd->add_option("-N", teich_n, "Digits")->check(CLI::Range(1, 100000));

  std::optional<u64> proot_p, proot_stabilize;
  std::vector<u64> proot_range;
  auto* proot_cmd = app.add_subcommand("proot", "Primitive roots of p^n");
  proot_cmd->add_option("-p", proot_p, "Prime");
  proot_cmd->add_option("--range", proot_range, "LO HI")->expected(2);
  proot_cmd->add_option("--stabilize", proot_stabilize, "Primitive root of p to stabilize");

  u64 structure_n = 0;
  auto* structure_cmd = app.add_subcommand("structure", "Cyclic decomposition of Z_n^*");
  structure_cmd->add_option("n", structure_n, "Modulus")->required()->check(CLI::Range(u64{2}, nt::kMaxModulus));

  u64 quotient_p = 0, quotient_k = 0;
  std::optional<unsigned> quotient_level;
  auto* quotient_cmd = app.add_subcommand("quotient", "Q_p^* modulo k-th powers");
  quotient_cmd->add_option("-p", quotient_p, "Prime")->required();
  quotient_cmd->add_option("-k", quotient_k, "Exponent")->required()->check(CLI::PositiveNumber);
  quotient_cmd->add_option("--level", quotient_level, "Also enumerate the cokernel on Z_{p^n}^*");

  i64 special_a = 0, special_b = 0;
  u64 special_p = 0;
  unsigned special_n = 0;
  auto* special_cmd = app.add_subcommand("special", "Special-pair report");
  special_cmd->add_option("-a", special_a, "First element")->required();
  special_cmd->add_option("-b", special_b, "Second element")->required();
  special_cmd->add_option("-p", special_p, "Prime")->required();
  special_cmd->add_option("-n", special_n, "Level")->required()->check(CLI::Range(1, 62));

  std::string table_name;
  auto* tables_cmd = app.add_subcommand("tables", "Reference tables ('list' for names)");
  tables_cmd->add_option("name", table_name, "Table name")->required();

  try {
    app.parse(static_cast<int>(raw.size()) - 1, raw.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*dlog_cmd) return run_dlog(dlog);
    if (*teich_cmd) return run_teich(teich_p, teich_a0, teich_n);
    if (*proot_cmd) return run_proot(proot_p, proot_range, proot_stabilize);
    if (*structure_cmd) return run_structure(structure_n);
    if (*quotient_cmd) return run_quotient(quotient_p, quotient_k, quotient_level);
    if (*special_cmd) return run_special(special_a, special_b, special_p, special_n);
    if (*tables_cmd) return run_tables(table_name);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::Unsolvable) return kExitUnsolvable;
    if (e.code() == ErrorCode::InvalidArgument || e.code() == ErrorCode::UnknownTable) return kExitUsage;
    return kExitDomain;
  }
  return kExitUsage;
}
