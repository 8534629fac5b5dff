#include "padlog/tables.hpp"

#include "padlog/dlog_solver.hpp"
#include "padlog/error.hpp"
#include "padlog/numth.hpp"
#include "padlog/padic_io.hpp"
#include "padlog/primitive_root.hpp"
#include "padlog/residue_group.hpp"
#include "padlog/special_pairs.hpp"

namespace padlog {

namespace {

std::string expansion(u64 value, u64 p) {
  std::size_t digits = 1;
  for (u64 v = value / p; v > 0; v /= p) ++digits;
  return format_power_sum(PAdicInt::from_integer(Integer(static_cast<unsigned long>(value)), p, digits), false);
}

std::vector<TableRow> gauss_proots() {
  std::vector<TableRow> rows;
  for (u64 p : {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43}) {
    TableRow row;
    row["p"] = p;
    row["p_mod_4"] = p % 4;
    row["stable_roots"] = all_stable_roots(p);
    row["representatives"] = stable_root_representatives(p);
    row["gauss_root"] = gauss_search(p, nullptr);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TableRow> order_2_mod_5n() {
  std::vector<TableRow> rows;
  for (unsigned n = 1; n <= 10; ++n) {
    TableRow row;
    row["n"] = n;
    row["order"] = order_mod(2, nt::checked_pow(5, n));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TableRow> lifting_table(i64 a, i64 b, u64 p, std::size_t first, std::size_t last) {
  const DlogResult r = solve_by_lifting(a, b, p, last);
  std::vector<TableRow> rows;
  for (const LevelRow& level : r.levels) {
    if (level.n < first) continue;
    TableRow row;
    row["n"] = level.n;
    row["x_n"] = level.x_n;
    row["expansion"] = expansion(level.x_n, p);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TableRow> special_x_order() {
  std::vector<TableRow> rows;
  for (unsigned n = 5; n <= 10; ++n) {
    const SpecialPairReport r = analyze_pair(-3, 5, 2, n);
    TableRow row;
    row["n"] = n;
    row["modulus"] = r.ord_a;
    row["x_mod_o"] = *r.x_o % r.ord_a;
    row["expansion"] = expansion(*r.x_o % r.ord_a, 2);
    row["x_order"] = *r.x_order;
    row["max_possible"] = r.max_possible;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TableRow> special_cycles() {
  std::vector<TableRow> rows;
  for (unsigned n = 3; n <= 7; ++n) {
    const SpecialPairReport r = analyze_pair(-3, 5, 2, n);
    const CycleDecomposition c = cycle_decomposition(*r.x_o, r.ord_a);
    TableRow row;
    row["n"] = n;
    row["modulus"] = r.ord_a;
    row["x_n"] = *r.x_o;
    row["permutation"] = format_cycles(c.cycles);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<std::string> table_names() {
  return {"gauss-proots",      "order-2-mod-5n",    "neg3-pow-5-mod-2n", "sq-pair-mod-2n",
          "neg2-pow-3-mod-5n", "neg4-pow-6-mod-5n", "special-x-order",   "special-cycles"};
}

std::vector<TableRow> build_table(std::string_view name) {
  if (name == "gauss-proots") return gauss_proots();
  if (name == "order-2-mod-5n") return order_2_mod_5n();
  if (name == "neg3-pow-5-mod-2n") return lifting_table(-3, 5, 2, 1, 10);
  if (name == "sq-pair-mod-2n") return lifting_table(9, 25, 2, 5, 20);
  if (name == "neg2-pow-3-mod-5n") return lifting_table(-2, 3, 5, 1, 10);
  if (name == "neg4-pow-6-mod-5n") return lifting_table(-4, 6, 5, 1, 10);
  if (name == "special-x-order") return special_x_order();
  if (name == "special-cycles") return special_cycles();
  fail(ErrorCode::UnknownTable, "no table named '" + std::string(name) + "'");
}

std::string format_cycles(const std::vector<std::vector<std::uint64_t>>& cycles) {
  std::string out;
  for (const auto& cycle : cycles) {
    out += "(";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(cycle[i]);
    }
    out += ")";
  }
  return out;
}

}  // namespace padlog
