#pragma once

// Named reference tables, one JSON object per row, in a fixed key order so
// json-lines output is byte-stable.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace padlog {

using TableRow = nlohmann::ordered_json;

std::vector<std::string> table_names();

/// Throws UnknownTable.
std::vector<TableRow> build_table(std::string_view name);

/// "(1 3)(2 6)(4)(5 7)".
std::string format_cycles(const std::vector<std::vector<std::uint64_t>>& cycles);

}  // namespace padlog
