#pragma once

// Text form shared by the CLI and the golden files:
//   "5,5,3,2@7^4"  digits least significant first, base 7, precision 4
//   "5,5,3,2@7"    precision taken from the digit count
//   "-98"          signed decimal, expanded at a caller-supplied base/precision
//   "-98@7^5"      signed decimal with explicit base and precision

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "padlog/padic.hpp"

namespace padlog {

struct ParseContext {
  std::optional<std::uint64_t> base;
  std::optional<std::size_t> precision;
};

PAdicInt parse_padic(std::string_view text, const ParseContext& ctx = {});

/// "d0,d1,...@p^N"; the zero literal prints as "0@p^inf".
std::string format_padic(const PAdicInt& x);

/// Digits only, comma separated, least significant first.
std::string format_digit_list(const PAdicInt& x);

/// Power-sum notation such as "1 + 2 + 2^3 + O(2^14)".
std::string format_power_sum(const PAdicInt& x, bool with_big_o = true);

}  // namespace padlog
