#include "padlog/padic_io.hpp"

#include <charconv>
#include <vector>

#include "padlog/error.hpp"

namespace padlog {

namespace {

template <typename T>
T parse_number(std::string_view s, std::string_view what) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    fail(ErrorCode::ParseError, "bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return value;
}

bool looks_signed_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

PAdicInt parse_padic(std::string_view text, const ParseContext& ctx) {
  std::string_view body = text;
  std::optional<std::uint64_t> base = ctx.base;
  std::optional<std::size_t> precision = ctx.precision;
  bool unbounded = false;
  const bool has_suffix = text.find('@') != std::string_view::npos;

  if (has_suffix) {
    const auto at = text.find('@');
    body = text.substr(0, at);
    std::string_view tail = text.substr(at + 1);
    std::string_view base_part = tail;
    precision.reset();
    if (auto caret = tail.find('^'); caret != std::string_view::npos) {
      base_part = tail.substr(0, caret);
      std::string_view prec_part = tail.substr(caret + 1);
      if (prec_part == "inf") {
        unbounded = true;
      } else {
        precision = parse_number<std::size_t>(prec_part, "precision");
      }
    }
    base = parse_number<std::uint64_t>(base_part, "base");
  }
  if (!base) fail(ErrorCode::ParseError, "no base given for '" + std::string(text) + "'");

  if (unbounded) {
    if (body != "0") fail(ErrorCode::ParseError, "only zero is known to unbounded precision");
    return PAdicInt::zero(*base);
  }

  if (body.find(',') == std::string_view::npos) {
    // A single token is a signed decimal integer; a lone digit reads the same
    // either way.
    if (!looks_signed_integer(body)) fail(ErrorCode::ParseError, "bad integer '" + std::string(body) + "'");
    Integer z;
    std::string s(body[0] == '+' ? body.substr(1) : body);
    if (z.set_str(s, 10) != 0) fail(ErrorCode::ParseError, "bad integer '" + s + "'");
    if (!precision) {
      if (!has_suffix || z < 0) fail(ErrorCode::ParseError, "no precision given for '" + std::string(text) + "'");
      std::size_t count = 1;
      for (Integer r = z / static_cast<unsigned long>(*base); r != 0; r /= static_cast<unsigned long>(*base)) ++count;
      precision = count;
    }
    return PAdicInt::from_integer(z, *base, *precision);
  }

  std::vector<Digit> digits;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = body.find(',', start);
    std::string_view item = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    digits.push_back(parse_number<Digit>(item, "digit"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (precision) {
    if (digits.size() > *precision) {
      fail(ErrorCode::ParseError, std::to_string(digits.size()) + " digits exceed precision " + std::to_string(*precision));
    }
    digits.resize(*precision, 0);
  }
  return PAdicInt::from_digits(std::move(digits), *base);
}

std::string format_digit_list(const PAdicInt& x) {
  if (x.is_zero_literal()) return "0";
  std::string out;
  for (Digit d : x.digits()) {
    if (!out.empty()) out += ',';
    out += std::to_string(d);
  }
  return out;
}

std::string format_padic(const PAdicInt& x) {
  std::string out = format_digit_list(x) + "@" + std::to_string(x.base()) + "^";
  out += x.is_zero_literal() ? "inf" : std::to_string(x.precision());
  return out;
}

std::string format_power_sum(const PAdicInt& x, bool with_big_o) {
  const std::string p = std::to_string(x.base());
  std::string out;
  const auto digits = x.digits();
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] == 0) continue;
    std::string term;
    if (i == 0) {
      term = std::to_string(digits[i]);
    } else {
      std::string power = i == 1 ? p : p + "^" + std::to_string(i);
      term = digits[i] == 1 ? power : std::to_string(digits[i]) + "*" + power;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  if (out.empty()) out = "0";
  if (with_big_o && !x.is_zero_literal()) out += " + O(" + p + "^" + std::to_string(x.precision()) + ")";
  return out;
}

}  // namespace padlog
