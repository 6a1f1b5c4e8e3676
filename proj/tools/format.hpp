#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <system_error>

#include "dsmt/error.hpp"

namespace dsmt::cli {

// Locale-independent fixed notation; negative zero prints as zero.
inline std::string fixed(double v, int precision = 6) {
  if (std::isnan(v)) return "NaN";
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, precision);
  std::string s(buf, r.ptr);
  if (s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

// Shortest round-trip representation.
inline std::string shortest(double v) {
  if (std::isnan(v)) return "NaN";
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

// Plain decimal literal ("0.25", "1", ".5"); no exponents, signs or spaces.
inline double parse_decimal(std::string_view s) {
  bool digit_seen = false, dot_seen = false;
  for (char c : s) {
    if (c >= '0' && c <= '9') {
      digit_seen = true;
    } else if (c == '.' && !dot_seen) {
      dot_seen = true;
    } else {
      digit_seen = false;
      break;
    }
  }
  double v = 0.0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v, std::chars_format::fixed);
  if (!digit_seen || r.ec != std::errc() || r.ptr != s.data() + s.size())
    throw Error(Errc::kInvalidScenario, "'" + std::string(s) + "' is not a decimal number");
  return v;
}

inline std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace dsmt::cli
