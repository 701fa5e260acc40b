#include "econreg/format.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace econreg::fmt {

bool is_rounded_zero(const std::string& s) {
  return std::none_of(s.begin(), s.end(), [](char c) { return c >= '1' && c <= '9'; });
}

std::string fixed(double v, int decimals, bool spss_style) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "Inf" : "-Inf";
  decimals = std::clamp(decimals, 0, 17);
  std::array<char, 512> buf{};
  std::snprintf(buf.data(), buf.size(), "%.*f", decimals, v);
  std::string s(buf.data());
  if (is_rounded_zero(s) && s.front() == '-') s.erase(0, 1);
  if (spss_style) {
    if (s.starts_with("0.")) {
      s.erase(0, 1);
    } else if (s.starts_with("-0.")) {
      s.erase(1, 1);
    }
  }
  return s;
}

std::string significant(double v, int digits, bool spss_style) {
  if (!std::isfinite(v) || v == 0.0) return fixed(v, std::max(digits - 1, 0), spss_style);
  const int int_digits = std::max(1, static_cast<int>(std::floor(std::log10(std::fabs(v)))) + 1);
  return fixed(v, std::max(digits - int_digits, 0), spss_style);
}

std::string large(double v, bool spss_style) {
  if (!std::isfinite(v) || v == 0.0) return fixed(v, 3, spss_style);
  const int int_digits = std::max(1, static_cast<int>(std::floor(std::log10(std::fabs(v)))) + 1);
  return fixed(v, std::clamp(11 - int_digits, 0, 3), spss_style);
}

std::string plain(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

}  // namespace econreg::fmt
