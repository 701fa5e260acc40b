#pragma once

#include <string>

namespace econreg::fmt {

/// Fixed decimals. In SPSS style the leading zero of |v| < 1 is dropped
/// (".997", "-.197") and a rounded zero never carries a sign.
std::string fixed(double v, int decimals, bool spss_style = true);

/// `significant` digits in total, never fewer than 0 decimals ("46.0644").
std::string significant(double v, int significant, bool spss_style = true);

/// Sums of squares and similar: 3 decimals, reduced so the number carries at
/// most 11 significant digits.
std::string large(double v, bool spss_style = true);

/// Shortest round-trip representation.
std::string plain(double v);

/// True when the string is a rounded zero such as ".000" or "-0.00".
bool is_rounded_zero(const std::string& s);

}  // namespace econreg::fmt
