#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "noncross/rational.hpp"

namespace noncross {

/// Comma or whitespace separated rationals, e.g. "0,1,0,2" or "1/2 3".
std::vector<Rational> parse_rational_list(std::string_view text);

/// Comma or whitespace separated integers.
std::vector<int> parse_int_list(std::string_view text);

/// Fixed-point decimal rendering with the given number of significant
/// digits, for convenience columns.
std::string to_decimal(const Rational& r, int digits = 17);

}  // namespace noncross
