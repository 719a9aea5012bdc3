#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace gmet {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "p" (optionally signed). Throws std::invalid_argument on
/// malformed input or zero denominator.
Rat parse_rat(std::string_view s);

/// Renders a rational in lowest terms, "p/q", or just "p" when q == 1.
std::string rat_str(const Rat& r);

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

/// True iff b/a is an integer (divisibility over rational carriers).
bool rat_divides(const Rat& a, const Rat& b);

/// Smallest multiple of step that is >= v. step must be positive.
Rat ceil_to_multiple(const Rat& v, const Rat& step);

}  // namespace gmet
