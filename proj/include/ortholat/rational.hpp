#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace ortholat {

// Exact arithmetic only; nothing in this library touches floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Canonical text form "p/q" with q > 0 and gcd(p, q) = 1. Integers are
// rendered with an explicit denominator ("3/1") so the format round-trips
// without a second grammar.
std::string rat_str(const Rat& r);

// Accepts "p/q" or a bare integer "p". Throws Error(ParseError) otherwise.
Rat rat_parse(std::string_view text);

}  // namespace ortholat
