#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace hcc {

// Exact arbitrary-precision integer / rational used everywhere a value can
// exceed 64 bits (subpacketization counts such as C(132,66)) or must stay
// an exact fraction (memory ratios, loads).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(long long num, long long den) { return Rat(Int(num), Int(den)); }

// Decimal rendering of an exact rational, round-half-up, fixed number of
// fractional digits.  Only used at output boundaries.
std::string to_decimal(const Rat& r, int digits);

// Compact scientific rendering for very large integers, e.g. "1.346e15".
std::string to_sci(const Int& v, int sig = 4);

std::string rat_to_string(const Rat& r);  // "p/q" or "p" when integral

}  // namespace hcc
