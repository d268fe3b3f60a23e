#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace zetalab {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// parses "13/40", "-7", "9/2"
Rat rat_parse(const std::string& s);

// "13/40", integers without the slash
std::string rat_str(const Rat& r);

// kappa and lambda printed over their common denominator, "13/40 22/40" style
std::string rat_pair_common_den(const Rat& a, const Rat& b);

long double rat_ld(const Rat& r);

} // namespace zetalab
