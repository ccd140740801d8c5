#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ydforge {

// Arbitrary-precision integers and rationals. cpp_rational keeps its value
// normalized (lowest terms, positive denominator), which makes equality of
// coordinate vectors a canonical-form comparison.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "num/den" in lowest terms, denominator always printed: "0/1", "-1/2".
std::string rational_to_string(const Rational& r);

// Accepts "num/den" or a bare integer "num". Throws std::invalid_argument.
Rational rational_from_string(std::string_view text);

}  // namespace ydforge
