#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace onecob {

// Exact arbitrary-precision scalars; no floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "3", "-3", "3/4", "-3/4" (optionally with surrounding spaces).
Rational parse_rational(std::string_view text);

// Lowest terms, positive denominator; integers render without "/1".
std::string format_rational(const Rational& value);

// p^e as an exact integer.
Integer integer_pow(unsigned base, std::uint64_t exponent);

}  // namespace onecob
