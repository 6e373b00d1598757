#include "onecob/rational.hpp"

#include <cctype>

#include "onecob/errors.hpp"

namespace onecob {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) digits.remove_prefix(1);
  if (digits.empty()) {
    throw ValidationError("cannot parse rational from \"" + std::string(whole) + "\"");
  }
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ValidationError("cannot parse rational from \"" + std::string(whole) + "\"");
    }
  }
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const std::size_t slash = s.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(s, text));
  }
  const Integer num = parse_integer(s.substr(0, slash), text);
  const Integer den = parse_integer(s.substr(slash + 1), text);
  if (den == 0) {
    throw ValidationError("zero denominator in \"" + std::string(text) + "\"");
  }
  return Rational(num) / Rational(den);
}

std::string format_rational(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Integer integer_pow(unsigned base, std::uint64_t exponent) {
  Integer out = 1;
  const Integer b = base;
  for (std::uint64_t i = 0; i < exponent; ++i) out *= b;
  return out;
}

}  // namespace onecob
