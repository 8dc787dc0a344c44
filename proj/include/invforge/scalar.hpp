#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "invforge/errors.hpp"

namespace invforge {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(unsigned long n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

inline std::string to_string(const Integer& value) { return value.get_str(); }

// "p" for integral values, "p/q" otherwise; mpq values are always canonical.
inline std::string to_string(const Rational& value) { return value.get_str(); }

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }

inline Integer parse_integer(std::string_view text) {
  Integer result;
  std::string buffer(text);
  if (buffer.empty() || result.set_str(buffer, 10) != 0) {
    throw ParseError("invalid integer '" + buffer + "'");
  }
  return result;
}

inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational result(num, den);
  result.canonicalize();
  return result;
}

}  // namespace invforge
