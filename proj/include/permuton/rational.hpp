#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision rationals (GMP `mpq_class`) and their text form.
 *
 * Every value is kept canonical: positive denominator, coprime parts.
 */

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "permuton/errors.hpp"

namespace permuton {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Accepts `[+-]digits[/digits]`. Throws ParseError on anything else.
inline Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  std::string cleaned;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    if (text[i] == '-') cleaned.push_back('-');
    ++i;
  }
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    cleaned.push_back(text[i++]);
    ++digits;
  }
  if (digits == 0) throw ParseError("expected digits in rational", i);
  if (i < text.size() && text[i] == '/') {
    cleaned.push_back('/');
    ++i;
    std::size_t den_digits = 0;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      cleaned.push_back(text[i++]);
      ++den_digits;
    }
    if (den_digits == 0) throw ParseError("expected denominator digits", i);
  }
  if (i != text.size()) throw ParseError("trailing characters in rational", i);
  Rational r;
  if (r.set_str(cleaned, 10) != 0) throw ParseError("invalid rational", 0);
  if (r.get_den() == 0) throw ParseError("zero denominator", 0);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// num/den in lowest terms; mpq_class(num, den) alone does not reduce.
inline Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::division_by_zero, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace permuton
