/*
 * rational.hpp
 * ------------
 * Exact coefficient arithmetic.  Coefficients are arbitrary-precision
 * rationals (GMP), kept in canonical form: fully reduced, denominator
 * positive, unique zero.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "wv/errors.hpp"

namespace wv {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

/// Parses "a" or "a/b" with optional leading '-'.
inline Rational rational_from_string(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw Error("bad rational literal '" + s + "'");
  }
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational rational_pow(const Rational& base, std::uint64_t e) {
  Rational r(1);
  Rational b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace wv
