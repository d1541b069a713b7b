#pragma once

#include <gmpxx.h>

#include <string>

#include "supalg/errors.hpp"

namespace supalg {

/// Exact rational scalar.  GMP keeps values canonical: the denominator is
/// positive, gcd(|num|, den) = 1, and zero is stored as 0/1.  All arithmetic
/// in this library is exact; nothing is ever rounded.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Canonical text form: "p" for integers, "p/q" otherwise (q > 1 after
/// reduction).  This is exactly what parse_rational accepts back.
inline std::string to_string(const Rational& r) { return r.get_str(); }

namespace detail {

// Digit run without leading zeros ("0" itself is fine).
inline bool canonical_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  if (s.size() > 1 && s[0] == '0') return false;
  return true;
}

}  // namespace detail

/// Strict parser for the canonical form.  Rejects anything a canonical
/// serializer would never emit: empty strings, whitespace, leading zeros,
/// "-0", zero denominators, and unreduced fractions such as "2/4".
inline Rational parse_rational(const std::string& text) {
  auto fail = [&](const std::string& why) -> Rational {
    throw ParseError("invalid rational literal \"" + text + "\": " + why);
  };

  std::string body = text;
  bool negative = false;
  if (!body.empty() && body[0] == '-') {
    negative = true;
    body.erase(0, 1);
  }

  std::string num_part = body, den_part;
  bool has_den = false;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    num_part = body.substr(0, slash);
    den_part = body.substr(slash + 1);
    has_den = true;
    if (den_part.find('/') != std::string::npos) return fail("more than one '/'");
  }

  if (!detail::canonical_digits(num_part)) return fail("malformed numerator");
  if (negative && num_part == "0") return fail("negative zero");

  mpz_class num(num_part, 10);
  if (negative) num = -num;

  if (!has_den) return Rational(num);

  if (!detail::canonical_digits(den_part)) return fail("malformed denominator");
  mpz_class den(den_part, 10);
  if (den == 0) return fail("zero denominator");

  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) return fail("not in lowest terms");

  Rational r;
  r.get_num() = num;
  r.get_den() = den;
  return r;
}

}  // namespace supalg
