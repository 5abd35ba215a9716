#pragma once

// Exact arithmetic primitives shared across the library.
//
// Rational is GMP's mpq_class: always in lowest terms with positive
// denominator (mpq canonical form), which is exactly the contract the
// rest of the library relies on.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace singmod {

using Rational = mpq_class;
using Integer = mpz_class;

struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Precondition helper: throws singmod::error with the given message.
inline void require(bool cond, const std::string& msg) {
  if (!cond) throw error(msg);
}

// Canonical fraction constructor. mpq_class's two-argument constructor does
// NOT reduce to lowest terms, and GMP's mpq arithmetic assumes canonical
// operands — always build fractions through this helper.
inline Rational make_fraction(long num, long den) {
  require(den != 0, "make_fraction: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}
inline Rational make_fraction(const Integer& num, const Integer& den) {
  require(den != 0, "make_fraction: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "num/den" or "num". Throws on malformed input or den == 0.
Rational parse_rational(const std::string& s);

// Serializes as "num/den", or "num" when den == 1.
std::string to_string(const Rational& r);

// Exact binomial coefficient; zero for k < 0 or k > n (n >= 0 required).
Integer binomial(long n, long k);

// r^e for e >= 0 (0^0 = 1).
Rational pow_rational(const Rational& r, long e);

// True if r is an integer.
inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Rounds to the nearest integer (ties away from zero); exact input expected
// to be within 1/2 of an integer in all call sites, so tie policy is moot.
Integer round_to_integer(const Rational& r);

}  // namespace singmod
