#pragma once

// Thin value-semantics wrappers around MPFR reals and complex pairs.
// Operations round to nearest and carry the maximum operand precision.

#include "singmod/rational.hpp"

#include <mpfr.h>

#include <string>

namespace singmod {

class BigFloat {
 public:
  explicit BigFloat(long prec = 128);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat from_long(long v, long prec);
  static BigFloat from_double(double v, long prec);
  static BigFloat from_rational(const Rational& r, long prec);
  static BigFloat from_integer(const Integer& z, long prec);
  static BigFloat pi(long prec);

  long precision() const;
  double to_double() const;
  std::string to_string(long digits = 30) const;
  // Nearest integer (ties away from zero).
  Integer round_nearest() const;
  int sign() const;  // -1, 0, +1

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;

  friend bool operator<(const BigFloat& a, const BigFloat& b);
  friend bool operator>(const BigFloat& a, const BigFloat& b);
  friend bool operator<=(const BigFloat& a, const BigFloat& b);
  friend bool operator>=(const BigFloat& a, const BigFloat& b);

  friend BigFloat abs(const BigFloat& a);
  friend BigFloat sqrt(const BigFloat& a);
  friend BigFloat exp(const BigFloat& a);
  friend BigFloat log(const BigFloat& a);
  friend BigFloat sin(const BigFloat& a);
  friend BigFloat cos(const BigFloat& a);
  friend BigFloat pow_si(const BigFloat& a, long e);

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
};

struct BigComplex {
  BigFloat re, im;

  explicit BigComplex(long prec = 128) : re(prec), im(prec) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  long precision() const;

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
  BigComplex operator-() const;

  friend BigComplex conj(const BigComplex& a);
  friend BigFloat abs(const BigComplex& a);   // |a| via hypot
  friend BigFloat norm(const BigComplex& a);  // re^2 + im^2

  // Integer power by binary exponentiation; e < 0 inverts.
  friend BigComplex pow_si(const BigComplex& a, long e);
};

}  // namespace singmod
