#include "singmod/bigfloat.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace singmod {

namespace {
constexpr mpfr_rnd_t R = MPFR_RNDN;
long opmax(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

BigFloat::BigFloat(long prec) {
  require(prec >= 2, "BigFloat: precision must be >= 2 bits");
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, R);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, R);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_long(long v, long prec) {
  BigFloat r(prec);
  mpfr_set_si(r.v_, v, R);
  return r;
}

BigFloat BigFloat::from_double(double v, long prec) {
  BigFloat r(prec);
  mpfr_set_d(r.v_, v, R);
  return r;
}

BigFloat BigFloat::from_rational(const Rational& q, long prec) {
  BigFloat r(prec);
  mpfr_set_q(r.v_, q.get_mpq_t(), R);
  return r;
}

BigFloat BigFloat::from_integer(const Integer& z, long prec) {
  BigFloat r(prec);
  mpfr_set_z(r.v_, z.get_mpz_t(), R);
  return r;
}

BigFloat BigFloat::pi(long prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.v_, R);
  return r;
}

long BigFloat::precision() const { return mpfr_get_prec(v_); }

double BigFloat::to_double() const { return mpfr_get_d(v_, R); }

std::string BigFloat::to_string(long digits) const {
  std::vector<char> buf(digits + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", static_cast<int>(digits), v_);
  return std::string(buf.data());
}

Integer BigFloat::round_nearest() const {
  mpfr_t t;
  mpfr_init2(t, mpfr_get_prec(v_));
  mpfr_round(t, v_);
  Integer z;
  mpfr_get_z(z.get_mpz_t(), t, R);
  mpfr_clear(t);
  return z;
}

int BigFloat::sign() const { return mpfr_sgn(v_); }

#define SINGMOD_BF_BINARY(op, fn)                                  \
  BigFloat operator op(const BigFloat& a, const BigFloat& b) {     \
    BigFloat r(opmax(a, b));                                       \
    fn(r.v_, a.v_, b.v_, R);                                       \
    return r;                                                      \
  }
SINGMOD_BF_BINARY(+, mpfr_add)
SINGMOD_BF_BINARY(-, mpfr_sub)
SINGMOD_BF_BINARY(*, mpfr_mul)
SINGMOD_BF_BINARY(/, mpfr_div)
#undef SINGMOD_BF_BINARY

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, R);
  return r;
}

bool operator<(const BigFloat& a, const BigFloat& b) {
  return mpfr_cmp(a.v_, b.v_) < 0;
}
bool operator>(const BigFloat& a, const BigFloat& b) {
  return mpfr_cmp(a.v_, b.v_) > 0;
}
bool operator<=(const BigFloat& a, const BigFloat& b) {
  return mpfr_cmp(a.v_, b.v_) <= 0;
}
bool operator>=(const BigFloat& a, const BigFloat& b) {
  return mpfr_cmp(a.v_, b.v_) >= 0;
}

#define SINGMOD_BF_UNARY(name, fn)       \
  BigFloat name(const BigFloat& a) {     \
    BigFloat r(a.precision());           \
    fn(r.v_, a.v_, R);                   \
    return r;                            \
  }
SINGMOD_BF_UNARY(abs, mpfr_abs)
SINGMOD_BF_UNARY(sqrt, mpfr_sqrt)
SINGMOD_BF_UNARY(exp, mpfr_exp)
SINGMOD_BF_UNARY(log, mpfr_log)
SINGMOD_BF_UNARY(sin, mpfr_sin)
SINGMOD_BF_UNARY(cos, mpfr_cos)
#undef SINGMOD_BF_UNARY

BigFloat pow_si(const BigFloat& a, long e) {
  BigFloat r(a.precision());
  mpfr_pow_si(r.v_, a.raw(), e, R);
  return r;
}

// ---------------- BigComplex ----------------

long BigComplex::precision() const {
  return std::max(re.precision(), im.precision());
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
  return {a.re + b.re, a.im + b.im};
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
  return {a.re - b.re, a.im - b.im};
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigFloat d = norm(b);
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

BigComplex BigComplex::operator-() const { return {-re, -im}; }

BigComplex conj(const BigComplex& a) { return {a.re, -a.im}; }

BigFloat abs(const BigComplex& a) {
  BigFloat r(a.precision());
  mpfr_hypot(r.raw(), a.re.raw(), a.im.raw(), R);
  return r;
}

BigFloat norm(const BigComplex& a) { return a.re * a.re + a.im * a.im; }

BigComplex pow_si(const BigComplex& a, long e) {
  const long prec = a.precision();
  if (e < 0) {
    BigComplex one(prec);
    mpfr_set_si(one.re.raw(), 1, R);
    return one / pow_si(a, -e);
  }
  BigComplex result(prec);
  mpfr_set_si(result.re.raw(), 1, R);
  BigComplex base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

}  // namespace singmod
