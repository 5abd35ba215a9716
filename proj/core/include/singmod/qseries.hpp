#pragma once

// Truncated q-expansions with exact rational coefficients.
//
// A QSeries represents sum_e c_e q^(e/scale) where e runs over integers in
// [floor, order). Exponents >= order are unknown (truncated away), and the
// series is guaranteed to have no nonzero coefficient below floor. `floor`
// is a bound, not necessarily attained; coefficients inside [floor, order)
// that are absent from the map are exactly zero.
//
// Truncation bookkeeping under multiplication is pessimistic and sound:
//   order(a*b) = min(a.order + b.floor, b.order + a.floor)
//   floor(a*b) = a.floor + b.floor
// so a product never claims more precision than its inputs support.

#include "singmod/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace singmod {

class QSeries {
 public:
  // Zero series known up to (not including) q^(order/scale).
  QSeries(long scale, long floor, long order);
  QSeries() : QSeries(1, 0, 0) {}

  // Constant series c + O(q^order), scale 1.
  static QSeries constant(const Rational& c, long order);
  // Monomial c*q^(e/scale) + O(q^(order/scale)).
  static QSeries monomial(const Rational& c, long e, long scale, long order);

  long scale() const { return scale_; }
  long floor_exp() const { return floor_; }
  long order() const { return order_; }
  const std::map<long, Rational>& coeffs() const { return coeffs_; }

  // Sets the coefficient of q^(e/scale). e must lie in [floor, order).
  void set(long e, const Rational& c);
  // Coefficient of q^(e/scale); zero if absent, error if e >= order.
  const Rational& at(long e) const;
  // Coefficient of q^x for rational exponent x (in q-units, not scaled
  // units): zero when x is not representable on this scale's lattice.
  Rational coeff_q(const Rational& x) const;
  // Convenience: coefficient of q^n for integer n.
  Rational coeff_q(long n) const { return coeff_q(Rational(n)); }

  bool is_known_zero() const;  // all tracked coefficients vanish

  // Raises floor to the smallest stored exponent (or to order when the
  // series is identically zero on its tracked range). Sound because the
  // class invariant forces absent low coefficients to be exact zeros.
  void tighten_floor();

  // Rewrites on the coarsest equivalent exponent lattice.
  void normalize_scale();

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const Rational& c);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
  friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }

  friend QSeries series_mul(const QSeries& a, const QSeries& b);

  // Multiplicative inverse. The leading coefficient (at the tightened
  // floor) must be nonzero; throws "non-invertible series" otherwise.
  // `order` requests the absolute truncation order of the result (in the
  // inverse's scaled units); it is capped by what a's precision supports.
  friend QSeries series_inv(const QSeries& a, long order);

  // a * inv(b), truncation per the min-rule.
  friend QSeries series_div(const QSeries& a, const QSeries& b);

  // Substitutes q -> q^t for rational t > 0 (e.g. f(4tau), f(tau/2)).
  friend QSeries rescale(const QSeries& a, const Rational& t);

  // q d/dq: multiplies the coefficient of q^x by x.
  friend QSeries q_derivative(const QSeries& a);

  // Integer power, e >= 0.
  friend QSeries series_pow(const QSeries& a, long e);

  // (1 - q^n)^N for arbitrary (huge) integer N, truncated to `order`;
  // used by Borcherds product assembly. n >= 1.
  static QSeries one_minus_qn_pow(long n, const Integer& N, long order);

  // JSON round-trip: {"scale":..,"floor":..,"order":..,
  //                   "coeffs":[[e,"num/den"],...]} with ascending e.
  std::string to_json() const;
  static QSeries from_json(const std::string& text);

  // "q^-1 + 744 + 196884*q + ..." for diagnostics and CLI text output.
  std::string to_text(long max_terms = 24) const;

 private:
  long scale_;
  long floor_;
  long order_;
  std::map<long, Rational> coeffs_;  // only nonzero entries

  void drop_zeros();
  static void promote_to_common_scale(QSeries& a, QSeries& b);
};

}  // namespace singmod
