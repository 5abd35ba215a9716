#include "singmod/numeric.hpp"

#include "singmod/forms.hpp"

#include <cmath>
#include <utility>

namespace singmod {

namespace {

// Shared reduction loop. The inversion step is tau -> -1/(c_inv * tau),
// applied while |tau|^2 < bound (1 = SL2(Z), 1/2 = Fricke at level 2).
ReductionResult reduce_impl(BigComplex tau, long c_inv, const char* inv_name) {
  require(tau.im.sign() > 0, "reduction: imaginary part must be positive");
  const long prec = tau.precision();
  // Margin keeps boundary points (|tau| = bound exactly, up to rounding)
  // from oscillating between the two inversion-related representatives.
  BigFloat margin = BigFloat::from_long(1, prec);
  for (long i = 0; i < prec / 2; ++i)
    margin = margin / BigFloat::from_long(2, prec);
  BigFloat bound =
      BigFloat::from_rational(make_fraction(1, c_inv), prec) *
      (BigFloat::from_long(1, prec) - margin);
  BigComplex minus_one(BigFloat::from_long(-1, prec),
                       BigFloat::from_long(0, prec));
  BigFloat c(BigFloat::from_long(c_inv, prec));

  std::string word;
  for (long iter = 0; iter < 10000; ++iter) {
    Integer k = tau.re.round_nearest();
    if (k != 0) {
      tau.re = tau.re - BigFloat::from_integer(k, prec);
      if (!word.empty()) word += " ";
      word += "T^" + Integer(-k).get_str();
    }
    if (norm(tau) < bound) {
      tau = minus_one / BigComplex(c * tau.re, c * tau.im);
      if (!word.empty()) word += " ";
      word += inv_name;
      continue;
    }
    return {std::move(tau), std::move(word)};
  }
  throw error("reduction: failed to converge");
}

}  // namespace

ReductionResult reduce_to_fundamental(const BigComplex& tau) {
  return reduce_impl(tau, 1, "S");
}

ReductionResult reduce_to_fricke2(const BigComplex& tau) {
  return reduce_impl(tau, 2, "W2");
}

EvalResult eval_form(const QSeries& s, const BigComplex& tau, long terms) {
  require(terms >= 1, "eval_form: need at least one term");
  require(tau.im.sign() > 0, "eval_form: imaginary part must be positive");
  const long prec = tau.precision();

  // base = exp(2 pi i tau / scale)
  BigFloat u = BigFloat::pi(prec) * BigFloat::from_long(2, prec) /
               BigFloat::from_long(s.scale(), prec);
  BigFloat mag = exp(-(u * tau.im));
  BigFloat ang = u * tau.re;
  BigComplex base(mag * cos(ang), mag * sin(ang));

  BigComplex sum(prec);
  BigFloat last(prec);
  BigComplex q_power(prec);
  bool have_power = false;
  long prev_e = 0;
  long used = 0;
  for (const auto& [e, cf] : s.coeffs()) {
    if (used == terms) break;
    if (!have_power) {
      q_power = pow_si(base, e);
      have_power = true;
    } else if (e != prev_e) {
      q_power = q_power * pow_si(base, e - prev_e);
    }
    prev_e = e;
    BigFloat c = BigFloat::from_rational(cf, prec);
    BigComplex term(q_power.re * c, q_power.im * c);
    sum = sum + term;
    last = abs(term);
    ++used;
  }
  require(used > 0, "eval_form: series has no stored coefficients");
  BigFloat tail = BigFloat::from_long(2, prec) * last;
  return {std::move(sum), std::move(tail)};
}

double asymptotic_ratio_j(long n) {
  require(n >= 1, "asymptotic_ratio_j: n must be >= 1");
  QSeries j = build_form("j", n + 1);
  const long prec = 256;
  BigFloat c = BigFloat::from_rational(j.coeff_q(n), prec);
  BigFloat nn = BigFloat::from_long(n, prec);
  BigFloat ratio = c * sqrt(BigFloat::from_long(2, prec)) *
                   exp(BigFloat::from_rational(make_fraction(3, 4), prec) *
                       log(nn)) *
                   exp(-(BigFloat::from_long(4, prec) * BigFloat::pi(prec) *
                         sqrt(nn)));
  return ratio.to_double();
}

double asymptotic_trace_ratio(long d, const Rational& value) {
  require(d >= 1, "asymptotic_trace_ratio: d must be >= 1");
  const long prec = 256;
  BigFloat v = BigFloat::from_rational(value, prec);
  BigFloat ratio = v * exp(-(BigFloat::from_long(2, prec) *
                             BigFloat::pi(prec) *
                             sqrt(BigFloat::from_long(d, prec))));
  return ratio.to_double();
}

std::pair<double, double> laplace_check(double lambda) {
  require(lambda > 0, "laplace_check: lambda must be positive");
  const double a = 4.0 * M_PI * lambda;
  // After t = sin(theta): integral of exp(a (cos theta - 1)) cos theta over
  // [-pi/2, pi/2], everything scaled by exp(-a) to stay in double range.
  auto integrand = [a](double theta) {
    return std::exp(a * (std::cos(theta) - 1.0)) * std::cos(theta);
  };
  double prev = 0.0;
  double cur = 0.0;
  bool converged = false;
  for (long k = 6; k <= 26; ++k) {
    const long panels = 1L << k;
    const double h = M_PI / static_cast<double>(panels);
    double sum = 0.0;
    for (long i = 0; i < panels; ++i) {
      double theta = -M_PI / 2.0 + (static_cast<double>(i) + 0.5) * h;
      sum += integrand(theta);
    }
    cur = sum * h;
    if (k > 6 && std::abs(cur - prev) <= 1e-10 * std::abs(cur)) {
      converged = true;
      break;
    }
    prev = cur;
  }
  require(converged, "laplace_check: quadrature non-convergence");
  const double closed = std::sqrt(1.0 / (2.0 * lambda));
  return {cur, closed};
}

}  // namespace singmod
