#pragma once

// Fundamental-domain reduction, high-precision evaluation of q-expansions
// on the upper half-plane, and leading-term asymptotic checks.

#include "singmod/bigfloat.hpp"
#include "singmod/qseries.hpp"

#include <string>
#include <utility>

namespace singmod {

struct ReductionResult {
  BigComplex tau;    // reduced representative
  std::string word;  // generator word as applied, e.g. "T^-10 S"
};

// SL2(Z) reduction into |Re tau'| <= 1/2, |tau'| >= 1. Im strictly
// increases under each inversion, so the loop terminates.
ReductionResult reduce_to_fundamental(const BigComplex& tau);

// Fricke-group reduction at level 2 (generators T and W2: tau -> -1/(2tau))
// into |Re tau'| <= 1/2, |tau'| >= 1/sqrt(2).
ReductionResult reduce_to_fricke2(const BigComplex& tau);

struct EvalResult {
  BigComplex value;
  BigFloat tail_bound;  // heuristic geometric estimate: 2 |last kept term|
};

// Partial sum of sum_e c_e exp(2 pi i (e/scale) tau) over the first `terms`
// stored coefficients in ascending exponent order.
EvalResult eval_form(const QSeries& s, const BigComplex& tau, long terms);

// Coeff_{q^n}(j) * sqrt(2) * n^(3/4) * exp(-4 pi sqrt(n)) -> 1 as n grows.
double asymptotic_ratio_j(long n);

// value * exp(-2 pi sqrt(d)), for an exact value supplied by the caller.
double asymptotic_trace_ratio(long d, const Rational& value);

// Laplace-method check for f(t) = 4 pi sqrt(1 - t^2): returns
//   { exp(-4 pi lambda) * integral_{-1}^{1} exp(lambda f(t)) dt,
//     sqrt(2 pi / (4 pi lambda)) }
// with the integral computed by adaptive midpoint refinement after the
// substitution t = sin(theta). The ratio of the two tends to 1.
std::pair<double, double> laplace_check(double lambda);

}  // namespace singmod
