#pragma once

// Gegenbauer polynomials, heat-operator coefficient expansions F_{phi,nu},
// the level-raising restriction G_phi, and the bootstrap solver that
// reconstructs Jacobi-form coefficients from their singular parts.

#include "singmod/qseries.hpp"
#include "singmod/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace singmod {

// a_{k,l}(r,n) = C(l/2+k-2, k-2) p_{k,l}(r,n), the coefficient of X^l in
// (1 - rX + nX^2)^-(k-1):
//   a_{k,l}(r,n) = sum_{0<=j<=l/2} (-1)^j C(l+k-2-j, l-2j) C(j+k-2, k-2) n^j r^(l-2j).
// Defined for k >= 2, l >= 0.
Rational gegenbauer_a(long k, long l, const Rational& r, const Rational& n);

// p_{k,l}(x, n) evaluated through x^2 = r2m (= r^2/m). Only even l admits an
// even-power expansion in x; odd l is an error. p_{k,0} = 1,
// p_{k,2} = (k/2)x^2 - n.
Rational gegenbauer_p(long k, long l, const Rational& r2m, const Rational& n);

// Expands (1 - rX + nX^2)^-(k-1) as a power series in X and compares every
// coefficient of X^l, l <= lmax, with the closed form a_{k,l}(r,n).
bool gegenbauer_generating_check(long k, long lmax, const Rational& r,
                                 const Rational& n);

// Coefficient table of a weight-2 Jacobi form of index m whose Fourier
// coefficients depend only on the discriminant d = r^2 - 4mn (stored with
// the sign convention c(4mn - r^2), so d > 0 is the holomorphic range).
// Inadmissible residues d mod 4m are hard zeros and never stored.
struct JacobiCoeffTable {
  long index = 1;                     // Jacobi index m
  std::map<long, Rational> singular;  // d <= 0: principal part and constant
  std::map<long, Rational> positive;  // 0 < d <= dmax
  long dmax = 0;                      // horizon: complete for 0 < d <= dmax

  // Most negative d carrying a stored singular value (0 if none).
  long d_floor() const;
  // True iff d = -r^2 (mod 4m) has a solution r.
  bool admissible(long d) const;
  // c(d): exact lookup; absent entries inside the horizon are zero;
  // d > dmax is an error naming the missing discriminant.
  Rational coeff(long d) const;

  std::string to_json() const;
};

// F_{phi,nu}(tau) = sum_n ( sum_r p_{2,2nu}(r^2/m, n) c(4mn - r^2) ) q^n,
// expanded for n_min <= n <= nmax where n_min is forced by the singular
// part. Errors if the table horizon is insufficient.
QSeries F_expansion(const JacobiCoeffTable& table, long nu, long nmax);

// G_phi(tau) = sum_n ( sum_r c*(4n - r^2) ) q^n on Gamma_0(m), where
//   c*(N) = #{mu mod 2m : N = -mu^2 (mod 4m)} * c(N).
// For prime index p the count equals 1 + kronecker(-N, p); for m = 1 it is
// 1 on admissible residues, so G_phi = F_{phi,0}. Index must be 1 or prime.
QSeries G_expansion(const JacobiCoeffTable& table, long nmax);

// Constant term of F_{phi,nu} determined by singular data alone:
//   sum_r p_{2,2nu}(r^2/m, 0) t(-r^2).
Rational constant_term_from_singular(long m,
                                     const std::map<long, Rational>& singular,
                                     long nu);

// Reconstructs the positive-discriminant coefficients of a weight-2 index-m
// Jacobi form from its singular part, using that F_{phi,nu} must land in
// M_{2+2nu}(SL2(Z)) for each nu in nuset ({0} for weight 2, C*E4 for 4,
// C*E6 for 6). Solves one square linear system per n; m in {1,2} with
// nuset {0,1} resp. {0,1,2}. Errors: non-holomorphic singular data, a
// constant term inconsistent with M_2 = {0}, or a singular step system.
JacobiCoeffTable bootstrap(long m, const std::map<long, Rational>& singular,
                           const std::vector<long>& nuset, long dmax);

// Determinant of the n-th bootstrap step matrix (invariant: identically 2
// for index 1; nonzero for index 2 over every tested range).
Rational bootstrap_step_determinant(long m, const std::vector<long>& nuset,
                                    long n);

// ---- test-only utilities (certify the closed form; unused by the
// pipeline) ----

// S_{j,k,l}(r,n) = (-1)^j C(l+k-2-j, l-2j) C(j+k-2, k-2) n^j r^(l-2j),
// zero outside 0 <= j <= l/2 or k < 2. Satisfies, for l >= 1,
//   S_{j,k,l} - r S_{j,k,l-1} + n S_{j-1,k,l-2} = S_{j,k-1,l}.
Rational gegenbauer_S(long j, long k, long l, const Rational& r,
                      const Rational& n);

// Generalized family p_{k,l,h} from the heat-operator Taylor expansion
// (h >= 0, l even, evaluated through x^2 = r2m); p_{k,l,0} = p_{k,l} and
//   p_{k,l+2,h} = -n p_{k,l,h} + (r2m/4)(1 + (2l+2k-1)/(2h+1)) p_{k,l,h+1}.
Rational gegenbauer_p_h(long k, long l, long h, const Rational& r2m,
                        const Rational& n);

}  // namespace singmod
