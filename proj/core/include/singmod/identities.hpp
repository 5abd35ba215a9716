#pragma once

// Mechanical verification of the identity catalogue: Kaneko-type formulas
// for the coefficients of j and its level-2 analogue, the Hurwitz and
// Eichler--Selberg class-number relations, the partition/spt formula, the
// Bruinier--Kohnen--Ono divisor identity with its Borcherds-product and
// duality consequences, the valence formula on known forms, and two
// numeric cross-checks (shifted convolution L-value, cusp-expansion fit).

#include "singmod/qseries.hpp"
#include "singmod/rational.hpp"

#include <string>
#include <vector>

namespace singmod {

// One verified instance of an identity.
struct IdentityCheck {
  std::string label;              // e.g. "n=7" or "nu=5,n=12"
  Rational residual;              // exact residual; zero means equality
  double numeric_residual = 0.0;  // residual of a floating-point check
  bool exact = true;              // which residual field is meaningful
  bool pass = true;
};

// Outcome of one verification run.  `seconds` is wall time for the caller's
// benefit; serialization omits it so repeated runs are byte-identical.
struct IdentityReport {
  std::string id;
  std::string range;
  std::vector<IdentityCheck> checks;
  bool pass = true;
  double seconds = 0.0;

  std::string to_json() const;
  std::string to_text() const;  // one line: PASS/FAIL, id, range, summary
};

// sum_r t_2(4n - r^2) = 2n Coeff_{q^n}(j) for 1 <= n <= nmax.
IdentityReport verify_kaneko_m2(long nmax);

// sum_r t_0(4n - r^2) = sum_{d|n} max(d, n/d) for 1 <= n <= nmax, where
// t_0 is the Kronecker--Hurwitz class number with t_0(0) = -1/12.
IdentityReport verify_hurwitz(long nmax);

// Coeff_{q^n}(j) = (1/n) sum_r { t_1(n-r^2) - ((-1)^{n+r}/4) t_1(4n-r^2)
//                              + ((-1)^r/4) t_1(16n-r^2) }.
IdentityReport verify_kaneko_original(long nmax);

// 2n Coeff_{q^n}(j_2) = sum_r t*(4n-r^2) + 24 sigma_1^odd(n) for the
// level-2 starred traces, 1 <= n <= nmax; also checks the level-raising
// map of the unstarred table against 4 D(j_2) - 2 E_2^(2) up to 2 nmax.
IdentityReport verify_level2_kaneko(long nmax);

// sum_r p_{2nu}(r,n) t_0(4n-r^2) + sum_{d|n} min(d,n/d)^{2nu+1}
//   = -2 Tr(T_n | S_{2nu+2}) for 1 <= nu <= nu_max, 1 <= n <= nmax.
IdentityReport verify_es_trace(long nu_max, long nmax);

// Exact expansion of the weight-1/2 form with principal part q^{-3}:
// (1/12) (E_4/Delta)(4 tau) (6 E_6(4 tau) D theta_0 - (1/2)(D E_6)(4 tau)
// theta_0) - 88 theta_0.  Coefficients c_3(n) vanish off n = 0, 1 mod 4.
QSeries build_f3(long order);

// Fit of the nu = 5 bracket expansion of the t_1 family in the weight-12
// basis {E_12, Delta}: returns the two coefficients and the residual
// report of the fit at orders 2..50.
struct WeightTwelveFit {
  Rational e12_coeff;    // -2
  Rational delta_coeff;  // 164208/691
  IdentityReport report;
};
WeightTwelveFit decompose_F_g1_5();

// Truncated shifted convolution value Lhat(Delta, 1; 11) checked against
// 82104/691 = 24 - Gamma(11)/(4 pi)^11 * Lhat / ||Delta||^2 with the
// reference Petersson norm 0.0000010353; floating-point with a relative
// tolerance of 1e-2 at the given truncation length (>= 50).
IdentityReport shifted_L_numeric_check(long terms);

// Coeff_{q^n}(j) = (6/(5n)) sum_r (12|r) m_5(24n - r^2) built from the
// partition and smallest-parts counting functions.
IdentityReport verify_partition_formula(long nmax);

// D_{j_m}(div f) + 2k sigma_1(m) = -Coeff_{q^m}(Df/f) for
// fname in {"E4", "E6", "Delta"} and 1 <= m <= mmax, with the classical
// divisors div E4 = (1/3)[rho], div E6 = (1/2)[i], div Delta = 0.
IdentityReport verify_bko(const std::string& fname, long mmax);

// t_m(3) = sum_{n|m} n c_3(n^2) for 1 <= m <= mmax; m = 1, 2 against the
// exact tables, m >= 3 against rounded numeric traces.
IdentityReport verify_duality_d3(long mmax);

// q^{-1} prod_{n>=1} (1-q^n)^{3 c_3(n^2)} = j up to q^order (the cube of
// the discriminant -3 Borcherds product, using t_0(3) = 1/3).
IdentityReport verify_borcherds_d3(long order);

// k/12 - ord_infinity(f) equals the weighted zero count for E4, E6,
// Delta, and E4^2.
IdentityReport verify_valence_known_forms();

// Every verification at its default range, sorted by id.
std::vector<IdentityReport> run_all();

}  // namespace singmod
