#pragma once

// Trace tables for singular moduli: exact constructions (coefficients of a
// weight-3/2 form, a Hecke-style relation, the index-2 Jacobi bootstrap)
// and an independent high-precision numeric route summing the evaluated
// Faber function over Heegner points, with cross-route reconciliation.

#include "singmod/bigfloat.hpp"
#include "singmod/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace singmod {

enum class Provenance { closed_form, bootstrap, hecke_relation, numeric };

std::string provenance_name(Provenance p);

// Values t(d) of one trace family, indexed by d = -discriminant, d <= dmax.
// Absent d inside the horizon are hard zeros (inadmissible residues or
// vanishing singular values); asking beyond the horizon is an error.
struct TraceTable {
  int level = 1;         // 1 or 2
  bool starred = false;  // Fricke-quotient normalization (level 2 only)
  long m = 1;            // Faber index of the evaluated function
  long dmax = 0;
  std::map<long, Rational> entries;  // includes singular d <= 0 entries
  Provenance provenance = Provenance::closed_form;

  Rational value(long d) const;  // 0 when absent and d <= dmax
  bool has(long d) const;
  std::string to_json() const;
  std::string to_csv() const;
};

// d with nonempty form families: d ≡ 0, 3 (mod 4) at level 1;
// d ≡ 0, 4 (mod 8) or d ≡ 7 (mod 8) at level 2.
bool trace_admissible(int level, long d);

// t_1(d) at level 1: coefficients of the weight-3/2 form g_1, including
// the singular values t_1(0) = 2 and t_1(-1) = -1 read off the same
// expansion.
TraceTable t1_closed_form(long dmax);

// t_2(d) = t_1(4d) + (-d|2) t_1(d) + 2 t_1(d/4), the last term present
// only when 4 | d; valid on admissible d and on the singular entries
// d = 0, -1, -4.  Requires t1.dmax >= 4 dmax.
TraceTable t2_via_hecke(const TraceTable& t1, long dmax);

// The level-2 trace family of the index-m Fricke--Faber function, from the
// index-2 Jacobi bootstrap seeded with the singular values
//   t(0)        = 2 sum_n (sigma_1(n) + 2 sigma_1(n/2)) a_{-n},
//   t(-kappa^2) = -2^{omega(gcd(2, kappa))} kappa sum_{kappa | n} a_{-n},
// where a_{-n} are the principal-part coefficients of the function.
// starred = true rescales entrywise by 2^{-omega(gcd(2, d))}.
TraceTable t_level2_bootstrap(long m, long dmax, bool starred);

// One Heegner-point sum evaluated term by term.  The working precision is
// precision_bits plus a magnitude margin for the principal part.
struct NumericTrace {
  BigFloat value;
  BigFloat bound;  // truncation bound: sum of weighted series tails
};
NumericTrace numeric_trace(int level, bool starred, long m, long d,
                           long precision_bits);

// numeric_trace rounded to the nearest integer; errors unless both the
// truncation bound and the distance to that integer are below 1e-6.
Rational numeric_trace_value(int level, bool starred, long m, long d,
                             long precision_bits);

// All admissible 0 < d <= dmax evaluated numerically and rounded.
TraceTable numeric_trace_table(int level, bool starred, long m, long dmax,
                               long precision_bits);

// Exact agreement of same-family tables on overlapping horizons, plus the
// relation t*(d) = 2^{-omega(gcd(2, d))} t(d) between level-2 starred and
// unstarred tables of equal index.
struct TraceReconcile {
  bool ok = true;
  std::string detail;  // first offending (level, starred, m, d) when !ok
};
TraceReconcile reconcile(const std::vector<TraceTable>& tables);

}  // namespace singmod
