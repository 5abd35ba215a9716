#pragma once

// Classical modular forms as exact q-expansions, Faber polynomials for the
// level-1 and level-2 (Fricke) hauptmoduln, Miller echelon bases, and Hecke
// operators on cusp spaces.

#include "singmod/qseries.hpp"

#include <string>
#include <vector>

namespace singmod {

// Registry of named forms emittable by the CLI and used across the library:
//   E2, E4, E6, E12     Eisenstein series (E12 with constant term 1)
//   Delta               discriminant, eta^24
//   j                   modular invariant E4^3/Delta
//   eta                 Dedekind eta (scale-24 expansion)
//   theta0, theta1      sum q^(r^2), sum (-1)^r q^(r^2)
//   j2                  (eta(tau)/eta(2tau))^24 + 24
//   j2star              j2 + 2^12 (eta(2tau)/eta(tau))^24 (Fricke hauptmodul)
//   E2level2            1 + 24 sum sigma_1^odd(n) q^n (weight-2 level-2)
//   g1                  -theta1 * E4(4tau)/eta(4tau)^6
//                       = -q^-1 + 2 + sum_{d>0} t1(d) q^d
QSeries build_form(const std::string& name, long order);
std::vector<std::string> registry_names();

// Truncates a series to a lower order (no-op when order >= s.order()).
QSeries truncate_to(QSeries s, long order);

// eta^p for p in {1,2,3,6,12,24} via the pentagonal/Jacobi sparse series.
QSeries eta_power(long p, long q_order);

// ---------------- Faber polynomials, level 1 ----------------

// j_m = q^-m + O(q), the unique monic-principal-part polynomial in j with
// vanishing constant term; j_0 = 1.
struct FaberPoly {
  long m;
  std::vector<Rational> coeffs_in_j;  // ascending powers of j
  QSeries expansion;
};
FaberPoly faber_level1(long m, long order);

// Evaluates the degree-m Faber polynomial at an exact j-value.
Rational faber_eval_at_j_value(long m, const Rational& j_value);

// ---------------- Faber polynomials, level 2 (Fricke) ----------------

// j*_{2,m} = q^-m + 0 + O(q) as a polynomial in j2star; expansion only.
QSeries faber_level2_fricke(long m, long order);

// ---------------- Miller bases and Hecke operators ----------------

long dim_Mk(long k);  // dim M_k(SL2(Z)), even k >= 0
long dim_Sk(long k);  // dim S_k(SL2(Z))

// Echelon basis f_i = q^i + O(q^dim), i = 0..dim-1, each to `order`.
std::vector<QSeries> miller_basis(long k, long order);
// Cusp subspace: f_i = q^i + O(q^(dim_S+1)), i = 1..dim_S.
std::vector<QSeries> miller_cusp_basis(long k, long order);

// Matrix of T_n on S_k in the Miller cusp basis: column i holds the
// coordinates of T_n f_{i+1}. Requires only k even >= 4, n >= 1.
std::vector<std::vector<Rational>> hecke_matrix(long k, long n);
Rational hecke_trace(long k, long n);

}  // namespace singmod
