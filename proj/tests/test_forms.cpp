#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "singmod/arith.hpp"
#include "singmod/forms.hpp"

#include <map>
#include <string>
#include <vector>

using namespace singmod;

namespace {

// Compare the integer-exponent coefficients of s against a frozen window.
void check_coeffs(const QSeries& s, long from,
                  const std::vector<Rational>& expected) {
  for (size_t i = 0; i < expected.size(); ++i) {
    INFO("exponent ", from + static_cast<long>(i));
    CHECK(s.coeff_q(from + static_cast<long>(i)) == expected[i]);
  }
}

}  // namespace

TEST_CASE("Eisenstein series match divisor sums") {
  QSeries e4 = build_form("E4", 8);
  QSeries e6 = build_form("E6", 8);
  QSeries e2 = build_form("E2", 8);
  CHECK(e4.coeff_q(0) == 1);
  CHECK(e6.coeff_q(0) == 1);
  CHECK(e2.coeff_q(0) == 1);
  for (long n = 1; n < 8; ++n) {
    CHECK(e4.coeff_q(n) == Rational(240) * Rational(sigma(3, n)));
    CHECK(e6.coeff_q(n) == Rational(-504) * Rational(sigma(5, n)));
    CHECK(e2.coeff_q(n) == Rational(-24) * Rational(sigma(1, n)));
  }
  check_coeffs(e4, 0, {Rational(1), Rational(240), Rational(2160), Rational(6720)});
  check_coeffs(e6, 0, {Rational(1), Rational(-504), Rational(-16632), Rational(-122976)});

  QSeries e12 = build_form("E12", 4);
  CHECK(e12.coeff_q(0) == 1);
  CHECK(e12.coeff_q(1) == make_fraction(65520, 691));
  CHECK(e12.coeff_q(2) == make_fraction(65520, 691) * Rational(sigma(11, 2)));

  QSeries e2l2 = build_form("E2level2", 8);
  CHECK(e2l2.coeff_q(0) == 1);
  for (long n = 1; n < 8; ++n)
    CHECK(e2l2.coeff_q(n) == Rational(24) * Rational(sigma_odd(1, n)));
}

TEST_CASE("discriminant, j, and their product relations") {
  QSeries delta = build_form("Delta", 8);
  check_coeffs(delta, 1,
               {Rational(1), Rational(-24), Rational(252), Rational(-1472),
                Rational(4830), Rational(-6048)});

  QSeries j = build_form("j", 4);
  check_coeffs(j, -1,
               {Rational(1), Rational(744), Rational(196884),
                Rational(21493760), Rational("864299970")});

  QSeries inv_delta = series_inv(build_form("Delta", 6), 3);
  check_coeffs(inv_delta, -1,
               {Rational(1), Rational(24), Rational(324), Rational(3200)});

  // E4^3 - E6^2 = 1728 Delta and j * Delta = E4^3, checked to order 18.
  long N = 20;
  QSeries e4 = build_form("E4", N), e6 = build_form("E6", N);
  QSeries e43 = series_mul(series_mul(e4, e4), e4);
  QSeries lhs = e43 - series_mul(e6, e6);
  QSeries rhs = series_mul(QSeries::constant(Rational(1728), N), build_form("Delta", N));
  for (long n = 0; n < 18; ++n) CHECK(lhs.coeff_q(n) == rhs.coeff_q(n));
  QSeries jd = series_mul(build_form("j", N), build_form("Delta", N + 2));
  for (long n = 0; n < 18; ++n) CHECK(jd.coeff_q(n) == e43.coeff_q(n));
}

TEST_CASE("eta powers: sparse expansions and consistency") {
  // eta = q^(1/24) prod (1-q^n): exponents (6k+1)^2 on the scale-24 lattice.
  QSeries eta = build_form("eta", 10);
  CHECK(eta.scale() == 24);
  // q^(1/24) (1 - q - q^2 + q^5 + q^7 - ...): sign (-1)^k at (6k+1)^2 / 24.
  CHECK(eta.coeff_q(make_fraction(1, 24)) == 1);     // k = 0
  CHECK(eta.coeff_q(make_fraction(25, 24)) == -1);   // k = -1
  CHECK(eta.coeff_q(make_fraction(49, 24)) == -1);   // k = 1
  CHECK(eta.coeff_q(make_fraction(121, 24)) == 1);   // k = -2
  CHECK(eta.coeff_q(make_fraction(169, 24)) == 1);   // k = 2
  CHECK(eta.coeff_q(make_fraction(2, 24)) == 0);

  // eta^3 = q^(1/8) sum (-1)^n (2n+1) q^(n(n+1)/2).
  QSeries eta3 = eta_power(3, 10);
  CHECK(eta3.coeff_q(make_fraction(1, 8)) == 1);
  CHECK(eta3.coeff_q(make_fraction(9, 8)) == -3);
  CHECK(eta3.coeff_q(make_fraction(25, 8)) == 5);
  CHECK(eta3.coeff_q(make_fraction(49, 8)) == -7);

  // Each power agrees with the square of the half power, compared on the
  // common scale-24 lattice below q^9.
  for (long p : {2L, 6L, 12L, 24L}) {
    QSeries half = eta_power(p / 2, 12);
    QSeries whole = eta_power(p, 10);
    QSeries sq = series_mul(half, half);
    for (long n24 = p; n24 < 24 * 9; ++n24) {
      Rational x = make_fraction(n24, 24);
      CHECK(whole.coeff_q(x) == sq.coeff_q(x));
    }
  }

  // eta^24 is Delta on the integer lattice.
  QSeries e24 = eta_power(24, 8);
  QSeries delta = build_form("Delta", 8);
  for (long n = 1; n < 8; ++n) CHECK(e24.coeff_q(n) == delta.coeff_q(n));
}

TEST_CASE("theta series") {
  QSeries t0 = build_form("theta0", 18);
  QSeries t1 = build_form("theta1", 18);
  std::map<long, Rational> exp0, exp1;
  exp0[0] = 1;
  exp1[0] = 1;
  for (long r = 1; r * r < 18; ++r) {
    exp0[r * r] = 2;
    exp1[r * r] = (r % 2 == 0) ? 2 : -2;
  }
  for (long n = 0; n < 18; ++n) {
    Rational w0 = exp0.count(n) ? exp0[n] : Rational(0);
    Rational w1 = exp1.count(n) ? exp1[n] : Rational(0);
    CHECK(t0.coeff_q(n) == w0);
    CHECK(t1.coeff_q(n) == w1);
  }
}

TEST_CASE("level-2 hauptmoduln") {
  QSeries j2 = build_form("j2", 6);
  check_coeffs(j2, -1,
               {Rational(1), Rational(0), Rational(276), Rational(-2048),
                Rational(11202), Rational(-49152), Rational(184024)});

  QSeries j2s = build_form("j2star", 5);
  check_coeffs(j2s, -1,
               {Rational(1), Rational(0), Rational(4372), Rational(96256),
                Rational("1240002"), Rational("10698752")});

  // j2star = j2 + 4096 * (Delta(2tau)/Delta(tau)) termwise.
  long N = 12;
  QSeries d1 = build_form("Delta", N + 4);
  QSeries d2 = rescale(build_form("Delta", (N + 4) / 2 + 2), Rational(2));
  QSeries ratio = series_div(d2, d1);
  QSeries recon = build_form("j2", N) + series_mul(QSeries::constant(Rational(4096), N), ratio);
  QSeries j2s_long = build_form("j2star", N);
  for (long n = -1; n < 10; ++n) CHECK(recon.coeff_q(n) == j2s_long.coeff_q(n));
}

TEST_CASE("g1: weight 3/2 trace generating form") {
  QSeries g1 = build_form("g1", 10);
  CHECK(g1.coeff_q(-1) == -1);
  CHECK(g1.coeff_q(0) == 2);
  CHECK(g1.coeff_q(1) == 0);
  CHECK(g1.coeff_q(2) == 0);
  CHECK(g1.coeff_q(3) == -248);
  CHECK(g1.coeff_q(4) == 492);
  CHECK(g1.coeff_q(5) == 0);
  CHECK(g1.coeff_q(6) == 0);
  CHECK(g1.coeff_q(7) == -4119);
  CHECK(g1.coeff_q(8) == 7256);
  // Coefficients vanish off d ≡ 0, 3 (mod 4).
  for (long d = 1; d < 10; ++d)
    if (d % 4 == 1 || d % 4 == 2) CHECK(g1.coeff_q(d) == 0);
}

TEST_CASE("Faber polynomials in j") {
  for (long m = 1; m <= 8; ++m) {
    FaberPoly f = faber_level1(m, 6);
    CHECK(static_cast<long>(f.coeffs_in_j.size()) == m + 1);
    CHECK(f.coeffs_in_j[m] == 1);  // monic
    CHECK(f.expansion.coeff_q(-m) == 1);
    for (long e = -m + 1; e <= 0; ++e) CHECK(f.expansion.coeff_q(e) == 0);
  }
  // j_1 = j - 744.
  FaberPoly f1 = faber_level1(1, 4);
  CHECK(f1.coeffs_in_j[0] == -744);
  CHECK(f1.expansion.coeff_q(1) == 196884);
  // j_2 = j^2 - 1488 j + 159768.
  FaberPoly f2 = faber_level1(2, 4);
  CHECK(f2.coeffs_in_j[1] == -1488);
  CHECK(f2.coeffs_in_j[0] == 159768);
  CHECK(f2.expansion.coeff_q(1) == 42987520);

  // Polynomial evaluation matches the coefficient route.
  CHECK(faber_eval_at_j_value(1, Rational(0)) == -744);
  CHECK(faber_eval_at_j_value(1, Rational(1728)) == 1728 - 744);
  CHECK(faber_eval_at_j_value(2, Rational(0)) == 159768);
  CHECK(faber_eval_at_j_value(3, Rational(0)) == -36866976);
}

TEST_CASE("Fricke Faber expansions") {
  // j*_{2,m} = q^-m + 0 + O(q); first few from the square/cube of j2star.
  QSeries f1 = faber_level2_fricke(1, 4);
  check_coeffs(f1, -1, {Rational(1), Rational(0), Rational(4372), Rational(96256)});

  QSeries f2 = faber_level2_fricke(2, 4);
  CHECK(f2.coeff_q(-2) == 1);
  CHECK(f2.coeff_q(-1) == 0);
  CHECK(f2.coeff_q(0) == 0);
  // (j2star)^2 = q^-2 + 2*4372 + 2*96256 q + ...; killing the constant gives
  // coefficient 2*96256 at q.
  CHECK(f2.coeff_q(1) == 2 * 96256);

  QSeries f3 = faber_level2_fricke(3, 4);
  CHECK(f3.coeff_q(-3) == 1);
  for (long e = -2; e <= 0; ++e) CHECK(f3.coeff_q(e) == 0);
}

TEST_CASE("dimensions of level-1 spaces") {
  CHECK(dim_Mk(0) == 1);
  CHECK(dim_Mk(2) == 0);
  CHECK(dim_Mk(4) == 1);
  CHECK(dim_Mk(6) == 1);
  CHECK(dim_Mk(8) == 1);
  CHECK(dim_Mk(10) == 1);
  CHECK(dim_Mk(12) == 2);
  CHECK(dim_Mk(14) == 1);
  CHECK(dim_Mk(16) == 2);
  CHECK(dim_Mk(24) == 3);
  CHECK(dim_Mk(26) == 2);
  CHECK(dim_Sk(12) == 1);
  CHECK(dim_Sk(16) == 1);
  CHECK(dim_Sk(22) == 1);
  CHECK(dim_Sk(24) == 2);
  CHECK(dim_Sk(26) == 1);
  CHECK(dim_Sk(10) == 0);
}

TEST_CASE("Miller bases are echelon") {
  for (long k : {4L, 12L, 16L, 24L, 28L, 36L}) {
    long d = dim_Mk(k);
    auto basis = miller_basis(k, d + 6);
    REQUIRE(static_cast<long>(basis.size()) == d);
    for (long i = 0; i < d; ++i)
      for (long e = 0; e < d; ++e)
        CHECK(basis[i].coeff_q(e) == ((e == i) ? Rational(1) : Rational(0)));
    auto cusp = miller_cusp_basis(k, d + 6);
    long ds = dim_Sk(k);
    REQUIRE(static_cast<long>(cusp.size()) == ds);
    for (long i = 0; i < ds; ++i)
      for (long e = 0; e <= ds; ++e)
        CHECK(cusp[i].coeff_q(e) == ((e == i + 1) ? Rational(1) : Rational(0)));
  }
}

TEST_CASE("Hecke traces on cusp spaces") {
  // S_12 is spanned by Delta: trace of T_n is tau(n).
  QSeries delta = build_form("Delta", 12);
  for (long n = 1; n <= 10; ++n) {
    INFO("n = ", n);
    CHECK(hecke_trace(12, n) == delta.coeff_q(n));
  }
  CHECK(hecke_trace(12, 2) == -24);
  CHECK(hecke_trace(16, 2) == 216);
  CHECK(hecke_trace(18, 2) == -528);
  CHECK(hecke_trace(20, 2) == 456);
  CHECK(hecke_trace(22, 2) == -288);
  // dim S_24 = 2, so T_1 has trace 2.
  CHECK(hecke_trace(24, 1) == 2);
  CHECK(dim_Sk(24) == 2);

  // Coprime composition and commutation: T_2 T_3 = T_6 = T_3 T_2.
  for (long k : {12L, 16L, 18L, 20L, 22L, 24L, 26L, 28L}) {
    auto t2 = hecke_matrix(k, 2);
    auto t3 = hecke_matrix(k, 3);
    auto t6 = hecke_matrix(k, 6);
    long s = static_cast<long>(t2.size());
    auto mul = [s](const std::vector<std::vector<Rational>>& A,
                   const std::vector<std::vector<Rational>>& B) {
      std::vector<std::vector<Rational>> C(s, std::vector<Rational>(s, Rational(0)));
      for (long i = 0; i < s; ++i)
        for (long l = 0; l < s; ++l)
          for (long j = 0; j < s; ++j) C[i][j] += A[i][l] * B[l][j];
      return C;
    };
    CHECK(mul(t2, t3) == t6);
    CHECK(mul(t3, t2) == t6);
  }

  // T_4 = T_2^2 - 2^(k-1) on S_k.
  for (long k : {12L, 24L}) {
    auto t2 = hecke_matrix(k, 2);
    auto t4 = hecke_matrix(k, 4);
    long s = static_cast<long>(t2.size());
    Rational pk = pow_rational(Rational(2), k - 1);
    for (long i = 0; i < s; ++i)
      for (long j = 0; j < s; ++j) {
        Rational acc(0);
        for (long l = 0; l < s; ++l) acc += t2[i][l] * t2[l][j];
        if (i == j) acc -= pk;
        CHECK(acc == t4[i][j]);
      }
  }
}
