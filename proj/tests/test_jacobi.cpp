#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "singmod/arith.hpp"
#include "singmod/forms.hpp"
#include "singmod/jacobi.hpp"

#include <map>
#include <string>
#include <vector>

using namespace singmod;

namespace {

const std::map<long, Rational> kSingularT1 = {{0, Rational(2)},
                                              {-1, Rational(-1)}};
const std::map<long, Rational> kSingularLevel2M2 = {
    {0, Rational(10)}, {-1, Rational(-1)}, {-4, Rational(-4)}};

}  // namespace

TEST_CASE("Gegenbauer evaluations match the printed polynomials") {
  std::vector<std::pair<Rational, Rational>> args = {
      {Rational(0), Rational(1)},
      {Rational(1), Rational(3)},
      {make_fraction(9, 2), Rational(-2)},
      {make_fraction(7, 3), make_fraction(-5, 4)}};

  for (long k = 2; k <= 8; ++k) {
    for (const auto& [x2, n] : args) {
      CHECK(gegenbauer_p(k, 0, x2, n) == 1);
      // p_{k,2} = (k/2) x^2 - n
      CHECK(gegenbauer_p(k, 2, x2, n) == make_fraction(k, 2) * x2 - n);
      // p_{k,4} = (k+1)(k+2)/12 x^4 - (k+1) n x^2 + n^2
      Rational expect4 = make_fraction((k + 1) * (k + 2), 12) * x2 * x2 -
                         Rational(k + 1) * n * x2 + n * n;
      CHECK(gegenbauer_p(k, 4, x2, n) == expect4);
    }
  }
  // p_{2,10} = x^10 - 9n x^8 + 28n^2 x^6 - 35n^3 x^4 + 15n^4 x^2 - n^5
  for (const auto& [x2, n] : args) {
    Rational expect = pow_rational(x2, 5) - Rational(9) * n * pow_rational(x2, 4) +
                      Rational(28) * n * n * pow_rational(x2, 3) -
                      Rational(35) * pow_rational(n, 3) * x2 * x2 +
                      Rational(15) * pow_rational(n, 4) * x2 -
                      pow_rational(n, 5);
    CHECK(gegenbauer_p(2, 10, x2, n) == expect);
  }
  CHECK_THROWS(gegenbauer_p(2, 3, Rational(1), Rational(1)));
  CHECK_THROWS(gegenbauer_p(1, 2, Rational(1), Rational(1)));

  // a_{3,2} = 3r^2 - 2n, and a_{k,l} = C(l/2+k-2, k-2) p_{k,l}.
  Rational r(2), n(5);
  CHECK(gegenbauer_a(3, 2, r, n) == Rational(3) * r * r - Rational(2) * n);
  CHECK(gegenbauer_a(3, 2, r, n) ==
        Rational(binomial(2, 1)) * gegenbauer_p(3, 2, r * r, n));
}

TEST_CASE("generating function of the Gegenbauer family") {
  // k=2, r=1, n=0: geometric series, all coefficients 1.
  for (long l = 0; l <= 12; ++l)
    CHECK(gegenbauer_a(2, l, Rational(1), Rational(0)) == 1);
  for (long k = 2; k <= 6; ++k) {
    CHECK(gegenbauer_generating_check(k, 12, Rational(1), Rational(0)));
    CHECK(gegenbauer_generating_check(k, 12, Rational(2), Rational(3)));
    CHECK(gegenbauer_generating_check(k, 12, make_fraction(-1, 2),
                                      make_fraction(5, 3)));
    CHECK(gegenbauer_generating_check(k, 12, Rational(-3), Rational(-7)));
  }
}

TEST_CASE("S-monomial and a-coefficient recurrences") {
  std::vector<std::pair<Rational, Rational>> args = {
      {Rational(2), Rational(5)},
      {make_fraction(-3, 2), make_fraction(7, 5)},
      {Rational(1), Rational(-1)}};
  for (const auto& [r, n] : args) {
    // S_{j,k,l} - r S_{j,k,l-1} + n S_{j-1,k,l-2} = S_{j,k-1,l}, k >= 3.
    for (long k = 3; k <= 6; ++k)
      for (long l = 1; l <= 12; ++l)
        for (long j = 0; j <= l / 2 + 1; ++j) {
          Rational lhs = gegenbauer_S(j, k, l, r, n) -
                         r * gegenbauer_S(j, k, l - 1, r, n) +
                         n * gegenbauer_S(j - 1, k, l - 2, r, n);
          CHECK(lhs == gegenbauer_S(j, k - 1, l, r, n));
        }
    // Summed form a_{k,l} - r a_{k,l-1} + n a_{k,l-2} = a_{k-1,l}, k >= 3.
    for (long k = 3; k <= 6; ++k)
      for (long l = 2; l <= 12; ++l) {
        Rational lhs = gegenbauer_a(k, l, r, n) -
                       r * gegenbauer_a(k, l - 1, r, n) +
                       n * gegenbauer_a(k, l - 2, r, n);
        CHECK(lhs == gegenbauer_a(k - 1, l, r, n));
      }
    // k = 2: the geometric-level coefficients satisfy the same recurrence
    // against (1 - rX + nX^2)^0 = 1.
    CHECK(gegenbauer_a(2, 1, r, n) - r * gegenbauer_a(2, 0, r, n) == 0);
    for (long l = 2; l <= 12; ++l) {
      Rational lhs = gegenbauer_a(2, l, r, n) -
                     r * gegenbauer_a(2, l - 1, r, n) +
                     n * gegenbauer_a(2, l - 2, r, n);
      CHECK(lhs == 0);
    }
  }
}

TEST_CASE("generalized family p_{k,l,h} degenerates and recurses") {
  std::vector<std::pair<Rational, Rational>> args = {
      {Rational(1), Rational(2)},
      {make_fraction(9, 2), make_fraction(-2, 3)},
      {make_fraction(1, 4), Rational(6)}};
  for (const auto& [x2, n] : args) {
    for (long k = 2; k <= 5; ++k)
      for (long l = 0; l <= 8; l += 2) {
        CHECK(gegenbauer_p_h(k, l, 0, x2, n) == gegenbauer_p(k, l, x2, n));
        // p_{k,l+2,h} = -n p_{k,l,h} + (x^2/4)(1 + (2l+2k-1)/(2h+1)) p_{k,l,h+1}
        for (long h = 0; h <= 4; ++h) {
          Rational factor = x2 / Rational(4) *
                            (Rational(1) + make_fraction(2 * l + 2 * k - 1,
                                                         2 * h + 1));
          Rational rhs = -n * gegenbauer_p_h(k, l, h, x2, n) +
                         factor * gegenbauer_p_h(k, l, h + 1, x2, n);
          CHECK(gegenbauer_p_h(k, l + 2, h, x2, n) == rhs);
        }
      }
  }
  // Hand value: p_{2,2,1}(x, n) = x^2/2 - n.
  CHECK(gegenbauer_p_h(2, 2, 1, Rational(3), Rational(5)) ==
        make_fraction(3, 2) - Rational(5));
}

TEST_CASE("coefficient table lookups, admissibility, serialization") {
  JacobiCoeffTable t;
  t.index = 1;
  t.singular = kSingularT1;
  t.positive = {{3, Rational(-248)}, {4, Rational(492)}};
  t.dmax = 4;

  CHECK(t.d_floor() == -1);
  CHECK(t.coeff(0) == 2);
  CHECK(t.coeff(-1) == -1);
  CHECK(t.coeff(-9) == 0);  // below the stored singular part: exact zero
  CHECK(t.coeff(3) == -248);
  CHECK(t.coeff(1) == 0);  // hard zero inside the horizon
  CHECK_THROWS_WITH_AS(t.coeff(5), doctest::Contains("d = 5"), error);

  CHECK(t.admissible(0));
  CHECK(t.admissible(3));
  CHECK(t.admissible(4));
  CHECK_FALSE(t.admissible(1));
  CHECK_FALSE(t.admissible(2));

  JacobiCoeffTable t2;
  t2.index = 2;
  CHECK(t2.admissible(0));
  CHECK(t2.admissible(4));
  CHECK(t2.admissible(7));
  CHECK(t2.admissible(8));
  CHECK_FALSE(t2.admissible(1));
  CHECK_FALSE(t2.admissible(2));
  CHECK_FALSE(t2.admissible(3));
  CHECK_FALSE(t2.admissible(5));
  CHECK_FALSE(t2.admissible(6));

  JacobiCoeffTable small;
  small.index = 1;
  small.singular = {{0, Rational(2)}, {-1, Rational(-1)}};
  small.positive = {{3, make_fraction(-1, 2)}};
  small.dmax = 4;
  CHECK(small.to_json() ==
        "{\"index\":1,\"singular\":{\"-1\":\"-1\",\"0\":\"2\"},"
        "\"positive\":{\"3\":\"-1/2\"},\"dmax\":4}");
}

TEST_CASE("constant terms from singular data") {
  CHECK(constant_term_from_singular(1, kSingularT1, 0) == 0);
  CHECK(constant_term_from_singular(1, kSingularT1, 1) == -2);
  CHECK(constant_term_from_singular(2, kSingularT1, 0) == 0);
  CHECK(constant_term_from_singular(2, kSingularT1, 1) == -1);
  CHECK(constant_term_from_singular(2, kSingularT1, 2) == make_fraction(-1, 2));
  CHECK(constant_term_from_singular(2, kSingularLevel2M2, 0) == 0);
  CHECK(constant_term_from_singular(2, kSingularLevel2M2, 1) == -17);
  CHECK(constant_term_from_singular(2, kSingularLevel2M2, 2) ==
        make_fraction(-65, 2));
}

TEST_CASE("bootstrap reproduces the closed-form index-1 coefficients") {
  JacobiCoeffTable t1 = bootstrap(1, kSingularT1, {0, 1}, 2000);
  CHECK(t1.dmax >= 2000);
  CHECK(t1.coeff(3) == -248);
  CHECK(t1.coeff(4) == 492);
  CHECK(t1.coeff(7) == -4119);
  CHECK(t1.coeff(8) == 7256);

  QSeries g1 = build_form("g1", 2001);
  for (long d = 1; d <= 2000; ++d) {
    INFO("d = ", d);
    CHECK(t1.coeff(d) == g1.coeff_q(d));
  }
}

TEST_CASE("bootstrap reproduces the printed level-2 values") {
  JacobiCoeffTable m1 = bootstrap(2, kSingularT1, {0, 1, 2}, 16);
  CHECK(m1.coeff(4) == -52);
  CHECK(m1.coeff(7) == -23);
  CHECK(m1.coeff(8) == 152);
  CHECK(m1.coeff(12) == -496);

  JacobiCoeffTable m2 = bootstrap(2, kSingularLevel2M2, {0, 1, 2}, 8);
  CHECK(m2.coeff(-4) == -4);
  CHECK(m2.coeff(-1) == -1);
  CHECK(m2.coeff(0) == 10);
  CHECK(m2.coeff(4) == 1036);
  CHECK(m2.coeff(7) == -8215);
  CHECK(m2.coeff(8) == 14360);
}

TEST_CASE("bootstrap step systems stay invertible") {
  CHECK(bootstrap_step_determinant(2, {0, 1, 2}, 1) == 6);
  for (long n = 1; n <= 500; ++n) {
    INFO("n = ", n);
    CHECK(bootstrap_step_determinant(1, {0, 1}, n) == 2);
    CHECK(bootstrap_step_determinant(2, {0, 1, 2}, n) != 0);
  }
}

TEST_CASE("bootstrap rejects inapplicable inputs") {
  // Singular part of the index-1 form with a q^-1 pole in F_0
  // (t(-4) = -2 contributes -2 q^-1): not holomorphic at infinity.
  std::map<long, Rational> g2sing = {
      {0, Rational(6)}, {-1, Rational(-1)}, {-4, Rational(-2)}};
  CHECK_THROWS_WITH_AS(bootstrap(1, g2sing, {0, 1}, 8),
                       doctest::Contains("not holomorphic"), error);
  // Constant term of the weight-2 specialization must vanish.
  std::map<long, Rational> bad0 = {{0, Rational(1)}};
  CHECK_THROWS_WITH_AS(bootstrap(1, bad0, {0, 1}, 8),
                       doctest::Contains("constant term"), error);
  // Wrong system shapes and unsupported targets.
  CHECK_THROWS(bootstrap(1, kSingularT1, {0, 1, 2}, 8));
  CHECK_THROWS(bootstrap(2, kSingularT1, {0, 1}, 8));
  CHECK_THROWS(bootstrap(2, kSingularT1, {0, 1, 3}, 8));
  CHECK_THROWS(bootstrap(3, kSingularT1, {0, 1}, 8));
}

TEST_CASE("F-expansions of the index-1 trace form") {
  JacobiCoeffTable t1 = bootstrap(1, kSingularT1, {0, 1}, 820);

  // nu = 0: identically zero through n = 200.
  QSeries f0 = F_expansion(t1, 0, 200);
  for (long n = 0; n <= 200; ++n) CHECK(f0.coeff_q(n) == 0);

  // nu = 1: -2 E4 through order 200.
  QSeries f1 = F_expansion(t1, 1, 200);
  QSeries e4 = build_form("E4", 201);
  for (long n = 0; n <= 200; ++n) {
    INFO("n = ", n);
    CHECK(f1.coeff_q(n) == Rational(-2) * e4.coeff_q(n));
  }

  // nu = 5: -2 + 48q - 394272q^2 + ...
  QSeries f5 = F_expansion(t1, 5, 10);
  CHECK(f5.coeff_q(0) == -2);
  CHECK(f5.coeff_q(1) == 48);
  CHECK(f5.coeff_q(2) == -394272);

  // Insufficient horizon is reported with the missing discriminant.
  JacobiCoeffTable shallow = bootstrap(1, kSingularT1, {0, 1}, 40);
  CHECK_THROWS_WITH_AS(F_expansion(shallow, 0, 11), doctest::Contains("44"),
                       error);
}

TEST_CASE("level-2 recurrences via F-expansions") {
  JacobiCoeffTable m1 = bootstrap(2, kSingularT1, {0, 1, 2}, 820);

  // nu = 0: sum_r t(8n - r^2) = 0 for all n <= 100.
  QSeries f0 = F_expansion(m1, 0, 100);
  for (long n = 0; n <= 100; ++n) CHECK(f0.coeff_q(n) == 0);

  // nu = 1: sum_r (r^2 - 2n) t(8n - r^2) = -480 sigma_3(n); with the
  // 1/2-normalization of p_{2,2}(r^2/2, n) this is F_1 = -E4.
  QSeries f1 = F_expansion(m1, 1, 100);
  QSeries e4 = build_form("E4", 101);
  for (long n = 0; n <= 100; ++n) {
    INFO("n = ", n);
    CHECK(f1.coeff_q(n) == -e4.coeff_q(n));
    if (n >= 1)
      CHECK(Rational(2) * f1.coeff_q(n) ==
            Rational(-480) * Rational(sigma(3, n)));
  }

  // nu = 2: sum_r (r^4 - 6nr^2 + 4n^2) t(8n - r^2) = 1008 sigma_5(n);
  // equivalently F_2 = -E6/2.
  QSeries f2 = F_expansion(m1, 2, 100);
  QSeries e6 = build_form("E6", 101);
  for (long n = 0; n <= 100; ++n) {
    INFO("n = ", n);
    CHECK(f2.coeff_q(n) == make_fraction(-1, 2) * e6.coeff_q(n));
    if (n >= 1)
      CHECK(Rational(4) * f2.coeff_q(n) ==
            Rational(1008) * Rational(sigma(5, n)));
  }
}

TEST_CASE("G-expansion of the level-2 index-2 table") {
  JacobiCoeffTable m2 = bootstrap(2, kSingularLevel2M2, {0, 1, 2}, 408);
  QSeries g = G_expansion(m2, 100);

  // Principal part -4q^-1 - 2.
  CHECK(g.coeff_q(-1) == -4);
  CHECK(g.coeff_q(0) == -2);
  CHECK(g.coeff_q(1) == 1056);

  // G equals 4 D(j2) - 2 E2 on Gamma_0(2) through order 100.
  QSeries j2 = build_form("j2", 101);
  QSeries rhs = Rational(4) * q_derivative(j2) -
                Rational(2) * build_form("E2level2", 101);
  for (long n = -1; n <= 100; ++n) {
    INFO("n = ", n);
    CHECK(g.coeff_q(n) == rhs.coeff_q(n));
  }

  // The mu-count weighting agrees with 1 + kronecker(-N, 2) on the support.
  for (long n = -1; n <= 30; ++n) {
    Rational manual(0);
    for (long r = -40; r <= 40; ++r) {
      long N = 4 * n - r * r;
      if (N < -4) continue;
      manual += Rational(1 + kronecker(-N, 2)) * m2.coeff(N);
    }
    CHECK(manual == g.coeff_q(n));
  }
}

TEST_CASE("index-1 degeneration of the G-expansion") {
  // On any index-1 table supported on admissible residues, G = F_0.
  JacobiCoeffTable t;
  t.index = 1;
  t.singular = {{0, Rational(1)}, {-1, Rational(2)}};
  t.positive = {{3, Rational(5)}, {4, make_fraction(7, 2)}, {7, Rational(-1)}};
  t.dmax = 8;
  QSeries g = G_expansion(t, 2);
  QSeries f0 = F_expansion(t, 0, 2);
  for (long n = 0; n <= 2; ++n) CHECK(g.coeff_q(n) == f0.coeff_q(n));

  JacobiCoeffTable t1 = bootstrap(1, kSingularT1, {0, 1}, 200);
  QSeries g2 = G_expansion(t1, 50);
  QSeries f02 = F_expansion(t1, 0, 50);
  for (long n = 0; n <= 50; ++n) {
    CHECK(g2.coeff_q(n) == 0);
    CHECK(g2.coeff_q(n) == f02.coeff_q(n));
  }

  JacobiCoeffTable bad;
  bad.index = 4;
  bad.dmax = 4;
  CHECK_THROWS_WITH_AS(G_expansion(bad, 1), doctest::Contains("prime"), error);
}
