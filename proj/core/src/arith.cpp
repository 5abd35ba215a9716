#include "singmod/arith.hpp"

#include "singmod/qseries.hpp"

namespace singmod {

int kronecker(const Integer& a, const Integer& n) {
  // GMP implements the full Kronecker extension (including n = 0, n < 0,
  // and the supplement at 2), which matches our contract exactly.
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

Integer sigma(long k, long n) {
  if (n <= 0) return 0;
  Integer acc(0);
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    Integer dk, ek;
    mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d),
                  static_cast<unsigned long>(k));
    acc += dk;
    long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(ek.get_mpz_t(), static_cast<unsigned long>(e),
                    static_cast<unsigned long>(k));
      acc += ek;
    }
  }
  return acc;
}

Integer sigma_odd(long k, long n) {
  if (n <= 0) return 0;
  Integer acc(0);
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    long e1 = d, e2 = n / d;
    if (e1 % 2 != 0) {
      Integer t;
      mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(e1),
                    static_cast<unsigned long>(k));
      acc += t;
    }
    if (e2 != e1 && e2 % 2 != 0) {
      Integer t;
      mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(e2),
                    static_cast<unsigned long>(k));
      acc += t;
    }
  }
  return acc;
}

std::vector<long> divisors(long n) {
  require(n >= 1, "divisors: n must be >= 1");
  std::vector<long> small, big;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) big.push_back(n / d);
  }
  for (auto it = big.rbegin(); it != big.rend(); ++it) small.push_back(*it);
  return small;
}

int omega(long n) {
  if (n < 0) n = -n;
  if (n <= 1) return 0;
  int count = 0;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    ++count;
    while (n % p == 0) n /= p;
  }
  if (n > 1) ++count;
  return count;
}

std::vector<Integer> partition_table(long nmax) {
  require(nmax >= 0, "partition_table: nmax must be >= 0");
  std::vector<Integer> p(nmax + 1);
  p[0] = 1;
  for (long n = 1; n <= nmax; ++n) {
    Integer acc(0);
    for (long k = 1;; ++k) {
      long g1 = k * (3 * k - 1) / 2;
      long g2 = k * (3 * k + 1) / 2;
      if (g1 > n && g2 > n) break;
      Integer term(0);
      if (g1 <= n) term += p[n - g1];
      if (g2 <= n) term += p[n - g2];
      if (k % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    p[n] = acc;
  }
  return p;
}

std::vector<Integer> spt_table(long nmax) {
  require(nmax >= 1, "spt_table: nmax must be >= 1");
  const long N = nmax;
  // running = prod_{m<n} (1 - q^m), updated as n advances.
  std::vector<Integer> running(N + 1), total(N + 1);
  running[0] = 1;
  for (long n = 1; n <= N; ++n) {
    // term = q^n * running / (1 - q^n): shift by n, then a stride-n
    // geometric accumulation multiplies by 1/(1-q^n).
    std::vector<Integer> term(N + 1);
    for (long i = n; i <= N; ++i) term[i] = running[i - n];
    for (long i = 2 * n; i <= N; ++i) term[i] += term[i - n];
    for (long i = 0; i <= N; ++i) total[i] += term[i];
    // running *= (1 - q^n)
    for (long i = N; i >= n; --i) running[i] -= running[i - n];
  }
  // total *= prod_n 1/(1 - q^n)
  for (long n = 1; n <= N; ++n)
    for (long i = n; i <= N; ++i) total[i] += total[i - n];
  total[0] = 0;
  return total;
}

QSeries euler_product(long order) {
  // prod_{n>=1} (1 - q^n) via Euler's pentagonal number series.
  QSeries r(1, 0, order);
  for (long k = 0;; ++k) {
    bool any = false;
    for (long g : {k * (3 * k - 1) / 2, k * (3 * k + 1) / 2}) {
      if (g >= order) continue;
      any = true;
      r.set(g, Rational((k % 2 == 0) ? 1 : -1));
      if (k == 0) break;  // g1 == g2 == 0 for k = 0
    }
    if (!any && k > 0) break;
  }
  return r;
}

}  // namespace singmod
