#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "singmod/arith.hpp"

#include <algorithm>
#include <map>
#include <vector>

using namespace singmod;

namespace {

// Independent partition count: coin-change DP over parts 1..n, one part size
// at a time.  Shares nothing with the pentagonal recurrence used in arith.cpp.
std::vector<Integer> partitions_by_parts(long nmax) {
  std::vector<Integer> ways(nmax + 1);
  ways[0] = 1;
  for (long part = 1; part <= nmax; ++part)
    for (long n = part; n <= nmax; ++n) ways[n] += ways[n - part];
  return ways;
}

// Number of partitions of n into parts >= lo.
Integer partitions_min_part(long n, long lo, std::map<std::pair<long, long>, Integer>& memo) {
  if (n == 0) return 1;
  if (lo > n) return 0;
  auto it = memo.find({n, lo});
  if (it != memo.end()) return it->second;
  // Either no part equals lo, or at least one does.
  Integer r = partitions_min_part(n, lo + 1, memo) +
              partitions_min_part(n - lo, lo, memo);
  memo[{n, lo}] = r;
  return r;
}

// Direct count: classify each partition of n by its smallest part s and the
// multiplicity k of s, then add k for each.
Integer spt_enumerated(long n) {
  std::map<std::pair<long, long>, Integer> memo;
  Integer acc = 0;
  for (long s = 1; s <= n; ++s)
    for (long k = 1; k * s <= n; ++k) {
      long rest = n - k * s;
      if (rest == 0)
        acc += k;
      else
        acc += Integer(k) * partitions_min_part(rest, s + 1, memo);
    }
  return acc;
}

}  // namespace

TEST_CASE("kronecker symbol: Euler criterion at odd primes") {
  const long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 997};
  for (long p : primes) {
    for (long a = -30; a <= 30; ++a) {
      if (a % p == 0) {
        CHECK(kronecker(a, p) == 0);
        continue;
      }
      // a^((p-1)/2) mod p is +1 for residues, -1 for non-residues.
      Integer e;
      mpz_powm_ui(e.get_mpz_t(), Integer(((a % p) + p) % p).get_mpz_t(),
                  static_cast<unsigned long>((p - 1) / 2),
                  Integer(p).get_mpz_t());
      long euler = (e == 1) ? 1 : -1;
      CHECK(kronecker(a, p) == euler);
    }
  }
}

TEST_CASE("kronecker symbol: supplement at 2 and edge cases") {
  CHECK(kronecker(1, 2) == 1);
  CHECK(kronecker(7, 2) == 1);
  CHECK(kronecker(-1, 2) == 1);
  CHECK(kronecker(3, 2) == -1);
  CHECK(kronecker(5, 2) == -1);
  CHECK(kronecker(-3, 2) == -1);
  CHECK(kronecker(4, 2) == 0);
  CHECK(kronecker(0, 2) == 0);
  // (a|0) = 1 iff |a| = 1.
  CHECK(kronecker(1, 0) == 1);
  CHECK(kronecker(-1, 0) == 1);
  CHECK(kronecker(5, 0) == 0);
  // (-d|2) drives the level-2 starred coefficients: nonzero only for odd d,
  // +1 exactly when -d ≡ ±1 (mod 8), i.e. d ≡ 1, 7 (mod 8).
  CHECK(kronecker(-7, 2) == 1);
  CHECK(kronecker(-1, 2) == 1);
  CHECK(kronecker(-3, 2) == -1);
  CHECK(kronecker(-5, 2) == -1);
  CHECK(kronecker(-4, 2) == 0);
}

TEST_CASE("kronecker symbol: multiplicative in both arguments") {
  // Both identities hold unconditionally on nonzero arguments; the zero
  // conventions (a|0) = [|a| = 1] and (0|-1) = 1 break them when a factor
  // vanishes, and those edges are pinned separately above.
  for (long a = -12; a <= 12; ++a)
    for (long m = -9; m <= 9; ++m)
      for (long n = -9; n <= 9; ++n) {
        if (m != 0 && n != 0)
          CHECK(kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n));
        if (a != 0 && m != 0)
          CHECK(kronecker(a * m, n) == kronecker(a, n) * kronecker(m, n));
      }
}

TEST_CASE("divisor sums") {
  CHECK(sigma(1, 1) == 1);
  CHECK(sigma(1, 6) == 12);
  CHECK(sigma(1, 12) == 28);
  CHECK(sigma(3, 4) == 73);
  CHECK(sigma(11, 2) == 2049);
  CHECK(sigma(0, 12) == 6);  // number of divisors
  CHECK(sigma(1, 0) == 0);
  CHECK(sigma(1, -5) == 0);

  CHECK(sigma_odd(1, 1) == 1);
  CHECK(sigma_odd(1, 4) == 1);
  CHECK(sigma_odd(1, 6) == 4);
  CHECK(sigma_odd(1, 12) == 4);
  CHECK(sigma_odd(1, 15) == 24);  // all divisors of 15 are odd
  CHECK(sigma_odd(1, 0) == 0);

  // Brute-force cross-check on a range.
  for (long n = 1; n <= 200; ++n) {
    Integer s1 = 0, s1o = 0, s3 = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) {
        s1 += d;
        s3 += Integer(d) * d * d;
        if (d % 2 == 1) s1o += d;
      }
    CHECK(sigma(1, n) == s1);
    CHECK(sigma(3, n) == s3);
    CHECK(sigma_odd(1, n) == s1o);
  }
}

TEST_CASE("divisor lists and omega") {
  CHECK(divisors(1) == std::vector<long>{1});
  CHECK(divisors(12) == std::vector<long>({1, 2, 3, 4, 6, 12}));
  CHECK(divisors(49) == std::vector<long>({1, 7, 49}));
  for (long n = 1; n <= 100; ++n) {
    auto ds = divisors(n);
    CHECK(std::is_sorted(ds.begin(), ds.end()));
    CHECK(static_cast<long>(ds.size()) == sigma(0, n).get_si());
  }

  CHECK(omega(1) == 0);
  CHECK(omega(2) == 1);
  CHECK(omega(8) == 1);
  CHECK(omega(12) == 2);
  CHECK(omega(30) == 3);
  CHECK(omega(2 * 3 * 5 * 7 * 11) == 5);
  CHECK(omega(0) == 0);
}

TEST_CASE("partition numbers against independent DP") {
  auto p = partition_table(120);
  auto oracle = partitions_by_parts(120);
  REQUIRE(p.size() == oracle.size());
  for (size_t n = 0; n < p.size(); ++n) CHECK(p[n] == oracle[n]);
  // Frozen landmarks.
  CHECK(p[0] == 1);
  CHECK(p[5] == 7);
  CHECK(p[24] == 1575);
  CHECK(p[100] == Integer("190569292"));
}

TEST_CASE("smallest-parts counts against direct enumeration") {
  auto spt = spt_table(30);
  CHECK(spt[0] == 0);
  CHECK(spt[1] == 1);
  CHECK(spt[2] == 3);
  CHECK(spt[3] == 5);
  CHECK(spt[4] == 10);
  CHECK(spt[5] == 14);
  for (long n = 1; n <= 30; ++n) CHECK(spt[n] == spt_enumerated(n));
}
