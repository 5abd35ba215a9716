#pragma once

// Elementary number-theoretic utilities: Kronecker symbol, divisor sums,
// partition counts, smallest-parts counts, prime factor counts.

#include "singmod/qseries.hpp"
#include "singmod/rational.hpp"

#include <vector>

namespace singmod {

// prod_{n>=1} (1 - q^n) + O(q^order) via Euler's pentagonal number series.
QSeries euler_product(long order);

// Kronecker symbol (a|n), full extension: (a|0) = 1 iff |a| = 1 else 0,
// (a|-1) = sign extension, multiplicative in n, with the standard
// supplement at 2: (a|2) = 0 for even a, +1 for a ≡ ±1 (mod 8),
// -1 for a ≡ ±3 (mod 8).
int kronecker(const Integer& a, const Integer& n);
inline int kronecker(long a, long n) { return kronecker(Integer(a), Integer(n)); }

// sigma_k(n) = sum of d^k over positive divisors d|n; 0 for n <= 0.
Integer sigma(long k, long n);

// sum of d^k over odd positive divisors d|n; 0 for n <= 0.
Integer sigma_odd(long k, long n);

// Ascending list of positive divisors of n >= 1.
std::vector<long> divisors(long n);

// Number of distinct prime factors; omega(0) and omega(±1) are 0.
int omega(long n);

// Partition numbers p(0..nmax) via Euler's pentagonal recurrence.
std::vector<Integer> partition_table(long nmax);

// Smallest-parts counts spt(1..nmax) (index 0 unused, set to 0): the total
// number of smallest parts in all partitions of n, generated by
//   (prod 1/(1-q^n)) * sum_n q^n * prod_{m<n} (1-q^m)/(1-q^n).
std::vector<Integer> spt_table(long nmax);

}  // namespace singmod
