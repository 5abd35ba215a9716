#pragma once

// Positive-definite integral binary quadratic forms: Gauss reduction and
// class enumeration for SL2(Z), for Gamma_0(2) with a fixed residue of b
// mod 4, and for the Fricke extension Gamma_0*(2); stabilizer orders,
// Hurwitz class numbers, and Heegner roots.

#include "singmod/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace singmod {

// Q(x, y) = a x^2 + b xy + c y^2 with discriminant b^2 - 4ac.
struct QuadForm {
  Integer a, b, c;

  QuadForm() : a(0), b(0), c(0) {}
  QuadForm(Integer a_, Integer b_, Integer c_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}
  QuadForm(long a_, long b_, long c_) : a(a_), b(b_), c(c_) {}

  Integer disc() const { return b * b - 4 * a * c; }
  bool positive_definite() const { return a > 0 && disc() < 0; }

  bool operator==(const QuadForm& o) const {
    return a == o.a && b == o.b && c == o.c;
  }
  bool operator<(const QuadForm& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
  }
};

// Root of Q(tau, 1) = 0 in the upper half plane, kept exact:
// alpha = (-b + i sqrt(d)) / (2a) where d = 4ac - b^2 > 0.
struct HeegnerPoint {
  QuadForm form;
  Integer d;  // = -disc(form)
};
HeegnerPoint root(const QuadForm& q);

// A set of pairwise inequivalent representatives for one discriminant and
// one group context, with the orders of the point stabilizers in the
// projective group.
struct ClassList {
  long d = 0;
  std::string context;  // "level1" | "gamma0" | "fricke"
  long p = 0;           // 0 for level 1
  long h = -1;          // residue of b mod 2p for "gamma0", else -1
  std::vector<QuadForm> reps;
  std::vector<int> stab;
};

// ---------------- Level 1 ----------------

// Unique reduced representative: |b| <= a <= c, with b >= 0 if |b| = a or
// a = c.  Errors on non-positive-definite input.
QuadForm reduce(QuadForm q);

// All reduced forms of discriminant -d.  Requires d > 0, d ≡ 0, 3 (mod 4).
// Stabilizers: 3 for [a,a,a], 2 for [a,0,a], else 1.
ClassList enumerate_classes(long d);

// Kronecker–Hurwitz class number: sum of 1/|stab| over classes of
// discriminant -d; H(0) = -1/12; 0 for d < 0 or d ≡ 1, 2 (mod 4).
Rational hurwitz_H(long d);

// ---------------- Level 2 and Fricke ----------------

// [a, b, c] -> [p c, -b, a / p]; errors unless p | a.
QuadForm fricke_act(const QuadForm& q, long p);

// Residues h mod 2p with h^2 ≡ -d (mod 4p); empty when the level-p family
// of forms is empty (e.g. p = 2, d ≡ 3 mod 8).
std::vector<long> valid_h_values(long d, long p);

// Canonical representative of the Gamma_0(2) class of q (which must be
// positive definite with 2 | a).  Representatives have the Heegner root in
// the standard fundamental domain {|Re| <= 1/2, |2 tau +- 1| >= 1}; ties on
// its boundary are broken lexicographically in (a, b, c).
QuadForm reduce_gamma0_2(QuadForm q);

// Order (1 or 2) of the projective Gamma_0(2) stabilizer of the class of a
// canonical representative.
int stabilizer_gamma0_2(const QuadForm& canonical);

// Representatives of { [a,b,c] of disc -d : 2 | a, b ≡ h (mod 4) } up to
// Gamma_0(2), with stabilizer orders.  Empty list when h is not valid.
ClassList enumerate_classes_gamma0(long d, long p, long h);

// Representatives of { [a,b,c] of disc -d : 2 | a } up to the Fricke group
// Gamma_0*(2).  Classes fixed by the Fricke involution get their stabilizer
// order doubled; swapped pairs contribute a single representative.
ClassList enumerate_classes_fricke(long d, long p);

}  // namespace singmod
