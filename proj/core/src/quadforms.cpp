#include "singmod/quadforms.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <utility>

namespace singmod {

namespace {

// (Q∘T^k) for T = [[1,1],[0,1]]: b shifts by 2ak.
QuadForm act_translate(const QuadForm& q, const Integer& k) {
  return {q.a, q.b + 2 * q.a * k, q.a * k * k + q.b * k + q.c};
}

// Q∘E+ for E+ = [[1,-1],[2,-1]] (order 2 in PSL2, fixes (1+i)/2).
QuadForm act_eplus(const QuadForm& q) {
  return {q.a + 2 * q.b + 4 * q.c, -2 * q.a - 3 * q.b - 4 * q.c,
          q.a + q.b + q.c};
}

// Q∘E- for E- = [[1,1],[-2,-1]] (order 2 in PSL2, fixes (-1+i)/2).
QuadForm act_eminus(const QuadForm& q) {
  return {q.a - 2 * q.b + 4 * q.c, 2 * q.a - 3 * q.b + 4 * q.c,
          q.a - q.b + q.c};
}

// Translate so that b lands in (-a, a].
QuadForm t_normalize(const QuadForm& q) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), Integer(q.a - q.b).get_mpz_t(),
             Integer(2 * q.a).get_mpz_t());
  Integer bnew = q.a - r;
  Integer k = (bnew - q.b) / (2 * q.a);
  return act_translate(q, k);
}

// Root in the closed Gamma_0(2) fundamental domain
// {|Re| <= 1/2, |2 tau + 1| >= 1, |2 tau - 1| >= 1}: translate b into
// (-a, a], and while the root lies strictly inside one of the two circles,
// apply the order-2 generator attached to that circle.  Each such step
// strictly decreases the positive integer a, so this terminates.
QuadForm descend_gamma0_2(QuadForm q, const Integer& d) {
  for (;;) {
    q = t_normalize(q);
    Integer a2 = q.a * q.a;
    Integer lm = (q.a - q.b) * (q.a - q.b) + d;  // |2 alpha + 1|^2 * a^2
    Integer lp = (q.a + q.b) * (q.a + q.b) + d;  // |2 alpha - 1|^2 * a^2
    if (lm < a2 && (lp >= a2 || lm <= lp)) {
      q = act_eminus(q);
      continue;
    }
    if (lp < a2) {
      q = act_eplus(q);
      continue;
    }
    return q;
  }
}

// All T-normalized forms of the class sharing the minimal leading
// coefficient: the orbit meets the closed fundamental domain in at most a
// few boundary-identified points, connected by single E+/E- steps.
std::set<QuadForm> minimal_closure(const QuadForm& q0) {
  std::set<QuadForm> seen{q0};
  std::deque<QuadForm> queue{q0};
  while (!queue.empty()) {
    QuadForm q = queue.front();
    queue.pop_front();
    for (QuadForm img : {act_eplus(q), act_eminus(q)}) {
      if (img.a != q0.a) continue;
      img = t_normalize(img);
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  return seen;
}

}  // namespace

HeegnerPoint root(const QuadForm& q) {
  require(q.positive_definite(), "root: form must be positive definite");
  return {q, -q.disc()};
}

QuadForm reduce(QuadForm q) {
  require(q.positive_definite(), "reduce: form must be positive definite");
  for (;;) {
    q = t_normalize(q);
    if (q.a > q.c) {
      q = QuadForm{q.c, -q.b, q.a};  // S = [[0,-1],[1,0]]
      continue;
    }
    break;
  }
  if (q.a == q.c && q.b < 0) q.b = -q.b;
  return q;
}

ClassList enumerate_classes(long d) {
  require(d > 0 && (d % 4 == 0 || d % 4 == 3),
          "enumerate_classes: need d > 0 with -d ≡ 0,1 (mod 4)");
  std::vector<std::pair<QuadForm, int>> found;
  for (long b = d % 2; 3 * b * b <= d; b += 2) {
    long n = (b * b + d) / 4;  // = ac
    for (long a = std::max(b, 1L); a * a <= n; ++a) {
      if (n % a != 0) continue;
      long c = n / a;
      int stab = (b == a && c == a) ? 3 : (b == 0 && c == a) ? 2 : 1;
      found.emplace_back(QuadForm{a, b, c}, stab);
      if (b != 0 && b != a && a != c) found.emplace_back(QuadForm{a, -b, c}, 1);
    }
  }
  std::sort(found.begin(), found.end());
  ClassList out;
  out.d = d;
  out.context = "level1";
  for (auto& [q, s] : found) {
    out.reps.push_back(q);
    out.stab.push_back(s);
  }
  return out;
}

Rational hurwitz_H(long d) {
  if (d == 0) return make_fraction(-1, 12);
  if (d < 0 || d % 4 == 1 || d % 4 == 2) return Rational(0);
  ClassList cl = enumerate_classes(d);
  Rational h(0);
  for (int s : cl.stab) h += make_fraction(1, s);
  return h;
}

QuadForm fricke_act(const QuadForm& q, long p) {
  require(p > 0 && q.a % p == 0, "fricke_act: level must divide a");
  return {p * q.c, -q.b, q.a / p};
}

std::vector<long> valid_h_values(long d, long p) {
  std::vector<long> out;
  for (long h = 0; h < 2 * p; ++h)
    if (((h * h + d) % (4 * p)) == 0) out.push_back(h);
  return out;
}

QuadForm reduce_gamma0_2(QuadForm q) {
  require(q.positive_definite(), "reduce_gamma0_2: form must be positive definite");
  require(q.a % 2 == 0, "reduce_gamma0_2: leading coefficient must be even");
  Integer d = -q.disc();
  q = descend_gamma0_2(std::move(q), d);
  return *minimal_closure(q).begin();
}

int stabilizer_gamma0_2(const QuadForm& canonical) {
  for (const QuadForm& q : minimal_closure(canonical))
    if (act_eplus(q) == q || act_eminus(q) == q) return 2;
  return 1;
}

ClassList enumerate_classes_gamma0(long d, long p, long h) {
  require(p == 2, "enumerate_classes_gamma0: only p = 2 is supported");
  require(d > 0, "enumerate_classes_gamma0: need d > 0");
  ClassList out;
  out.d = d;
  out.context = "gamma0";
  out.p = p;
  out.h = h;
  auto valid = valid_h_values(d, p);
  if (std::find(valid.begin(), valid.end(), h) == valid.end()) return out;

  // Every class has a representative with root in the closed fundamental
  // domain; such forms satisfy a <= max(sqrt(d), (d+4)/4).
  long bound = (d + 4) / 4;
  while (bound * bound < d) ++bound;
  std::set<QuadForm> classes;
  for (long a = 2; a <= bound; a += 2)
    for (long b = -a + 1; b <= a; ++b) {
      if (((b % 4) + 4) % 4 != h) continue;
      if ((b * b + d) % (4 * a) != 0) continue;
      long c = (b * b + d) / (4 * a);
      if (c <= 0) continue;
      classes.insert(reduce_gamma0_2(QuadForm{a, b, c}));
    }
  for (const QuadForm& q : classes) {
    out.reps.push_back(q);
    out.stab.push_back(stabilizer_gamma0_2(q));
  }
  return out;
}

ClassList enumerate_classes_fricke(long d, long p) {
  require(p == 2, "enumerate_classes_fricke: only p = 2 is supported");
  ClassList out;
  out.d = d;
  out.context = "fricke";
  out.p = p;

  // Union of the Gamma_0(2) classes over all admissible residues h, with
  // their stabilizer orders.
  std::map<QuadForm, int> g0;
  for (long h : valid_h_values(d, p)) {
    ClassList cl = enumerate_classes_gamma0(d, p, h);
    for (size_t i = 0; i < cl.reps.size(); ++i) g0.emplace(cl.reps[i], cl.stab[i]);
  }

  // The Fricke involution permutes the Gamma_0(2) classes: a fixed class
  // keeps one representative with doubled stabilizer, a swapped pair keeps
  // its lexicographically smaller member.
  std::set<QuadForm> done;
  for (const auto& [q, s] : g0) {
    if (done.count(q)) continue;
    QuadForm partner = reduce_gamma0_2(fricke_act(q, p));
    done.insert(q);
    done.insert(partner);
    out.reps.push_back(q);
    out.stab.push_back(partner == q ? 2 * s : s);
  }
  return out;
}

}  // namespace singmod
