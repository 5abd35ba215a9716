#include "singmod/traces.hpp"

#include "singmod/arith.hpp"
#include "singmod/forms.hpp"
#include "singmod/jacobi.hpp"
#include "singmod/numeric.hpp"
#include "singmod/quadforms.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

namespace singmod {

namespace {

long mod_pos(long v, long n) { return ((v % n) + n) % n; }

std::string family_tag(int level, bool starred, long m) {
  std::ostringstream os;
  os << "(level=" << level << ", starred=" << (starred ? "true" : "false")
     << ", m=" << m << ")";
  return os.str();
}

}  // namespace

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::closed_form: return "closed-form";
    case Provenance::bootstrap: return "bootstrap";
    case Provenance::hecke_relation: return "hecke-relation";
    case Provenance::numeric: return "numeric";
  }
  throw error("provenance_name: unknown provenance");
}

bool trace_admissible(int level, long d) {
  if (level == 1) {
    const long r = mod_pos(d, 4);
    return r == 0 || r == 3;
  }
  require(level == 2, "trace_admissible: level must be 1 or 2");
  const long r = mod_pos(d, 8);
  return r == 0 || r == 4 || r == 7;
}

Rational TraceTable::value(long d) const {
  auto it = entries.find(d);
  if (it != entries.end()) return it->second;
  require(d <= dmax, "TraceTable: value at d = " + std::to_string(d) +
                         " beyond horizon dmax = " + std::to_string(dmax));
  return Rational(0);
}

bool TraceTable::has(long d) const { return entries.count(d) != 0; }

std::string TraceTable::to_json() const {
  std::ostringstream os;
  os << "{\"level\":" << level
     << ",\"starred\":" << (starred ? "true" : "false") << ",\"m\":" << m
     << ",\"dmax\":" << dmax << ",\"provenance\":\""
     << provenance_name(provenance) << "\",\"entries\":{";
  bool first = true;
  for (const auto& [d, v] : entries) {
    if (!first) os << ",";
    first = false;
    os << "\"" << d << "\":\"" << to_string(v) << "\"";
  }
  os << "}}";
  return os.str();
}

std::string TraceTable::to_csv() const {
  std::ostringstream os;
  os << "d,t\n";
  for (const auto& [d, v] : entries) os << d << "," << to_string(v) << "\n";
  return os.str();
}

TraceTable t1_closed_form(long dmax) {
  require(dmax >= 0, "t1_closed_form: dmax must be >= 0");
  const QSeries g = build_form("g1", dmax + 1);
  TraceTable t;
  t.level = 1;
  t.starred = false;
  t.m = 1;
  t.dmax = dmax;
  t.provenance = Provenance::closed_form;
  t.entries[-1] = g.coeff_q(-1);
  t.entries[0] = g.coeff_q(0);
  for (long d = 1; d <= dmax; ++d)
    if (trace_admissible(1, d)) t.entries[d] = g.coeff_q(d);
  return t;
}

TraceTable t2_via_hecke(const TraceTable& t1, long dmax) {
  require(t1.level == 1 && !t1.starred && t1.m == 1,
          "t2_via_hecke: input must be a level-1 index-1 table");
  require(dmax >= 0 && t1.dmax >= 4 * dmax,
          "t2_via_hecke: need t1 up to 4 dmax = " + std::to_string(4 * dmax));
  TraceTable t;
  t.level = 1;
  t.starred = false;
  t.m = 2;
  t.dmax = dmax;
  t.provenance = Provenance::hecke_relation;
  auto relation = [&](long d) {
    Rational v = t1.value(4 * d) + Rational(kronecker(Integer(-d), Integer(2))) * t1.value(d);
    if (mod_pos(d, 4) == 0) v += Rational(2) * t1.value(d / 4);
    return v;
  };
  t.entries[-4] = relation(-4);
  t.entries[-1] = relation(-1);
  t.entries[0] = relation(0);
  for (long d = 1; d <= dmax; ++d)
    if (trace_admissible(1, d)) t.entries[d] = relation(d);
  return t;
}

TraceTable t_level2_bootstrap(long m, long dmax, bool starred) {
  require(m >= 1, "t_level2_bootstrap: m must be >= 1");
  require(dmax >= 0, "t_level2_bootstrap: dmax must be >= 0");

  // Principal part a_{-n}, n = 1..m, of the index-m Fricke--Faber function.
  const QSeries f = faber_level2_fricke(m, 1);
  std::vector<Rational> a(static_cast<size_t>(m) + 1, Rational(0));
  for (long n = 1; n <= m; ++n) a[static_cast<size_t>(n)] = f.coeff_q(-n);

  std::map<long, Rational> singular;
  Rational t0(0);
  for (long n = 1; n <= m; ++n) {
    Integer weight = sigma(1, n);
    if (n % 2 == 0) weight += 2 * sigma(1, n / 2);
    t0 += Rational(2) * Rational(weight) * a[static_cast<size_t>(n)];
  }
  singular[0] = t0;
  for (long kappa = 1; kappa <= m; ++kappa) {
    Rational s(0);
    for (long n = kappa; n <= m; n += kappa) s += a[static_cast<size_t>(n)];
    const long unit = (kappa % 2 == 0) ? 2 : 1;
    singular[-kappa * kappa] = Rational(-unit * kappa) * s;
  }

  const JacobiCoeffTable tab = bootstrap(2, singular, {0, 1, 2}, dmax);

  TraceTable t;
  t.level = 2;
  t.starred = starred;
  t.m = m;
  t.dmax = dmax;
  t.provenance = Provenance::bootstrap;
  for (const auto& [d, v] : singular) t.entries[d] = v;
  for (long d = 1; d <= dmax; ++d)
    if (trace_admissible(2, d)) t.entries[d] = tab.coeff(d);
  if (starred)
    for (auto& [d, v] : t.entries)
      if (mod_pos(d, 2) == 0) v *= make_fraction(1, 2);
  return t;
}

namespace {

// The evaluated series for one (level, m) family, cached across calls.
// Level 1 evaluates the Faber function of j at level-1 reduced points
// (Im >= sqrt(3)/2); level 2 evaluates the Fricke--Faber function, always
// at a point with Im >= 1/2 after an optional Fricke flip.  The stored
// orders keep every tail far below the 1e-6 acceptance gates for the
// supported discriminant ranges.
const QSeries& faber_series_cached(int level, long m) {
  static std::map<std::pair<int, long>, QSeries> cache;
  const long order = (level == 1) ? 200 : 288;
  const auto key = std::make_pair(level, m);
  auto it = cache.find(key);
  if (it == cache.end()) {
    QSeries s = (level == 1) ? faber_level1(m, order).expansion
                             : faber_level2_fricke(m, order);
    it = cache.emplace(key, std::move(s)).first;
  }
  return it->second;
}

}  // namespace

NumericTrace numeric_trace(int level, bool starred, long m, long d,
                           long precision_bits) {
  require(level == 1 || level == 2, "numeric_trace: level must be 1 or 2");
  require(level == 2 || !starred, "numeric_trace: starred requires level 2");
  require(m >= 1, "numeric_trace: m must be >= 1");
  require(d >= 1, "numeric_trace: d must be >= 1 (singular values are "
                  "table-only)");
  require(precision_bits >= 64, "numeric_trace: need >= 64 bits");

  // Margin for the principal-part magnitude exp(2 pi m sqrt(d) / 2).
  const long margin = static_cast<long>(
                          4.5325 * static_cast<double>(m) *
                          std::sqrt(static_cast<double>(d))) +
                      1;
  const long wp = precision_bits + margin + 64;

  NumericTrace out{BigFloat::from_long(0, wp), BigFloat::from_long(0, wp)};
  if (!trace_admissible(level, d)) return out;

  ClassList cl;
  if (level == 1) {
    cl = enumerate_classes(d);
  } else if (!starred) {
    const std::vector<long> hs = valid_h_values(d, 2);
    require(!hs.empty(), "numeric_trace: no valid residue h");
    cl = enumerate_classes_gamma0(d, 2, hs.front());
  } else {
    cl = enumerate_classes_fricke(d, 2);
  }

  const QSeries& f = faber_series_cached(level, m);
  const long terms = static_cast<long>(f.coeffs().size());
  const BigFloat sqrt_d = sqrt(BigFloat::from_long(d, wp));

  BigComplex sum(wp);
  BigFloat bound = BigFloat::from_long(0, wp);
  for (size_t i = 0; i < cl.reps.size(); ++i) {
    QuadForm q = cl.reps[i];
    // The evaluated function is Fricke-invariant at level 2, so evaluate
    // at whichever of alpha_Q, W_2(alpha_Q) sits higher (Im >= 1/2).
    if (level == 2 && 2 * q.c < q.a) q = fricke_act(q, 2);
    const BigFloat two_a = BigFloat::from_integer(2 * q.a, wp);
    const BigComplex alpha(BigFloat::from_integer(-q.b, wp) / two_a,
                           sqrt_d / two_a);
    const EvalResult ev = eval_form(f, alpha, terms);
    const BigFloat weight =
        BigFloat::from_rational(make_fraction(1, cl.stab[i]), wp);
    sum = sum + BigComplex(ev.value.re * weight, ev.value.im * weight);
    bound = bound + ev.tail_bound * weight;
  }
  out.value = sum.re;
  out.bound = bound + abs(sum.im);
  return out;
}

Rational numeric_trace_value(int level, bool starred, long m, long d,
                             long precision_bits) {
  const NumericTrace nt = numeric_trace(level, starred, m, d, precision_bits);
  const BigFloat tol = BigFloat::from_rational(make_fraction(1, 1000000),
                                               nt.value.precision());
  require(nt.bound < tol,
          "numeric_trace_value: truncation bound above 1e-6 at " +
              family_tag(level, starred, m) + ", d = " + std::to_string(d));
  const Integer nearest = nt.value.round_nearest();
  const BigFloat diff =
      abs(nt.value - BigFloat::from_integer(nearest, nt.value.precision()));
  require(diff < tol,
          "numeric_trace_value: value not within 1e-6 of an integer at " +
              family_tag(level, starred, m) + ", d = " + std::to_string(d));
  return Rational(nearest);
}

TraceTable numeric_trace_table(int level, bool starred, long m, long dmax,
                               long precision_bits) {
  require(dmax >= 0, "numeric_trace_table: dmax must be >= 0");
  TraceTable t;
  t.level = level;
  t.starred = starred;
  t.m = m;
  t.dmax = dmax;
  t.provenance = Provenance::numeric;
  for (long d = 1; d <= dmax; ++d)
    if (trace_admissible(level, d))
      t.entries[d] = numeric_trace_value(level, starred, m, d, precision_bits);
  return t;
}

namespace {

// Keys of either table within the common window.  The numeric route is
// defined only for d >= 1, so a numeric table does not speak for the
// singular entries.
std::vector<long> common_keys(const TraceTable& a, const TraceTable& b,
                              long horizon) {
  const long floor = (a.provenance == Provenance::numeric ||
                      b.provenance == Provenance::numeric)
                         ? 1
                         : std::numeric_limits<long>::min();
  std::vector<long> keys;
  for (const auto& [d, v] : a.entries)
    if (d >= floor && d <= horizon) keys.push_back(d);
  for (const auto& [d, v] : b.entries)
    if (d >= floor && d <= horizon && !a.has(d)) keys.push_back(d);
  return keys;
}

std::string mismatch_detail(const TraceTable& a, const TraceTable& b, long d,
                            const Rational& lhs, const Rational& rhs) {
  std::ostringstream os;
  os << family_tag(a.level, a.starred, a.m) << " d = " << d << ": "
     << provenance_name(a.provenance) << " gives " << to_string(lhs) << ", "
     << provenance_name(b.provenance) << " gives " << to_string(rhs);
  return os.str();
}

}  // namespace

TraceReconcile reconcile(const std::vector<TraceTable>& tables) {
  TraceReconcile r;
  for (size_t i = 0; i < tables.size(); ++i) {
    for (size_t j = i + 1; j < tables.size(); ++j) {
      const TraceTable& a = tables[i];
      const TraceTable& b = tables[j];
      if (a.level != b.level || a.m != b.m) continue;
      const long horizon = std::min(a.dmax, b.dmax);
      if (a.starred == b.starred) {
        for (long d : common_keys(a, b, horizon)) {
          const Rational lhs = a.value(d);
          const Rational rhs = b.value(d);
          if (lhs != rhs) {
            r.ok = false;
            r.detail = mismatch_detail(a, b, d, lhs, rhs);
            return r;
          }
        }
      } else if (a.level == 2) {
        // t*(d) = 2^{-omega(gcd(2, d))} t(d).
        const TraceTable& plain = a.starred ? b : a;
        const TraceTable& star = a.starred ? a : b;
        for (long d : common_keys(plain, star, horizon)) {
          const Rational factor =
              (mod_pos(d, 2) == 0) ? make_fraction(1, 2) : Rational(1);
          const Rational lhs = factor * plain.value(d);
          const Rational rhs = star.value(d);
          if (lhs != rhs) {
            r.ok = false;
            r.detail = mismatch_detail(plain, star, d, lhs, rhs) +
                       " (after the Fricke factor)";
            return r;
          }
        }
      }
    }
  }
  return r;
}

}  // namespace singmod
