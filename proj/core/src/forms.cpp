#include "singmod/forms.hpp"

#include "singmod/arith.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <utility>

namespace singmod {

namespace {

QSeries eisenstein(long weight, const Rational& factor, long order,
                   bool odd_divisors_only = false) {
  // 1 + factor * sum sigma_{weight-1}(n) q^n
  QSeries s(1, 0, order);
  if (order > 0) s.set(0, 1);
  for (long n = 1; n < order; ++n) {
    Integer sig = odd_divisors_only ? sigma_odd(weight - 1, n)
                                    : sigma(weight - 1, n);
    s.set(n, factor * Rational(sig));
  }
  return s;
}

QSeries theta_series(long order, bool alternating) {
  QSeries s(1, 0, order);
  if (order > 0) s.set(0, 1);
  for (long r = 1; r * r < order; ++r)
    s.set(r * r, Rational((alternating && r % 2 != 0) ? -2 : 2));
  return s;
}

QSeries build_uncached(const std::string& name, long order) {
  const long pad = order + 8;
  if (name == "E2") return eisenstein(2, Rational(-24), order);
  if (name == "E4") return eisenstein(4, Rational(240), order);
  if (name == "E6") return eisenstein(6, Rational(-504), order);
  if (name == "E12") return eisenstein(12, make_fraction(65520, 691), order);
  if (name == "E2level2") return eisenstein(2, Rational(24), order, true);
  if (name == "theta0") return theta_series(order, false);
  if (name == "theta1") return theta_series(order, true);
  if (name == "eta") return eta_power(1, order);
  if (name == "Delta") return truncate_to(eta_power(24, pad), order);
  if (name == "j") {
    QSeries e4 = build_form("E4", pad);
    QSeries delta = build_form("Delta", pad + 2);
    return truncate_to(series_div(series_pow(e4, 3), delta), order);
  }
  if (name == "j2" || name == "j2star") {
    QSeries delta = build_form("Delta", pad + 2);
    QSeries delta2 = rescale(delta, Rational(2));
    QSeries j2 = series_div(delta, delta2) + QSeries::constant(24, pad);
    if (name == "j2") return truncate_to(j2, order);
    QSeries tail = series_div(delta2, delta) * Rational(4096);
    return truncate_to(j2 + tail, order);
  }
  if (name == "g1") {
    // -theta1(tau) * E4(4tau) / eta(4tau)^6 = -q^-1 + 2 + sum t1(d) q^d
    long sub = pad / 4 + 3;
    QSeries e4_4 = rescale(build_form("E4", sub), Rational(4));
    QSeries eta6_4 = rescale(eta_power(6, sub), Rational(4));
    QSeries s = series_mul(theta_series(pad, true), e4_4);
    s = series_div(s, eta6_4);
    return truncate_to(s * Rational(-1), order);
  }
  throw error("build_form: unknown form '" + name + "'");
}

std::mutex cache_mutex;
std::map<std::string, QSeries> form_cache;  // largest order built so far

}  // namespace

QSeries truncate_to(QSeries s, long order) {
  if (order >= s.order()) return s;
  QSeries out(s.scale(), std::min(s.floor_exp(), order), order);
  for (const auto& [e, c] : s.coeffs()) {
    if (e >= order) break;
    out.set(e, c);
  }
  return out;
}

QSeries build_form(const std::string& name, long order) {
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = form_cache.find(name);
    if (it != form_cache.end() &&
        it->second.order() >= order * it->second.scale())
      return truncate_to(it->second, order * it->second.scale());
  }
  QSeries built = build_uncached(name, order);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = form_cache.find(name);
    if (it == form_cache.end() || it->second.order() < built.order())
      form_cache.insert_or_assign(name, built);
  }
  return built;
}

std::vector<std::string> registry_names() {
  return {"E2",  "E4",  "E6",    "E12",    "Delta",    "j",  "eta",
          "theta0", "theta1", "j2", "j2star", "E2level2", "g1"};
}

QSeries eta_power(long p, long q_order) {
  // eta^3 = sum_{n>=0} (-1)^n (2n+1) q^((2n+1)^2/8)  (Jacobi),
  // eta    = sum_k (-1)^k q^((6k+1)^2/24)            (Euler, pentagonal).
  if (p == 1) {
    QSeries s(24, 1, 24 * q_order + 1);
    for (long ak = 0;; ++ak) {
      long emin = (ak == 0) ? 1 : (6 * ak - 1) * (6 * ak - 1);
      if (ak > 0 && emin >= s.order()) break;
      for (long k : {ak, -ak}) {
        long e = (6 * k + 1) * (6 * k + 1);
        if (e < s.order())
          s.set(e, Rational((((k % 2) + 2) % 2 == 0) ? 1 : -1));
        if (ak == 0) break;
      }
    }
    return s;
  }
  if (p == 2) return series_mul(eta_power(1, q_order), eta_power(1, q_order));
  if (p == 3) {
    QSeries s(8, 1, 8 * q_order + 1);
    for (long n = 0;; ++n) {
      long e = (2 * n + 1) * (2 * n + 1);
      if (e >= s.order()) break;
      s.set(e, Rational((n % 2 == 0) ? (2 * n + 1) : -(2 * n + 1)));
    }
    return s;
  }
  if (p == 6 || p == 12 || p == 24) {
    QSeries h = eta_power(p / 2, q_order + 1);
    QSeries sq = series_mul(h, h);
    sq.normalize_scale();
    return sq;
  }
  throw error("eta_power: unsupported power");
}

// ---------------- Faber polynomials ----------------

FaberPoly faber_level1(long m, long order) {
  require(m >= 0, "faber_level1: m must be >= 0");
  long work = std::max<long>(order, 2) + m + 2;
  QSeries j = build_form("j", work);
  std::vector<FaberPoly> fab(m + 1);
  fab[0] = {0, {Rational(1)}, QSeries::constant(1, work)};
  for (long mm = 1; mm <= m; ++mm) {
    QSeries p = series_mul(fab[mm - 1].expansion, j);
    std::vector<Rational> poly(mm + 1);
    for (long i = 0; i < mm; ++i) poly[i + 1] = fab[mm - 1].coeffs_in_j[i];
    for (long k = mm - 1; k >= 0; --k) {
      Rational c = p.coeff_q(-k);
      if (c == 0) continue;
      p -= fab[k].expansion * c;
      for (long i = 0; i <= k; ++i) poly[i] -= c * fab[k].coeffs_in_j[i];
    }
    fab[mm] = {mm, std::move(poly), std::move(p)};
  }
  fab[m].expansion = truncate_to(fab[m].expansion, order);
  return fab[m];
}

Rational faber_eval_at_j_value(long m, const Rational& j_value) {
  FaberPoly f = faber_level1(m, 2);
  Rational acc(0);
  for (auto it = f.coeffs_in_j.rbegin(); it != f.coeffs_in_j.rend(); ++it)
    acc = acc * j_value + *it;
  return acc;
}

QSeries faber_level2_fricke(long m, long order) {
  require(m >= 0, "faber_level2_fricke: m must be >= 0");
  long work = std::max<long>(order, 2) + m + 2;
  QSeries h = build_form("j2star", work);
  std::vector<QSeries> fab;
  fab.push_back(QSeries::constant(1, work));
  for (long mm = 1; mm <= m; ++mm) {
    QSeries p = series_mul(fab[mm - 1], h);
    for (long k = mm - 1; k >= 0; --k) {
      Rational c = p.coeff_q(-k);
      if (c != 0) p -= fab[k] * c;
    }
    fab.push_back(std::move(p));
  }
  return truncate_to(fab[m], order);
}

// ---------------- Miller bases and Hecke ----------------

long dim_Mk(long k) {
  require(k >= 0 && k % 2 == 0, "dim_Mk: weight must be even and >= 0");
  return (k % 12 == 2) ? k / 12 : k / 12 + 1;
}

long dim_Sk(long k) {
  long d = dim_Mk(k);
  return (k >= 4) ? d - 1 : 0;
}

std::vector<QSeries> miller_basis(long k, long order) {
  long dim = dim_Mk(k);
  if (dim == 0) return {};
  long work = std::max(order, dim + 1);
  QSeries e4 = build_form("E4", work);
  QSeries e6 = build_form("E6", work);
  QSeries delta = build_form("Delta", work);
  std::vector<QSeries> rows;
  for (long c = 0; c < dim; ++c) {
    long rem = k - 12 * c;
    long b = (rem % 4 == 2) ? 1 : 0;
    long a = (rem - 6 * b) / 4;
    require(a >= 0, "miller_basis: internal exponent bookkeeping");
    QSeries f = series_pow(delta, c);
    if (a > 0) f = series_mul(f, series_pow(e4, a));
    if (b > 0) f = series_mul(f, e6);
    rows.push_back(std::move(f));
  }
  // rows[c] = q^c + higher; echelonize so rows[i] = q^i + O(q^dim).
  for (long i = dim - 1; i >= 0; --i) {
    for (long l = i + 1; l < dim; ++l) {
      Rational c = rows[i].coeff_q(l);
      if (c != 0) rows[i] -= rows[l] * c;
    }
  }
  for (auto& r : rows) r = truncate_to(std::move(r), order);
  return rows;
}

std::vector<QSeries> miller_cusp_basis(long k, long order) {
  std::vector<QSeries> all = miller_basis(k, order);
  if (all.empty()) return {};
  all.erase(all.begin());  // drop the constant-term-1 element
  return all;
}

std::vector<std::vector<Rational>> hecke_matrix(long k, long n) {
  require(k >= 4 && k % 2 == 0, "hecke_matrix: even weight >= 4 required");
  require(n >= 1, "hecke_matrix: n must be >= 1");
  long s = dim_Sk(k);
  std::vector<std::vector<Rational>> mat(s, std::vector<Rational>(s));
  if (s == 0) return mat;
  long order = n * s + 2;
  std::vector<QSeries> basis = miller_cusp_basis(k, order);
  for (long i = 0; i < s; ++i) {
    // b(m) = sum_{e | gcd(m,n)} e^(k-1) a((m/e)(n/e)); echelon coordinates
    // of T_n f_{i+1} are its first s coefficients.
    for (long m = 1; m <= s; ++m) {
      Rational acc(0);
      for (long e : divisors(std::gcd(m, n))) {
        Integer ek;
        mpz_ui_pow_ui(ek.get_mpz_t(), static_cast<unsigned long>(e),
                      static_cast<unsigned long>(k - 1));
        acc += Rational(ek) * basis[i].coeff_q((m / e) * (n / e));
      }
      mat[m - 1][i] = acc;
    }
  }
  return mat;
}

Rational hecke_trace(long k, long n) {
  auto mat = hecke_matrix(k, n);
  Rational tr(0);
  for (size_t i = 0; i < mat.size(); ++i) tr += mat[i][i];
  return tr;
}

}  // namespace singmod
