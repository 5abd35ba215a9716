#include "singmod/jacobi.hpp"

#include "singmod/forms.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace singmod {

namespace {

// Largest r >= 0 with r^2 <= v (v >= 0).
long isqrt_long(long v) {
  if (v < 0) return -1;
  long r = static_cast<long>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

bool is_prime_long(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

Rational gegenbauer_S(long j, long k, long l, const Rational& r,
                      const Rational& n) {
  if (k < 2 || l < 0 || j < 0 || 2 * j > l) return Rational(0);
  Rational c(binomial(l + k - 2 - j, l - 2 * j) * binomial(j + k - 2, k - 2));
  if (j % 2) c = -c;
  return c * pow_rational(n, j) * pow_rational(r, l - 2 * j);
}

Rational gegenbauer_a(long k, long l, const Rational& r, const Rational& n) {
  require(k >= 2, "gegenbauer_a: k must be >= 2");
  require(l >= 0, "gegenbauer_a: l must be >= 0");
  Rational s(0);
  for (long j = 0; 2 * j <= l; ++j) s += gegenbauer_S(j, k, l, r, n);
  return s;
}

Rational gegenbauer_p(long k, long l, const Rational& r2m, const Rational& n) {
  require(k >= 2, "gegenbauer_p: k must be >= 2");
  require(l >= 0 && l % 2 == 0, "gegenbauer_p: degree l must be even");
  // a_{k,l} with r^(l-2j) = (r^2)^((l-2j)/2); every exponent is even.
  Rational s(0);
  for (long j = 0; 2 * j <= l; ++j) {
    Rational c(binomial(l + k - 2 - j, l - 2 * j) * binomial(j + k - 2, k - 2));
    if (j % 2) c = -c;
    s += c * pow_rational(n, j) * pow_rational(r2m, (l - 2 * j) / 2);
  }
  return s / Rational(binomial(l / 2 + k - 2, k - 2));
}

Rational gegenbauer_p_h(long k, long l, long h, const Rational& r2m,
                        const Rational& n) {
  require(k >= 2, "gegenbauer_p_h: k must be >= 2");
  require(l >= 0 && l % 2 == 0, "gegenbauer_p_h: degree l must be even");
  require(h >= 0, "gegenbauer_p_h: h must be >= 0");
  Rational s(0);
  for (long j = 0; 2 * j <= l; ++j) {
    Rational c(binomial(l + k - 2 - j + 2 * h, l - 2 * j + 2 * h));
    if (j % 2) c = -c;
    c *= make_fraction(binomial(j + k - 2, k - 2),
                       binomial(l / 2 + k - 2, k - 2));
    c *= make_fraction(binomial(2 * h, h) * binomial(l / 2 - j + h, h),
                       binomial(l / 2 + k - 2 + h, h) *
                           binomial(l + k - 2 - j + 2 * h, h));
    s += c * pow_rational(n, j) * pow_rational(r2m, (l - 2 * j) / 2);
  }
  return s;
}

bool gegenbauer_generating_check(long k, long lmax, const Rational& r,
                                 const Rational& n) {
  require(k >= 2, "gegenbauer_generating_check: k must be >= 2");
  require(lmax >= 0, "gegenbauer_generating_check: lmax must be >= 0");
  // (1 - rX + nX^2)^-(k-1), expanded in the formal variable X.
  QSeries base(1, 0, lmax + 1);
  base.set(0, Rational(1));
  base.set(1, -r);
  base.set(2, n);
  QSeries expansion = series_inv(series_pow(base, k - 1), lmax + 1);
  for (long l = 0; l <= lmax; ++l)
    if (expansion.coeff_q(l) != gegenbauer_a(k, l, r, n)) return false;
  return true;
}

// ---------------- JacobiCoeffTable ----------------

long JacobiCoeffTable::d_floor() const {
  return singular.empty() ? 0 : std::min(0L, singular.begin()->first);
}

bool JacobiCoeffTable::admissible(long d) const {
  long mod = 4 * index;
  for (long r = 0; 2 * r <= mod; ++r)
    if (((d + r * r) % mod) == 0) return true;
  return false;
}

Rational JacobiCoeffTable::coeff(long d) const {
  const auto& side = d <= 0 ? singular : positive;
  if (d > 0)
    require(d <= dmax, "JacobiCoeffTable: coefficient at d = " +
                           std::to_string(d) + " beyond horizon dmax = " +
                           std::to_string(dmax));
  auto it = side.find(d);
  return it == side.end() ? Rational(0) : it->second;
}

std::string JacobiCoeffTable::to_json() const {
  std::ostringstream os;
  os << "{\"index\":" << index << ",\"singular\":{";
  bool first = true;
  for (const auto& [d, c] : singular) {
    if (!first) os << ",";
    first = false;
    os << "\"" << d << "\":\"" << c.get_str() << "\"";
  }
  os << "},\"positive\":{";
  first = true;
  for (const auto& [d, c] : positive) {
    if (!first) os << ",";
    first = false;
    os << "\"" << d << "\":\"" << c.get_str() << "\"";
  }
  os << "},\"dmax\":" << dmax << "}";
  return os.str();
}

// ---------------- expansions ----------------

QSeries F_expansion(const JacobiCoeffTable& table, long nu, long nmax) {
  require(nu >= 0, "F_expansion: nu must be >= 0");
  const long m = table.index;
  const long dfl = table.d_floor();
  const long n_min = -((-dfl) / (4 * m));  // smallest n with 4mn >= d_floor
  require(nmax >= n_min, "F_expansion: nmax below the principal part");
  QSeries out(1, n_min, nmax + 1);
  for (long n = n_min; n <= nmax; ++n) {
    const Rational nn(n);
    Rational sum = gegenbauer_p(2, 2 * nu, Rational(0), nn) *
                   table.coeff(4 * m * n);
    const long rmax = isqrt_long(4 * m * n - dfl);
    for (long r = 1; r <= rmax; ++r) {
      Rational c = table.coeff(4 * m * n - r * r);
      if (c == 0) continue;
      sum += Rational(2) * gegenbauer_p(2, 2 * nu, make_fraction(r * r, m), nn) * c;
    }
    if (sum != 0) out.set(n, sum);
  }
  return out;
}

QSeries G_expansion(const JacobiCoeffTable& table, long nmax) {
  const long m = table.index;
  require(m == 1 || is_prime_long(m),
          "G_expansion: index must be 1 or prime");
  // c*(N) = mu_count(N) c(N) with mu_count = #{mu mod 2m : N = -mu^2 (4m)};
  // for prime index this is 1 + kronecker(-N, p).
  auto mu_count = [m](long N) {
    long cnt = 0;
    long mod = 4 * m;
    long Nm = ((N % mod) + mod) % mod;
    for (long mu = 0; mu < 2 * m; ++mu)
      if ((Nm + mu * mu) % mod == 0) ++cnt;
    return cnt;
  };
  const long dfl = table.d_floor();
  const long n_min = -((-dfl) / 4);
  require(nmax >= n_min, "G_expansion: nmax below the principal part");
  QSeries out(1, n_min, nmax + 1);
  for (long n = n_min; n <= nmax; ++n) {
    Rational sum = Rational(mu_count(4 * n)) * table.coeff(4 * n);
    const long rmax = isqrt_long(4 * n - dfl);
    for (long r = 1; r <= rmax; ++r) {
      long N = 4 * n - r * r;
      Rational c = table.coeff(N);
      if (c == 0) continue;
      sum += Rational(2 * mu_count(N)) * c;
    }
    if (sum != 0) out.set(n, sum);
  }
  return out;
}

Rational constant_term_from_singular(long m,
                                     const std::map<long, Rational>& singular,
                                     long nu) {
  require(m >= 1, "constant_term_from_singular: index must be >= 1");
  Rational sum(0);
  for (const auto& [d, c] : singular) {
    if (d > 0 || c == 0) continue;
    long r2 = -d;
    long r = isqrt_long(r2);
    if (r * r != r2) continue;  // singular support lies on d = -r^2
    Rational weight = r == 0 ? Rational(1) : Rational(2);
    sum += weight * gegenbauer_p(2, 2 * nu, make_fraction(r2, m), Rational(0)) * c;
  }
  return sum;
}

// ---------------- bootstrap ----------------

namespace {

// Columns of the step-n system: one per fresh discriminant 4mn - r^2,
// r = 0..s with s+1 = #{r >= 0 : r^2 < 4m}; row nu has entries
// mult_r * p_{2,2nu}(r^2/m, n).
std::vector<std::vector<Rational>> step_matrix(long m,
                                               const std::vector<long>& nuset,
                                               long n) {
  long s = isqrt_long(4 * m - 1);
  std::vector<std::vector<Rational>> a;
  for (long nu : nuset) {
    std::vector<Rational> row;
    for (long r = 0; r <= s; ++r)
      row.push_back(Rational(r == 0 ? 1 : 2) *
                    gegenbauer_p(2, 2 * nu, make_fraction(r * r, m), Rational(n)));
    a.push_back(row);
  }
  return a;
}

// Exact Gaussian elimination; returns empty vector when the matrix is
// singular, otherwise the unique solution.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a,
                                  std::vector<Rational> b) {
  const size_t n = a.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return {};
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational f = a[row][col] / a[col][col];
      for (size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
      b[row] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace

Rational bootstrap_step_determinant(long m, const std::vector<long>& nuset,
                                    long n) {
  auto a = step_matrix(m, nuset, n);
  const size_t dim = a.size();
  require(!a.empty() && a[0].size() == dim,
          "bootstrap_step_determinant: system is not square");
  Rational det(1);
  for (size_t col = 0; col < dim; ++col) {
    size_t piv = col;
    while (piv < dim && a[piv][col] == 0) ++piv;
    if (piv == dim) return Rational(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (size_t row = col + 1; row < dim; ++row) {
      if (a[row][col] == 0) continue;
      Rational f = a[row][col] / a[col][col];
      for (size_t j = col; j < dim; ++j) a[row][j] -= f * a[col][j];
    }
  }
  return det;
}

JacobiCoeffTable bootstrap(long m, const std::map<long, Rational>& singular,
                           const std::vector<long>& nuset, long dmax) {
  require(m == 1 || m == 2, "bootstrap: index must be 1 or 2");
  require(dmax >= 1, "bootstrap: dmax must be >= 1");
  const long s = isqrt_long(4 * m - 1);  // fresh r values per step: 0..s
  require(static_cast<long>(nuset.size()) == s + 1,
          "bootstrap: need exactly " + std::to_string(s + 1) +
              " nu values for index " + std::to_string(m));
  std::set<long> seen;
  for (long nu : nuset) {
    require(nu >= 0 && nu <= 2,
            "bootstrap: target space M_" + std::to_string(2 + 2 * nu) +
                " outside {M2, M4, M6}");
    require(seen.insert(nu).second, "bootstrap: duplicate nu value");
  }

  JacobiCoeffTable table;
  table.index = m;
  table.singular = singular;
  const long steps = (dmax + 4 * m - 1) / (4 * m);
  table.dmax = 4 * m * steps;
  const long dfl = table.d_floor();

  // Holomorphy at infinity: the singular part alone must contribute nothing
  // to any negative power of q.
  const long n_min = -((-dfl) / (4 * m));
  for (long n = n_min; n < 0; ++n) {
    for (long nu : nuset) {
      Rational sum(0);
      const long rmax = isqrt_long(4 * m * n - dfl);
      for (long r = -rmax; r <= rmax; ++r)
        sum += gegenbauer_p(2, 2 * nu, make_fraction(r * r, m), Rational(n)) *
               table.coeff(4 * m * n - r * r);
      require(sum == 0, "bootstrap: not holomorphic; bootstrap inapplicable");
    }
  }

  // Constants c_nu pinning the one-dimensional targets; the weight-2 target
  // space is {0}, so its constant term must vanish.
  std::map<long, Rational> c_nu;
  for (long nu : nuset) {
    c_nu[nu] = constant_term_from_singular(m, singular, nu);
    if (nu == 0)
      require(c_nu[nu] == 0,
              "bootstrap: constant term inconsistent with M_2 = {0}");
  }
  QSeries e4 = build_form("E4", steps + 1);
  QSeries e6 = build_form("E6", steps + 1);

  for (long n = 1; n <= steps; ++n) {
    auto a = step_matrix(m, nuset, n);
    std::vector<Rational> b;
    for (size_t i = 0; i < nuset.size(); ++i) {
      const long nu = nuset[i];
      Rational rhs(0);
      if (nu == 1) rhs = c_nu[1] * e4.coeff_q(n);
      if (nu == 2) rhs = c_nu[2] * e6.coeff_q(n);
      // Move the already-known part of the r-sum to the right-hand side.
      const long rmax = isqrt_long(4 * m * n - dfl);
      for (long r = s + 1; r <= rmax; ++r) {
        Rational c = table.coeff(4 * m * n - r * r);
        if (c == 0) continue;
        rhs -= Rational(2) *
               gegenbauer_p(2, 2 * nu, make_fraction(r * r, m), Rational(n)) * c;
      }
      b.push_back(rhs);
    }
    auto x = solve_exact(a, b);
    if (x.empty()) {
      std::ostringstream os;
      os << "bootstrap: singular step system at n = " << n << ", nu set {";
      for (size_t i = 0; i < nuset.size(); ++i)
        os << (i ? "," : "") << nuset[i];
      os << "}";
      throw error(os.str());
    }
    for (long r = 0; r <= s; ++r) table.positive[4 * m * n - r * r] = x[r];
  }
  return table;
}

}  // namespace singmod
