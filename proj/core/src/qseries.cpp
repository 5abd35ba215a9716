#include "singmod/qseries.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace singmod {

// ---------------- Rational helpers ----------------

Rational parse_rational(const std::string& s) {
  require(!s.empty(), "parse_rational: empty string");
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw error("parse_rational: malformed rational '" + s + "'");
  require(q.get_den() != 0, "parse_rational: zero denominator in '" + s + "'");
  mpq_canonicalize(q.get_mpq_t());
  return q;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Integer binomial(long n, long k) {
  require(n >= 0, "binomial: negative upper index");
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

Rational pow_rational(const Rational& r, long e) {
  require(e >= 0, "pow_rational: negative exponent");
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(),
             static_cast<unsigned long>(e));
  mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(),
             static_cast<unsigned long>(e));
  return out;  // powers of a canonical rational are canonical
}

Integer round_to_integer(const Rational& r) {
  // floor((2*num + den) / (2*den)) for r >= 0; mirrored for r < 0.
  Integer num = r.get_num(), den = r.get_den(), out;
  Integer twice = 2 * num;
  if (sgn(r) >= 0) {
    Integer t = twice + den;
    mpz_fdiv_q(out.get_mpz_t(), t.get_mpz_t(), Integer(2 * den).get_mpz_t());
  } else {
    Integer t = twice - den;
    mpz_cdiv_q(out.get_mpz_t(), t.get_mpz_t(), Integer(2 * den).get_mpz_t());
  }
  return out;
}

// ---------------- QSeries basics ----------------

QSeries::QSeries(long scale, long floor, long order)
    : scale_(scale), floor_(floor), order_(order) {
  require(scale >= 1, "QSeries: scale must be >= 1");
  require(floor <= order, "QSeries: floor must not exceed order");
}

QSeries QSeries::constant(const Rational& c, long order) {
  QSeries s(1, 0, order);
  if (c != 0 && order > 0) s.coeffs_[0] = c;
  return s;
}

QSeries QSeries::monomial(const Rational& c, long e, long scale, long order) {
  QSeries s(scale, std::min(e, order), order);
  require(e < order, "QSeries::monomial: exponent beyond order");
  if (c != 0) s.coeffs_[e] = c;
  return s;
}

void QSeries::set(long e, const Rational& c) {
  require(e >= floor_ && e < order_, "QSeries::set: exponent out of range");
  if (c == 0)
    coeffs_.erase(e);
  else
    coeffs_[e] = c;
}

const Rational& QSeries::at(long e) const {
  static const Rational zero(0);
  require(e < order_, "QSeries::at: coefficient beyond truncation order");
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? zero : it->second;
}

Rational QSeries::coeff_q(const Rational& x) const {
  // Scaled exponent e = x * scale; off-lattice exponents inside the tracked
  // window are exact zeros, beyond the window they are errors.
  Rational ex = x * scale_;
  if (!is_integer(ex)) {
    require(x * scale_ < Rational(order_),
            "QSeries::coeff_q: exponent beyond truncation order");
    return Rational(0);
  }
  long e = static_cast<long>(ex.get_num().get_si());
  return at(e);
}

bool QSeries::is_known_zero() const { return coeffs_.empty(); }

void QSeries::tighten_floor() {
  floor_ = coeffs_.empty() ? order_ : std::min(order_, coeffs_.begin()->first);
}

void QSeries::drop_zeros() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == 0 || it->first >= order_ || it->first < floor_)
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

void QSeries::normalize_scale() {
  Integer g(scale_);
  for (const auto& [e, c] : coeffs_) {
    (void)c;
    g = gcd(g, Integer(e));
    if (g == 1) return;
  }
  long gl = static_cast<long>(g.get_si());
  if (gl <= 1) return;
  std::map<long, Rational> nc;
  for (auto& [e, c] : coeffs_) nc[e / gl] = c;
  coeffs_ = std::move(nc);
  scale_ /= gl;
  // floor rounds up, order rounds down: both directions stay sound because
  // every surviving lattice point below/above keeps its known value.
  floor_ = (floor_ >= 0) ? (floor_ + gl - 1) / gl
                         : -((-floor_) / gl);
  order_ = (order_ >= 0) ? order_ / gl : -(((-order_) + gl - 1) / gl);
  if (floor_ > order_) floor_ = order_;
}

void QSeries::promote_to_common_scale(QSeries& a, QSeries& b) {
  if (a.scale_ == b.scale_) return;
  long l = std::lcm(a.scale_, b.scale_);
  for (QSeries* s : {&a, &b}) {
    long f = l / s->scale_;
    if (f == 1) continue;
    std::map<long, Rational> nc;
    for (auto& [e, c] : s->coeffs_) nc[e * f] = c;
    s->coeffs_ = std::move(nc);
    s->scale_ = l;
    s->floor_ *= f;
    s->order_ *= f;
  }
}

// ---------------- ring operations ----------------

QSeries& QSeries::operator+=(const QSeries& o) {
  QSeries rhs = o;
  promote_to_common_scale(*this, rhs);
  order_ = std::min(order_, rhs.order_);
  floor_ = std::min(floor_, rhs.floor_);
  for (auto& [e, c] : rhs.coeffs_) {
    if (e >= order_) break;
    auto [it, inserted] = coeffs_.emplace(e, c);
    if (!inserted) it->second += c;
  }
  drop_zeros();
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  QSeries neg = o;
  neg *= Rational(-1);
  return *this += neg;
}

QSeries& QSeries::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [e, v] : coeffs_) {
    (void)e;
    v *= c;
  }
  return *this;
}

QSeries series_mul(const QSeries& a_in, const QSeries& b_in) {
  QSeries a = a_in, b = b_in;
  QSeries::promote_to_common_scale(a, b);
  long floor = a.floor_ + b.floor_;
  long order = std::min(a.order_ + b.floor_, b.order_ + a.floor_);
  QSeries r(a.scale_, floor, std::max(floor, order));
  if (order <= floor || a.coeffs_.empty() || b.coeffs_.empty()) return r;

  const bool sparse = std::min(a.coeffs_.size(), b.coeffs_.size()) <= 48;
  if (sparse) {
    const QSeries& s = (a.coeffs_.size() <= b.coeffs_.size()) ? a : b;
    const QSeries& d = (&s == &a) ? b : a;
    for (const auto& [es, cs] : s.coeffs_) {
      for (const auto& [ed, cd] : d.coeffs_) {
        long e = es + ed;
        if (e >= order) break;
        auto [it, inserted] = r.coeffs_.emplace(e, cs * cd);
        if (!inserted) it->second += cs * cd;
      }
    }
  } else {
    long na = a.order_ - a.floor_, nb = b.order_ - b.floor_;
    std::vector<Rational> va(na), vb(nb), vr(order - floor);
    for (const auto& [e, c] : a.coeffs_) va[e - a.floor_] = c;
    for (const auto& [e, c] : b.coeffs_) vb[e - b.floor_] = c;
    for (long i = 0; i < na; ++i) {
      if (va[i] == 0) continue;
      long jmax = std::min(nb, order - floor - i);
      for (long j = 0; j < jmax; ++j) {
        if (vb[j] == 0) continue;
        vr[i + j] += va[i] * vb[j];
      }
    }
    for (long t = 0; t < order - floor; ++t)
      if (vr[t] != 0) r.coeffs_.emplace_hint(r.coeffs_.end(), floor + t,
                                             std::move(vr[t]));
  }
  r.drop_zeros();
  return r;
}

QSeries series_inv(const QSeries& a_in, long order) {
  QSeries a = a_in;
  a.tighten_floor();
  require(!a.coeffs_.empty(), "series_inv: non-invertible series");
  long f = a.floor_;
  long len = a.order_ - f;  // usable coefficient window of a
  long border = std::min(order, a.order_ - 2 * f);
  require(border > -f, "series_inv: truncation order too small");

  std::vector<Rational> va(len);
  for (const auto& [e, c] : a.coeffs_) va[e - f] = c;
  require(va[0] != 0, "series_inv: non-invertible series");

  long nb = border + f;  // number of inverse coefficients to produce
  std::vector<Rational> vb(nb);
  Rational lead = 1 / va[0];
  vb[0] = lead;
  for (long t = 1; t < nb; ++t) {
    Rational acc(0);
    long smax = std::min<long>(t, len - 1);
    for (long s = 1; s <= smax; ++s) {
      if (va[s] == 0) continue;
      acc += va[s] * vb[t - s];
    }
    if (acc != 0) vb[t] = -lead * acc;
  }
  QSeries b(a.scale_, -f, border);
  for (long t = 0; t < nb; ++t)
    if (vb[t] != 0)
      b.coeffs_.emplace_hint(b.coeffs_.end(), -f + t, std::move(vb[t]));
  return b;
}

QSeries series_div(const QSeries& a, const QSeries& b) {
  QSeries bb = b;
  bb.tighten_floor();
  QSeries inv = series_inv(bb, bb.order_ - 2 * bb.floor_);
  return series_mul(a, inv);
}

QSeries rescale(const QSeries& a, const Rational& t) {
  require(sgn(t) > 0, "rescale: substitution exponent must be positive");
  long p = static_cast<long>(t.get_num().get_si());
  long q = static_cast<long>(t.get_den().get_si());
  QSeries r(a.scale_ * q, a.floor_ * p, a.order_ * p);
  for (const auto& [e, c] : a.coeffs_) r.coeffs_[e * p] = c;
  r.normalize_scale();
  return r;
}

QSeries q_derivative(const QSeries& a) {
  QSeries r = a;
  for (auto it = r.coeffs_.begin(); it != r.coeffs_.end();) {
    it->second *= make_fraction(it->first, r.scale_);
    if (it->second == 0)
      it = r.coeffs_.erase(it);
    else
      ++it;
  }
  return r;
}

QSeries series_pow(const QSeries& a, long e) {
  require(e >= 0, "series_pow: negative exponent");
  if (e == 0) {
    QSeries one(a.scale_, 0, std::max<long>(1, a.order_ - a.floor_));
    one.coeffs_[0] = 1;
    return one;
  }
  QSeries base = a, acc = a;
  long k = e - 1;
  // left-to-right would re-balance truncation; simple square-and-multiply
  // keeps the pessimistic min-rule and is plenty fast for our exponents.
  while (k > 0) {
    if (k & 1) acc = series_mul(acc, base);
    k >>= 1;
    if (k > 0) base = series_mul(base, base);
  }
  return acc;
}

QSeries QSeries::one_minus_qn_pow(long n, const Integer& N, long order) {
  require(n >= 1, "one_minus_qn_pow: n must be >= 1");
  QSeries r(1, 0, order);
  for (long k = 0; n * k < order; ++k) {
    Integer b;
    mpz_bin_ui(b.get_mpz_t(), N.get_mpz_t(), static_cast<unsigned long>(k));
    if (k % 2 != 0) b = -b;
    if (b != 0) r.coeffs_[n * k] = Rational(b);
  }
  return r;
}

// ---------------- serialization ----------------

std::string QSeries::to_json() const {
  std::ostringstream os;
  os << "{\"scale\":" << scale_ << ",\"floor\":" << floor_
     << ",\"order\":" << order_ << ",\"coeffs\":[";
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    if (!first) os << ",";
    first = false;
    os << "[" << e << ",\"" << c.get_str() << "\"]";
  }
  os << "]}";
  return os.str();
}

namespace {

// Minimal strict parser for the QSeries JSON schema only.
struct JsonCursor {
  const std::string& s;
  size_t i = 0;
  explicit JsonCursor(const std::string& text) : s(text) {}
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  void expect(char c) {
    skip_ws();
    require(i < s.size() && s[i] == c,
            std::string("QSeries::from_json: expected '") + c + "'");
    ++i;
  }
  bool peek(char c) {
    skip_ws();
    return i < s.size() && s[i] == c;
  }
  std::string key() {
    expect('"');
    size_t start = i;
    while (i < s.size() && s[i] != '"') ++i;
    require(i < s.size(), "QSeries::from_json: unterminated string");
    return s.substr(start, (i++) - start);
  }
  long integer() {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    require(i > start, "QSeries::from_json: expected integer");
    return std::stol(s.substr(start, i - start));
  }
};

}  // namespace

QSeries QSeries::from_json(const std::string& text) {
  JsonCursor c(text);
  c.expect('{');
  long scale = 1, floor = 0, order = 0;
  std::map<long, Rational> coeffs;
  bool first = true;
  while (!c.peek('}')) {
    if (!first) c.expect(',');
    first = false;
    std::string k = c.key();
    c.expect(':');
    if (k == "scale")
      scale = c.integer();
    else if (k == "floor")
      floor = c.integer();
    else if (k == "order")
      order = c.integer();
    else if (k == "coeffs") {
      c.expect('[');
      while (!c.peek(']')) {
        if (!coeffs.empty()) c.expect(',');
        c.expect('[');
        long e = c.integer();
        c.expect(',');
        std::string v = c.key();
        c.expect(']');
        coeffs[e] = parse_rational(v);
      }
      c.expect(']');
    } else {
      throw error("QSeries::from_json: unknown key '" + k + "'");
    }
  }
  c.expect('}');
  QSeries out(scale, floor, order);
  for (auto& [e, v] : coeffs) out.set(e, v);
  return out;
}

std::string QSeries::to_text(long max_terms) const {
  std::ostringstream os;
  long shown = 0;
  for (const auto& [e, c] : coeffs_) {
    if (shown >= max_terms) {
      os << " + ...";
      break;
    }
    Rational magq = abs(c);
    std::string mag = magq.get_str();
    if (shown == 0)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    if (e == 0) {
      os << mag;
    } else {
      if (mag != "1") os << mag << "*";
      os << "q";
      if (e != scale_) {
        os << "^";
        if (e % scale_ == 0)
          os << (e / scale_);
        else
          os << "(" << e << "/" << scale_ << ")";
      }
    }
    ++shown;
  }
  if (shown == 0) os << "0";
  os << " + O(q";
  if (order_ != scale_) {
    os << "^";
    if (order_ % scale_ == 0)
      os << (order_ / scale_);
    else
      os << "(" << order_ << "/" << scale_ << ")";
  }
  os << ")";
  return os.str();
}

}  // namespace singmod
