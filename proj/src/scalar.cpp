#include "scalar.hpp"

#include <sstream>

namespace weylq {

std::int64_t to_i64(const Int& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("integer does not fit int64");
  return x.get_si();
}

Laurent Laurent::monomial(const Int& c, long e) {
  Laurent r;
  if (!weylq::is_zero(c)) {
    r.lo_ = e;
    r.c_ = {c};
  }
  return r;
}

void Laurent::trim() {
  std::size_t b = 0, e = c_.size();
  while (b < e && weylq::is_zero(c_[b])) ++b;
  while (e > b && weylq::is_zero(c_[e - 1])) --e;
  if (b == e) {
    c_.clear();
    lo_ = 0;
    return;
  }
  if (b > 0 || e < c_.size()) {
    c_ = std::vector<Int>(c_.begin() + b, c_.begin() + e);
    lo_ += long(b);
  }
}

Int Laurent::coeff(long e) const {
  if (c_.empty() || e < lo_ || e > hi()) return Int(0);
  return c_[std::size_t(e - lo_)];
}

long Laurent::nterms() const {
  long n = 0;
  for (const auto& c : c_)
    if (!weylq::is_zero(c)) ++n;
  return n;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  long nlo = std::min(lo_, o.lo_);
  long nhi = std::max(hi(), o.hi());
  Laurent r;
  r.lo_ = nlo;
  r.c_.assign(std::size_t(nhi - nlo + 1), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[std::size_t(lo_ - nlo) + i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[std::size_t(o.lo_ - nlo) + i] += o.c_[i];
  r.trim();
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  if (is_zero() || o.is_zero()) return Laurent();
  Laurent r;
  r.lo_ = lo_ + o.lo_;
  r.c_.assign(c_.size() + o.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (weylq::is_zero(c_[i])) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

Laurent Laurent::shifted(long k) const {
  Laurent r = *this;
  if (!r.c_.empty()) r.lo_ += k;
  return r;
}

Int Laurent::content() const {
  Int g(0);
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void Laurent::divide_content(const Int& g) {
  for (auto& c : c_) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    if (!weylq::is_zero(r)) throw std::logic_error("divide_content: not divisible");
    c = q;
  }
}

bool Laurent::try_divide_exact(const Laurent& a, const Laurent& b, Laurent& q) {
  if (b.is_zero()) return false;
  if (a.is_zero()) {
    q = Laurent();
    return true;
  }
  // Work with polynomial parts; the exponent shift is reattached at the end.
  long shift = a.lo_ - b.lo_;
  std::vector<Int> rem = a.c_;
  long dr = long(rem.size()) - 1, db = long(b.c_.size()) - 1;
  if (dr < db) return false;
  std::vector<Int> quot(std::size_t(dr - db + 1), Int(0));
  for (long k = dr - db; k >= 0; --k) {
    Int& top = rem[std::size_t(k + db)];
    if (weylq::is_zero(top)) continue;
    Int c, r;
    mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), b.c_.back().get_mpz_t());
    if (!weylq::is_zero(r)) return false;
    quot[std::size_t(k)] = c;
    for (long j = 0; j <= db; ++j) rem[std::size_t(k + j)] -= c * b.c_[std::size_t(j)];
  }
  for (const auto& c : rem)
    if (!weylq::is_zero(c)) return false;
  Laurent res;
  res.lo_ = shift;
  res.c_ = std::move(quot);
  res.trim();
  q = res;
  return true;
}

namespace {
// Pseudo-remainder of polynomial coefficient vectors: repeatedly scale by
// lead(b) and cancel the top coefficient; the buffer never shrinks mid-loop.
std::vector<Int> prem(std::vector<Int> a, const std::vector<Int>& b) {
  long db = long(b.size()) - 1;
  const Int& lb = b.back();
  long d = long(a.size()) - 1;
  while (d >= 0 && weylq::is_zero(a[std::size_t(d)])) --d;
  while (d >= db) {
    Int top = a[std::size_t(d)];
    if (!weylq::is_zero(top)) {
      for (auto& c : a) c *= lb;
      for (long j = 0; j <= db; ++j) a[std::size_t(d - db + j)] -= top * b[std::size_t(j)];
    }
    --d;
    while (d >= 0 && weylq::is_zero(a[std::size_t(d)])) --d;
  }
  a.resize(std::size_t(d + 1));
  return a;
}

void make_primitive(std::vector<Int>& v) {
  Int g(0);
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (weylq::is_zero(g)) return;
  if (sgn(v.back()) < 0) g = -g;
  for (auto& c : v) {
    Int q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    c = q;
  }
}
}  // namespace

Laurent Laurent::gcd(const Laurent& a, const Laurent& b) {
  if (a.is_zero() && b.is_zero()) return Laurent();
  if (a.is_zero() || b.is_zero()) {
    Laurent r = a.is_zero() ? b : a;
    r.lo_ = 0;
    make_primitive(r.c_);
    return r;
  }
  std::vector<Int> A = a.c_, B = b.c_;
  make_primitive(A);
  make_primitive(B);
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    std::vector<Int> R = prem(A, B);
    make_primitive(R);
    A = std::move(B);
    B = std::move(R);
  }
  make_primitive(A);
  Laurent r;
  r.lo_ = 0;
  r.c_ = std::move(A);
  r.trim();
  return r;
}

Laurent Laurent::inflate(long k) const {
  if (k == 0) throw std::invalid_argument("inflate by 0");
  if (is_zero()) return Laurent();
  Laurent r;
  if (k > 0) {
    r.lo_ = lo_ * k;
    r.c_.assign(std::size_t((long(c_.size()) - 1) * k + 1), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * std::size_t(k)] = c_[i];
  } else {
    long m = -k;
    r.lo_ = hi() * k;
    r.c_.assign(std::size_t((long(c_.size()) - 1) * m + 1), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      r.c_[std::size_t(long(c_.size() - 1 - i) * m)] = c_[i];
  }
  r.trim();
  return r;
}

std::string Laurent::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long e = hi(); e >= lo_; --e) {
    Int c = coeff(e);
    if (weylq::is_zero(c)) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Int ac = abs(c);
    if (ac != 1 || e == 0) os << ac.get_str();
    if (e != 0) {
      if (ac != 1) os << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

std::map<long, Int> Laurent::coeff_map() const {
  std::map<long, Int> m;
  for (long e = c_.empty() ? 1 : lo_; e <= hi() && !c_.empty(); ++e) {
    Int c = coeff(e);
    if (!weylq::is_zero(c)) m[e] = c;
  }
  return m;
}

QScalar::QScalar(Laurent num, Laurent den) : n_(std::move(num)), d_(std::move(den)) {
  if (d_.is_zero()) throw std::domain_error("QScalar: zero denominator");
  normalize();
}

void QScalar::normalize() {
  if (n_.is_zero()) {
    d_ = Laurent(1);
    return;
  }
  // clear the denominator's monomial factor
  long s = d_.lo();
  if (s != 0) {
    d_ = d_.shifted(-s);
    n_ = n_.shifted(-s);
  }
  Int gn = n_.content(), gd = d_.content();
  Int g;
  mpz_gcd(g.get_mpz_t(), gn.get_mpz_t(), gd.get_mpz_t());
  if (g != 1) {
    n_.divide_content(g);
    d_.divide_content(g);
  }
  Laurent h = Laurent::gcd(n_, d_);
  if (!h.is_zero() && (h.hi() > 0 || h.c_[0] != 1)) {
    Laurent qn, qd;
    if (!Laurent::try_divide_exact(n_, h, qn) || !Laurent::try_divide_exact(d_, h, qd))
      throw std::logic_error("QScalar: gcd does not divide");
    n_ = qn;
    d_ = qd;
  }
  if (sgn(d_.lead()) < 0) {
    n_ = -n_;
    d_ = -d_;
  }
}

QScalar QScalar::operator-() const {
  QScalar r = *this;
  r.n_ = -r.n_;
  return r;
}

QScalar QScalar::operator+(const QScalar& o) const {
  return QScalar(n_ * o.d_ + o.n_ * d_, d_ * o.d_);
}

QScalar QScalar::operator-(const QScalar& o) const {
  return QScalar(n_ * o.d_ - o.n_ * d_, d_ * o.d_);
}

QScalar QScalar::operator*(const QScalar& o) const { return QScalar(n_ * o.n_, d_ * o.d_); }

QScalar QScalar::operator/(const QScalar& o) const {
  if (o.is_zero()) throw std::domain_error("QScalar: division by zero");
  return QScalar(n_ * o.d_, d_ * o.n_);
}

QScalar QScalar::inverse() const {
  if (is_zero()) throw std::domain_error("QScalar: inverse of zero");
  return QScalar(d_, n_);
}

long QScalar::weight() const {
  if (is_zero()) return 0;
  return (n_.hi() - n_.lo()) + (d_.hi() - d_.lo()) + n_.nterms() + d_.nterms();
}

std::string QScalar::str(const std::string& var) const {
  if (is_laurent()) return n_.str(var);
  return "(" + n_.str(var) + ")/(" + d_.str(var) + ")";
}

}  // namespace weylq
