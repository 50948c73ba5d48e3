#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylq {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_zero(const Int& x) { return sgn(x) == 0; }

// Throws if |x| does not fit a signed 64-bit integer.
std::int64_t to_i64(const Int& x);

// Laurent polynomial in one formal variable with integer coefficients.
// Zero is the empty coefficient vector; otherwise c_.front() and c_.back()
// are nonzero and c_[k] is the coefficient of x^(lo_+k).
class Laurent {
public:
  Laurent() = default;
  Laurent(long c) { if (c != 0) { lo_ = 0; c_ = {Int(c)}; } }
  Laurent(const Int& c) { if (!weylq::is_zero(c)) { lo_ = 0; c_ = {c}; } }
  static Laurent monomial(const Int& c, long e);

  bool is_zero() const { return c_.empty(); }
  long lo() const { return lo_; }           // only valid when nonzero
  long hi() const { return lo_ + long(c_.size()) - 1; }
  Int coeff(long e) const;
  const Int& lead() const { return c_.back(); }
  long nterms() const;

  Laurent operator-() const;
  Laurent operator+(const Laurent&) const;
  Laurent operator-(const Laurent&) const;
  Laurent operator*(const Laurent&) const;
  Laurent& operator+=(const Laurent& o) { *this = *this + o; return *this; }
  Laurent& operator-=(const Laurent& o) { *this = *this - o; return *this; }
  Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }
  bool operator==(const Laurent& o) const { return lo_ == o.lo_ && c_ == o.c_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  // Multiply by x^k.
  Laurent shifted(long k) const;
  // gcd of the integer coefficients, > 0 (0 for the zero polynomial).
  Int content() const;
  void divide_content(const Int& g);

  // Exact division; returns false if b does not divide a.
  static bool try_divide_exact(const Laurent& a, const Laurent& b, Laurent& q);
  // gcd of the primitive parts, normalized with lo()==0, content 1 and
  // positive leading coefficient. gcd(0,0)=0.
  static Laurent gcd(const Laurent& a, const Laurent& b);

  // Substitute x -> x^k (k != 0; negative k mirrors the exponents).
  Laurent inflate(long k) const;

  std::string str(const std::string& var = "q") const;
  // exponent -> coefficient, for serialization
  std::map<long, Int> coeff_map() const;

private:
  long lo_ = 0;
  std::vector<Int> c_;
  void trim();
  friend class QScalar;
};

// Field of fractions of the Laurent polynomial ring.  Canonical form:
// denominator has lo()==0, a nonzero constant term, positive leading
// coefficient, and is coprime to the numerator (integer content and
// polynomial part both).
class QScalar {
public:
  QScalar() = default;
  QScalar(long c) : n_(c), d_(1) {}
  QScalar(const Int& c) : n_(c), d_(1) {}
  QScalar(const Rat& c) : n_(c.get_num()), d_(c.get_den()) { normalize(); }
  QScalar(const Laurent& num) : n_(num), d_(1) {}
  QScalar(Laurent num, Laurent den);
  static QScalar v_pow(long e) { return QScalar(Laurent::monomial(1, e)); }

  bool is_zero() const { return n_.is_zero(); }
  bool is_one() const { return n_ == d_; }
  const Laurent& num() const { return n_; }
  const Laurent& den() const { return d_; }

  QScalar operator-() const;
  QScalar operator+(const QScalar&) const;
  QScalar operator-(const QScalar&) const;
  QScalar operator*(const QScalar&) const;
  QScalar operator/(const QScalar&) const;
  QScalar& operator+=(const QScalar& o) { *this = *this + o; return *this; }
  QScalar& operator-=(const QScalar& o) { *this = *this - o; return *this; }
  QScalar& operator*=(const QScalar& o) { *this = *this * o; return *this; }
  QScalar& operator/=(const QScalar& o) { *this = *this / o; return *this; }
  QScalar inverse() const;
  bool operator==(const QScalar& o) const { return n_ == o.n_ && d_ == o.d_; }
  bool operator!=(const QScalar& o) const { return !(*this == o); }

  bool is_laurent() const { return d_.c_.size() == 1 && d_.c_[0] == 1; }
  // Size proxy used for pivot selection in elimination.
  long weight() const;

  std::string str(const std::string& var = "q") const;

private:
  Laurent n_;        // default: zero
  Laurent d_ = Laurent(1);
  void normalize();
};

}  // namespace weylq
