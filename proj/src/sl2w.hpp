#pragma once

#include <array>
#include <map>

#include "errors.hpp"
#include "scalar.hpp"

namespace weylq {

// The algebra with generators e, f, t^{+-1} over Q(eps) subject to
// t e t^{-1} = eps e,  t f t^{-1} = eps^{-1} f,  e f - f e = (t^2 - t^{-2})/(eps - eps^{-1}).
// Elements are kept in the normal form  sum c * f^a t^m e^b.
class SL2StarElement {
public:
  // (a, m, b) -> coefficient, word f^a t^m e^b
  std::map<std::array<long, 3>, QScalar> terms;

  static SL2StarElement zero() { return {}; }
  static SL2StarElement one();
  static SL2StarElement e();
  static SL2StarElement f();
  static SL2StarElement t(long power = 1);
  static SL2StarElement monomial(long a, long m, long b, const QScalar& c);

  bool is_zero() const { return terms.empty(); }
  void add_term(long a, long m, long b, const QScalar& c);
  SL2StarElement operator+(const SL2StarElement& o) const;
  SL2StarElement operator-(const SL2StarElement& o) const;
  SL2StarElement operator*(const SL2StarElement& o) const;  // normal-form product
  SL2StarElement scaled(const QScalar& c) const;
  bool operator==(const SL2StarElement& o) const { return terms == o.terms; }
  std::string str() const;
};

// Omega = (eps t^2 + eps^{-1} t^{-2})/(eps - eps^{-1})^2 + f e; central.
SL2StarElement sl2_omega();

// Vector in Q = C_eps[SL2*] (x)_{C[e]} C_chi with basis v_{mk} = t^m Omega^k v.
struct QModuleVector {
  std::map<std::pair<long, long>, QScalar> terms;  // (m, k) -> coefficient
  bool is_zero() const { return terms.empty(); }
  void add(long m, long k, const QScalar& c);
  QModuleVector operator-(const QModuleVector& o) const;
  bool operator==(const QModuleVector& o) const { return terms == o.terms; }
};

QModuleVector act(const SL2StarElement& x, const QModuleVector& w);

struct WhittakerReport {
  int max_m = 0, max_k = 0;
  std::vector<std::pair<long, long>> whittaker_basis;  // (m,k) killed by e-1
  std::vector<int> hk0_rank_by_degree;                 // one entry per k
  std::vector<int> hk1_rank_by_degree;
  bool hk1_nonzero = false;
};

// symbolic eps (generic)
WhittakerReport whittaker_and_hecke(int max_m, int max_k);
// rational specialization; eps in {0, 1, -1} is rejected
WhittakerReport whittaker_and_hecke_rational(const Rat& eps, int max_m, int max_k);
// eps a primitive n-th root of unity: exact arithmetic modulo the n-th
// cyclotomic polynomial
WhittakerReport whittaker_and_hecke_root_of_unity(int n, int max_m, int max_k);

}  // namespace weylq
