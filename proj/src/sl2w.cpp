#include "sl2w.hpp"

#include <functional>
#include <sstream>
#include <vector>

namespace weylq {

namespace {

QScalar eps_pow(long m) { return QScalar::v_pow(m); }

QScalar eps_minus_inv() { return eps_pow(1) - eps_pow(-1); }

}  // namespace

SL2StarElement SL2StarElement::one() { return monomial(0, 0, 0, QScalar(1)); }
SL2StarElement SL2StarElement::e() { return monomial(0, 0, 1, QScalar(1)); }
SL2StarElement SL2StarElement::f() { return monomial(1, 0, 0, QScalar(1)); }
SL2StarElement SL2StarElement::t(long power) { return monomial(0, power, 0, QScalar(1)); }

SL2StarElement SL2StarElement::monomial(long a, long m, long b, const QScalar& c) {
  SL2StarElement x;
  x.add_term(a, m, b, c);
  return x;
}

void SL2StarElement::add_term(long a, long m, long b, const QScalar& c) {
  if (c.is_zero()) return;
  std::array<long, 3> key{a, m, b};
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

SL2StarElement SL2StarElement::operator+(const SL2StarElement& o) const {
  SL2StarElement r = *this;
  for (const auto& [k, c] : o.terms) r.add_term(k[0], k[1], k[2], c);
  return r;
}

SL2StarElement SL2StarElement::operator-(const SL2StarElement& o) const {
  SL2StarElement r = *this;
  for (const auto& [k, c] : o.terms) r.add_term(k[0], k[1], k[2], -c);
  return r;
}

SL2StarElement SL2StarElement::scaled(const QScalar& c) const {
  SL2StarElement r;
  for (const auto& [k, x] : terms) r.add_term(k[0], k[1], k[2], x * c);
  return r;
}

SL2StarElement SL2StarElement::operator*(const SL2StarElement& o) const {
  // worklist of intermediate words c * f^a t^m e^b f^{a'} t^{m'} e^{b'}
  struct Word {
    long a, m, b, a2, m2, b2;
    QScalar c;
  };
  SL2StarElement out;
  std::vector<Word> work;
  for (const auto& [k1, c1] : terms)
    for (const auto& [k2, c2] : o.terms)
      work.push_back(Word{k1[0], k1[1], k1[2], k2[0], k2[1], k2[2], c1 * c2});
  while (!work.empty()) {
    Word w = work.back();
    work.pop_back();
    if (w.c.is_zero()) continue;
    if (w.b == 0) {
      // t^m past f^{a2}: t^m f = eps^{-m} f t^m
      out.add_term(w.a + w.a2, w.m + w.m2, w.b2, w.c * eps_pow(-w.m * w.a2));
      continue;
    }
    if (w.a2 == 0) {
      // e^b past t^{m2}
      out.add_term(w.a, w.m + w.m2, w.b + w.b2, w.c * eps_pow(-w.m2 * w.b));
      continue;
    }
    // split the last e of the first block across the first f of the second:
    // e f = f e + (t^2 - t^{-2})/(eps - eps^{-1})
    // f^a t^m e^{b-1} f (e f^{a2-1}) t^{m2} e^{b2}  -> regroup stepwise
    // branch 1: f^a t^m e^{b-1} f e f^{a2-1} t^{m2} e^{b2}
    //   handled as (f^a t^m e^{b-1} f) * (e * rest): push two-stage words
    // branch 2,3: f^a t^m e^{b-1} t^{+-2} f^{a2-1} t^{m2} e^{b2} scaled
    {
      // branch 1: first move e^{b-1} f: produces f (eps^0) => new word
      // f^{a} t^{m} e^{b-1} f ... ; we express it as:
      //   (f^a t^m) [e^{b-1} f] e f^{a2-1} t^{m2} e^{b2}
      // To stay within the 2-block shape, peel a single f to the left block:
      //   e^{b-1} f = eps^{0}: handled by a recursive worklist entry with
      //   left block f^{a}t^{m}e^{b-1}, right block f^{1}t^{0}e^{0}; the
      //   continuation multiplies the remainder afterwards.
    }
    // Simpler: reduce e^b f^{a2} by one crossing at the boundary:
    // left = f^a t^m e^{b-1}, cross = e f, right = f^{a2-1} t^{m2} e^{b2}
    // e f = f e + g with g = (t^2 - t^{-2})/(eps - eps^{-1})
    QScalar inv = QScalar(1) / eps_minus_inv();
    // term (f e): word f^a t^m e^{b-1} f e f^{a2-1} t^{m2} e^{b2}
    //   move e^{b-1} past the new f first: e^{b-1} f = f e^{b-1} + lower terms;
    //   to avoid re-deriving, push as two separate crossings:
    //   f^a t^m e^{b-1} | f^{1} t^{0} e^{1+0}... the e after f blocks with
    //   f^{a2-1}: push word (a, m, b-1, 1, 0, 0) * tail (0,0,1,a2-1,m2,b2):
    //   that breaks the 2-block invariant, so instead express directly:
    // word1: (f^a t^m e^{b-1}) (f) (e) (f^{a2-1} t^{m2} e^{b2})
    // Process by first resolving (e^{b-1})(f): recursion handles it if we
    // temporarily treat the trailing (e)(f^{a2-1} t^{m2} e^{b2}) as the right
    // block of a later multiplication.  We therefore compute
    //   X = (f^a t^m e^{b-1}) * (f t^0 e^0)  and then  X * (e^1 remainder).
    SL2StarElement left = SL2StarElement::monomial(w.a, w.m, w.b - 1, w.c);
    SL2StarElement fe_part = left * SL2StarElement::monomial(1, 0, 0, QScalar(1));
    for (const auto& [k, c] : fe_part.terms)
      work.push_back(Word{k[0], k[1], k[2] + 1, w.a2 - 1, w.m2, w.b2, c});
    // g terms: f^a t^m e^{b-1} t^{+-2} f^{a2-1} t^{m2} e^{b2}
    // e^{b-1} t^{+-2} = eps^{-(+-2)(b-1)} t^{+-2} e^{b-1}
    for (int sign : {1, -1}) {
      QScalar c = w.c * inv * QScalar(sign) * eps_pow(-2 * sign * (w.b - 1));
      work.push_back(Word{w.a, w.m + 2 * sign, w.b - 1, w.a2 - 1, w.m2, w.b2, c});
    }
  }
  return out;
}

std::string SL2StarElement::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str("eps") << ")";
    if (k[0] != 0) os << "*f^" << k[0];
    if (k[1] != 0) os << "*t^" << k[1];
    if (k[2] != 0) os << "*e^" << k[2];
  }
  return os.str();
}

SL2StarElement sl2_omega() {
  QScalar den = eps_minus_inv() * eps_minus_inv();
  SL2StarElement w;
  w.add_term(0, 2, 0, eps_pow(1) / den);
  w.add_term(0, -2, 0, eps_pow(-1) / den);
  w.add_term(1, 0, 1, QScalar(1));
  return w;
}

void QModuleVector::add(long m, long k, const QScalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(m, k);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

QModuleVector QModuleVector::operator-(const QModuleVector& o) const {
  QModuleVector r = *this;
  for (const auto& [k, c] : o.terms) r.add(k.first, k.second, -c);
  return r;
}

QModuleVector act(const SL2StarElement& x, const QModuleVector& w) {
  QModuleVector out;
  QScalar den = eps_minus_inv() * eps_minus_inv();
  for (const auto& [key, coeff] : x.terms) {
    long a = key[0], m = key[1], b = key[2];
    QModuleVector cur = w;
    // e^b
    for (long step = 0; step < b; ++step) {
      QModuleVector next;
      for (const auto& [mk, c] : cur.terms) next.add(mk.first, mk.second, c * eps_pow(-mk.first));
      cur = next;
    }
    // t^m
    if (m != 0) {
      QModuleVector next;
      for (const auto& [mk, c] : cur.terms) next.add(mk.first + m, mk.second, c);
      cur = next;
    }
    // f^a: f v_{mk} = eps^m (v_{m,k+1} - eps/(eps-eps^{-1})^2 v_{m+2,k}
    //                         - eps^{-1}/(eps-eps^{-1})^2 v_{m-2,k})
    for (long step = 0; step < a; ++step) {
      QModuleVector next;
      for (const auto& [mk, c] : cur.terms) {
        QScalar base = c * eps_pow(mk.first);
        next.add(mk.first, mk.second + 1, base);
        next.add(mk.first + 2, mk.second, -base * eps_pow(1) / den);
        next.add(mk.first - 2, mk.second, -base * eps_pow(-1) / den);
      }
      cur = next;
    }
    for (const auto& [mk, c] : cur.terms) out.add(mk.first, mk.second, c * coeff);
  }
  return out;
}

namespace {

WhittakerReport hecke_from_kernel(const std::function<bool(long)>& kernel_at, int max_m,
                                  int max_k) {
  WhittakerReport rep;
  rep.max_m = max_m;
  rep.max_k = max_k;
  rep.hk0_rank_by_degree.assign(std::size_t(max_k) + 1, 0);
  rep.hk1_rank_by_degree.assign(std::size_t(max_k) + 1, 0);
  for (int k = 0; k <= max_k; ++k) {
    for (long m = -max_m; m <= max_m; ++m) {
      if (kernel_at(m)) {
        // (e-1) vanishes on C_{mk}: contributes to both Hk^0 and the cokernel
        ++rep.hk0_rank_by_degree[std::size_t(k)];
        ++rep.hk1_rank_by_degree[std::size_t(k)];
        rep.whittaker_basis.push_back({m, k});
      }
    }
    if (rep.hk1_rank_by_degree[std::size_t(k)] > 0) rep.hk1_nonzero = true;
  }
  return rep;
}

}  // namespace

WhittakerReport whittaker_and_hecke(int max_m, int max_k) {
  // (e-1) acts on C_{mk} by eps^{-m} - 1, computed exactly
  return hecke_from_kernel(
      [](long m) {
        QScalar val = QScalar::v_pow(-m) - QScalar(1);
        return val.is_zero();
      },
      max_m, max_k);
}

WhittakerReport whittaker_and_hecke_rational(const Rat& eps, int max_m, int max_k) {
  if (sgn(eps) == 0 || eps == 1 || eps == -1)
    throw Error(Errc::specialization_singular, "eps must satisfy eps != 0, eps^2 != 1");
  return hecke_from_kernel(
      [&](long m) {
        // eps^{-m} - 1 = 0  <=>  eps^m = 1
        Rat p(1);
        long n = m < 0 ? -m : m;
        for (long i = 0; i < n; ++i) p *= eps;
        return p == 1;
      },
      max_m, max_k);
}

WhittakerReport whittaker_and_hecke_root_of_unity(int n, int max_m, int max_k) {
  if (n <= 2)
    throw Error(Errc::specialization_singular, "primitive root order must exceed 2");
  // arithmetic in Q[x]/Phi_n(x): eps^m = x^{m mod n}; zero test by remainder
  // against the cyclotomic polynomial
  std::map<int, Laurent> memo;
  std::function<Laurent(int)> cyc = [&](int e) -> Laurent {
    auto it = memo.find(e);
    if (it != memo.end()) return it->second;
    Laurent num = Laurent::monomial(1, e) - Laurent(1);
    for (int d2 = 1; d2 < e; ++d2) {
      if (e % d2 != 0) continue;
      Laurent q;
      if (!Laurent::try_divide_exact(num, cyc(d2), q))
        throw Error(Errc::internal, "cyclotomic division failed");
      num = q;
    }
    memo[e] = num;
    return num;
  };
  Laurent phi = cyc(n);
  return hecke_from_kernel(
      [&](long m) {
        long r = ((m % n) + n) % n;
        // x^r - 1 mod Phi_n == 0 iff r == 0
        Laurent val = Laurent::monomial(1, r) - Laurent(1);
        // reduce by phi
        while (!val.is_zero() && val.hi() >= phi.hi()) {
          Laurent shift = phi.shifted(val.hi() - phi.hi());
          // scale: phi is monic
          val = val - shift * Laurent(val.coeff(val.hi()));
        }
        return val.is_zero();
      },
      max_m, max_k);
}

}  // namespace weylq
