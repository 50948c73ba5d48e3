#include "weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace weylq {

namespace {
std::vector<std::vector<int>> int_identity(int n) {
  std::vector<std::vector<int>> m(std::size_t(n), std::vector<int>(std::size_t(n), 0));
  for (int i = 0; i < n; ++i) m[std::size_t(i)][std::size_t(i)] = 1;
  return m;
}

std::vector<std::vector<int>> int_mul(const std::vector<std::vector<int>>& a,
                                      const std::vector<std::vector<int>>& b) {
  std::size_t n = a.size();
  std::vector<std::vector<int>> r(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}
}  // namespace

WeylElement WeylElement::identity(const RootSystem& rs) {
  WeylElement w;
  w.rs_ = &rs;
  w.mat_root_ = int_identity(rs.rank());
  w.mat_cw_ = w.mat_root_;
  return w;
}

WeylElement WeylElement::simple(const RootSystem& rs, int i) {
  WeylElement w = identity(rs);
  const auto& a = rs.cartan();
  for (int j = 0; j < rs.rank(); ++j) {
    // s_i(alpha_j) = alpha_j - a_ij alpha_i;  s_i(H_j) = H_j - a_ji H_i
    w.mat_root_[std::size_t(i)][std::size_t(j)] -= a[std::size_t(i)][std::size_t(j)];
    w.mat_cw_[std::size_t(i)][std::size_t(j)] -= a[std::size_t(j)][std::size_t(i)];
  }
  return w;
}

WeylElement WeylElement::reflection(const RootSystem& rs, const Coords& gamma) {
  if (!rs.is_root(gamma)) throw Error(Errc::internal, "reflection: not a root");
  WeylElement w = identity(rs);
  int l = rs.rank();
  long gg = rs.form(gamma, gamma);
  for (int j = 0; j < l; ++j) {
    Coords ej(std::size_t(l), 0);
    ej[std::size_t(j)] = 1;
    // s_gamma(alpha_j) = alpha_j - <gamma^vee, alpha_j> gamma
    long p = rs.cartan_pairing(gamma, ej);
    for (int i = 0; i < l; ++i)
      w.mat_root_[std::size_t(i)][std::size_t(j)] -= int(p) * gamma[std::size_t(i)];
    // s_gamma(H_j) = H_j - gamma(H_j) gamma^vee_cl,
    // gamma^vee_cl = (2/(g,g)) sum_i m_i d_i H_i
    long gh = 0;
    for (int i = 0; i < l; ++i)
      gh += long(gamma[std::size_t(i)]) * rs.cartan()[std::size_t(j)][std::size_t(i)];
    for (int i = 0; i < l; ++i) {
      long num = gh * 2 * gamma[std::size_t(i)] * rs.symmetrizers()[std::size_t(i)];
      if (num % gg != 0) throw Error(Errc::internal, "non-integral coroot action");
      w.mat_cw_[std::size_t(i)][std::size_t(j)] -= int(num / gg);
    }
  }
  return w;
}

WeylElement WeylElement::from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElement w = identity(rs);
  for (int i : word) {
    if (i < 0 || i >= rs.rank()) throw Error(Errc::usage, "word letter out of range");
    w = w * simple(rs, i);
  }
  return w;
}

bool WeylElement::is_identity() const { return mat_root_ == int_identity(rs_->rank()); }

WeylElement WeylElement::operator*(const WeylElement& o) const {
  WeylElement r;
  r.rs_ = rs_;
  r.mat_root_ = int_mul(mat_root_, o.mat_root_);
  r.mat_cw_ = int_mul(mat_cw_, o.mat_cw_);
  return r;
}

WeylElement WeylElement::inverse() const {
  if (is_identity()) return *this;
  WeylElement prev = *this, acc = *this * *this;
  while (!acc.is_identity()) {
    prev = acc;
    acc = acc * *this;
  }
  return prev;
}

Coords WeylElement::act_root(const Coords& c) const {
  int l = rs_->rank();
  Coords r(std::size_t(l), 0);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      r[std::size_t(i)] += mat_root_[std::size_t(i)][std::size_t(j)] * c[std::size_t(j)];
  return r;
}

Vec<Rat> WeylElement::act_coweight(const Vec<Rat>& h) const {
  int l = rs_->rank();
  Vec<Rat> r(std::size_t(l), Rat(0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      r[std::size_t(i)] += Rat(mat_cw_[std::size_t(i)][std::size_t(j)]) * h[std::size_t(j)];
  return r;
}

int WeylElement::length() const {
  int n = 0;
  for (const auto& beta : rs_->positive_roots()) {
    Coords im = act_root(beta);
    if (rs_->pos_index(coords_neg(im)) >= 0) ++n;
  }
  return n;
}

std::vector<Coords> WeylElement::inversion_set() const {
  std::vector<Coords> inv;
  for (const auto& beta : rs_->positive_roots()) {
    Coords im = act_root(beta);
    if (rs_->pos_index(coords_neg(im)) >= 0) inv.push_back(beta);
  }
  return inv;
}

std::vector<int> WeylElement::canonical_word() const {
  std::vector<int> word;
  WeylElement w = *this;
  int l = rs_->rank();
  while (!w.is_identity()) {
    WeylElement winv = w.inverse();
    int pick = -1;
    for (int i = 0; i < l && pick < 0; ++i) {
      Coords ai(std::size_t(l), 0);
      ai[std::size_t(i)] = 1;
      Coords im = winv.act_root(ai);
      if (rs_->pos_index(coords_neg(im)) >= 0) pick = i;  // l(s_i w) < l(w)
    }
    if (pick < 0) throw Error(Errc::internal, "canonical_word: no descent");
    word.push_back(pick);
    w = simple(*rs_, pick) * w;
  }
  return word;
}

int WeylElement::order() const {
  WeylElement w = *this;
  int n = 1;
  while (!w.is_identity()) {
    w = w * *this;
    ++n;
    if (n > 10000) throw Error(Errc::internal, "order: runaway");
  }
  return n;
}

int WeylElement::fixed_positive_count() const {
  int n = 0;
  for (const auto& beta : rs_->positive_roots())
    if (act_root(beta) == beta) ++n;
  return n;
}

std::vector<WeylElement> all_elements(const RootSystem& rs) {
  if (rs.rank() > 4) throw Error(Errc::rank_too_large, "group enumeration gated to rank <= 4");
  std::vector<WeylElement> gens;
  for (int i = 0; i < rs.rank(); ++i) gens.push_back(WeylElement::simple(rs, i));
  std::set<std::vector<std::vector<int>>> seen;
  std::vector<WeylElement> out;
  std::deque<WeylElement> queue;
  WeylElement e = WeylElement::identity(rs);
  seen.insert(e.mat_root_);
  out.push_back(e);
  queue.push_back(e);
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      WeylElement x = w * g;
      if (seen.insert(x.mat_root_).second) {
        out.push_back(x);
        queue.push_back(x);
      }
    }
  }
  return out;
}

namespace {
bool rep_less(const WeylElement& a, const WeylElement& b) {
  int la = a.length(), lb = b.length();
  if (la != lb) return la < lb;
  return a.canonical_word() < b.canonical_word();
}
}  // namespace

std::vector<ConjugacyClass> conjugacy_classes(const RootSystem& rs) {
  auto elems = all_elements(rs);
  std::map<WeylElement, int> idx;
  for (int k = 0; k < int(elems.size()); ++k) idx[elems[std::size_t(k)]] = k;
  std::vector<int> cls(elems.size(), -1);
  std::vector<ConjugacyClass> out;
  std::vector<WeylElement> gens;
  for (int i = 0; i < rs.rank(); ++i) gens.push_back(WeylElement::simple(rs, i));
  for (int k = 0; k < int(elems.size()); ++k) {
    if (cls[std::size_t(k)] >= 0) continue;
    int id = int(out.size());
    std::deque<int> queue = {k};
    cls[std::size_t(k)] = id;
    WeylElement rep = elems[std::size_t(k)];
    long size = 0;
    while (!queue.empty()) {
      int c = queue.front();
      queue.pop_front();
      ++size;
      if (rep_less(elems[std::size_t(c)], rep)) rep = elems[std::size_t(c)];
      for (const auto& g : gens) {
        WeylElement y = g * elems[std::size_t(c)] * g;  // g = g^{-1} for simple reflections
        int j = idx.at(y);
        if (cls[std::size_t(j)] < 0) {
          cls[std::size_t(j)] = id;
          queue.push_back(j);
        }
      }
    }
    out.push_back(ConjugacyClass{rep, size});
  }
  std::sort(out.begin(), out.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    return rep_less(a.representative, b.representative);
  });
  return out;
}

WeylElement class_representative(const RootSystem& rs, const WeylElement& w) {
  std::vector<WeylElement> gens;
  for (int i = 0; i < rs.rank(); ++i) gens.push_back(WeylElement::simple(rs, i));
  std::set<WeylElement> seen;
  std::deque<WeylElement> queue = {w};
  seen.insert(w);
  WeylElement rep = w;
  while (!queue.empty()) {
    WeylElement c = queue.front();
    queue.pop_front();
    if (rep_less(c, rep)) rep = c;
    for (const auto& g : gens) {
      WeylElement y = g * c * g;
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return rep;
}

WeylElement longest_element(const RootSystem& rs) {
  WeylElement w = WeylElement::identity(rs);
  int l = rs.rank();
  while (true) {
    int pick = -1;
    for (int i = 0; i < l && pick < 0; ++i) {
      Coords ai(std::size_t(l), 0);
      ai[std::size_t(i)] = 1;
      Coords im = w.act_root(ai);
      if (rs.pos_index(im) >= 0) pick = i;  // l(w s_i) > l(w)
    }
    if (pick < 0) return w;
    w = w * WeylElement::simple(rs, pick);
  }
}

std::vector<Coords> InvolutionDecomposition::gammas() const {
  std::vector<Coords> g = gamma1;
  g.insert(g.end(), gamma2.begin(), gamma2.end());
  return g;
}

namespace {

int coords_rank(const std::vector<Coords>& v) {
  Mat<Rat> m;
  for (const auto& c : v) {
    Vec<Rat> row;
    for (int x : c) row.push_back(Rat(x));
    m.push_back(row);
  }
  if (m.empty()) return 0;
  return int(mat_rank(m));
}

// positive roots gamma with w(gamma) = -gamma
std::vector<int> anti_invariant_positive(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> out;
  for (int k = 0; k < rs.D(); ++k)
    if (w.act_root(rs.positive_root(k)) == coords_neg(rs.positive_root(k))) out.push_back(k);
  return out;
}

void orthogonal_subsets(const RootSystem& rs, const std::vector<int>& cand, std::size_t want,
                        std::size_t start, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
  if (cur.size() == want) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < cand.size(); ++i) {
    const Coords& g = rs.positive_root(cand[i]);
    bool ok = true;
    for (int j : cur)
      if (rs.form(rs.positive_root(j), g) != 0) ok = false;
    if (!ok) continue;
    cur.push_back(cand[i]);
    orthogonal_subsets(rs, cand, want, i + 1, cur, out);
    cur.pop_back();
  }
}

WeylElement product_of_reflections(const RootSystem& rs, const std::vector<int>& roots) {
  WeylElement w = WeylElement::identity(rs);
  for (int k : roots) w = w * WeylElement::reflection(rs, rs.positive_root(k));
  return w;
}

}  // namespace

std::vector<InvolutionDecomposition> involution_decompositions(const RootSystem& rs,
                                                               const WeylElement& s) {
  if (rs.rank() > 4)
    throw Error(Errc::rank_too_large, "involution search gated to rank <= 4");
  int l = rs.rank();
  // fixed space of s on coweights
  Mat<Rat> m(std::size_t(l), Vec<Rat>(std::size_t(l), Rat(0)));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      m[std::size_t(i)][std::size_t(j)] =
          Rat(s.coweight_matrix()[std::size_t(i)][std::size_t(j)]) - Rat(i == j ? 1 : 0);
  auto fixed_basis = kernel_basis(m);
  int l_prime = l - int(fixed_basis.size());

  std::vector<InvolutionDecomposition> found;
  if (l_prime == 0) {
    if (!s.is_identity()) throw Error(Errc::not_found, "fixed space full but s != e");
    found.push_back(InvolutionDecomposition{});
    return found;
  }

  // candidate roots must annihilate the fixed space
  std::vector<int> cand;
  for (int k = 0; k < rs.D(); ++k) {
    bool ok = true;
    for (const auto& v : fixed_basis)
      if (sgn(rs.pairing(v, rs.positive_root(k))) != 0) ok = false;
    if (ok) cand.push_back(k);
  }

  for (int n1 = 0; n1 <= l_prime; ++n1) {
    std::vector<std::vector<int>> sets1;
    std::vector<int> cur;
    orthogonal_subsets(rs, cand, std::size_t(n1), 0, cur, sets1);
    for (const auto& s1 : sets1) {
      std::vector<Coords> g1;
      for (int k : s1) g1.push_back(rs.positive_root(k));
      if (coords_rank(g1) != n1) continue;
      WeylElement w1 = product_of_reflections(rs, s1);
      WeylElement w2req = w1 * s;  // w1^{-1} = w1
      if (!(w2req * w2req).is_identity()) continue;
      auto anti = anti_invariant_positive(rs, w2req);
      // keep only candidates (orthogonal to the fixed space of s)
      std::vector<int> anti_cand;
      for (int k : anti)
        if (std::binary_search(cand.begin(), cand.end(), k)) anti_cand.push_back(k);
      std::vector<std::vector<int>> sets2;
      std::vector<int> cur2;
      orthogonal_subsets(rs, anti_cand, std::size_t(l_prime - n1), 0, cur2, sets2);
      for (const auto& s2 : sets2) {
        std::vector<Coords> g2;
        for (int k : s2) g2.push_back(rs.positive_root(k));
        std::vector<Coords> all = g1;
        all.insert(all.end(), g2.begin(), g2.end());
        if (coords_rank(all) != l_prime) continue;
        if (!(product_of_reflections(rs, s2) == w2req)) continue;
        found.push_back(InvolutionDecomposition{g1, g2});
      }
    }
  }
  if (found.empty()) throw Error(Errc::not_found, "no involution decomposition found");
  return found;
}

InvolutionDecomposition involution_decompose(const RootSystem& rs, const WeylElement& s) {
  return involution_decompositions(rs, s).front();
}

bool decomposition_is_reduced(const RootSystem& rs, const WeylElement& s,
                              const InvolutionDecomposition& dec) {
  std::vector<int> idx1, idx2;
  WeylElement w1 = WeylElement::identity(rs), w2 = WeylElement::identity(rs);
  for (const auto& g : dec.gamma1) w1 = w1 * WeylElement::reflection(rs, g);
  for (const auto& g : dec.gamma2) w2 = w2 * WeylElement::reflection(rs, g);
  if (!(w1 * w2 == s)) return false;
  return s.length() == w1.length() + w2.length();
}

namespace {

// integer polynomials as Laurent values with lo() >= 0
Laurent cyclotomic(int n, std::map<int, Laurent>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  Laurent num = Laurent::monomial(1, n) - Laurent(1);  // x^n - 1
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    Laurent q;
    if (!Laurent::try_divide_exact(num, cyclotomic(d, memo), q))
      throw Error(Errc::internal, "cyclotomic division failed");
    num = q;
  }
  memo[n] = num;
  return num;
}

Mat<Rat> eval_poly_on_matrix(const Laurent& p, const Mat<Rat>& m) {
  std::size_t n = m.size();
  Mat<Rat> acc(n, Vec<Rat>(n, Rat(0)));
  for (long e = p.hi(); e >= 0; --e) {
    acc = mat_mul(acc, m);
    Int c = p.coeff(e);
    if (!is_zero(c))
      for (std::size_t i = 0; i < n; ++i) acc[i][i] += Rat(c);
  }
  return acc;
}

Rat form_val(const RootSystem& rs, const Vec<Rat>& x, const Vec<Rat>& y) {
  return rs.coweight_form_value(x, y);
}

// orthogonal projection-free Gram-Schmidt into lines
std::vector<Vec<Rat>> gram_schmidt(const RootSystem& rs, const Mat<Rat>& basis) {
  std::vector<Vec<Rat>> out;
  for (const auto& v : basis) {
    Vec<Rat> u = v;
    for (const auto& w : out) {
      Rat c = form_val(rs, v, w) / form_val(rs, w, w);
      for (std::size_t i = 0; i < u.size(); ++i) u[i] -= c * w[i];
    }
    bool nonzero = false;
    for (const auto& x : u)
      if (sgn(x) != 0) nonzero = true;
    if (nonzero) out.push_back(u);
  }
  return out;
}

void clear_denominators(Vec<Rat>& v) {
  Int lcm(1);
  for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  Int g(0);
  for (auto& x : v) x *= Rat(lcm);
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
  if (!is_zero(g) && g != 1)
    for (auto& x : v) x /= Rat(g);
}

Mat<Rat> rref_basis(Mat<Rat> rows) {
  rref(rows);
  Mat<Rat> out;
  for (auto& r : rows) {
    bool nonzero = false;
    for (const auto& x : r)
      if (sgn(x) != 0) nonzero = true;
    if (nonzero) out.push_back(r);
  }
  return out;
}

bool mat_lex_less(const Mat<Rat>& a, const Mat<Rat>& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    for (std::size_t j = 0; j < std::min(a[i].size(), b[i].size()); ++j) {
      int c = cmp(a[i][j], b[i][j]);
      if (c != 0) return c < 0;
    }
  return a.size() < b.size();
}

}  // namespace

AdaptedSystem adapted_positive_system(const RootSystem& rs, const WeylElement& s,
                                      PlaneOrder order, long variant) {
  int l = rs.rank();
  int m = s.order();
  Mat<Rat> S(std::size_t(l), Vec<Rat>(std::size_t(l), Rat(0)));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      S[std::size_t(i)][std::size_t(j)] = Rat(s.coweight_matrix()[std::size_t(i)][std::size_t(j)]);

  // primary components per cyclotomic divisor of x^m - 1
  std::map<int, Laurent> memo;
  struct Part {
    int angle_m;      // theta = 2*pi/angle_m
    Mat<Rat> basis;   // rows
  };
  std::vector<Part> parts;
  Part fixed_part;
  fixed_part.angle_m = 1;
  for (int e = 1; e <= m; ++e) {
    if (m % e != 0) continue;
    Mat<Rat> Ne = eval_poly_on_matrix(cyclotomic(e, memo), S);
    auto ker = kernel_basis(Ne);
    if (ker.empty()) continue;
    if (e == 1) {
      fixed_part.basis = rref_basis(ker);
      continue;
    }
    int phi = int(cyclotomic(e, memo).hi());
    if (e == 2) {
      // split the (-1)-eigenspace into orthogonal lines
      for (auto& line : gram_schmidt(rs, rref_basis(ker))) {
        Part p;
        p.angle_m = 2;
        p.basis = {line};
        parts.push_back(p);
      }
    } else if (phi == 2) {
      // split into s-invariant planes by iterated cyclic-subspace extraction
      Mat<Rat> rem = rref_basis(ker);
      while (!rem.empty()) {
        Vec<Rat> v = rem[0];
        Vec<Rat> Sv = mat_apply(S, v);
        Part p;
        p.angle_m = e;
        p.basis = rref_basis({v, Sv});
        parts.push_back(p);
        if (rem.size() == p.basis.size()) break;
        // orthogonal complement of the plane inside the component
        Mat<Rat> sys;
        for (const auto& b : p.basis) {
          Vec<Rat> row;
          for (std::size_t c = 0; c < rem.size(); ++c) {
            Rat val(0);
            Vec<Rat> bc = rem[c];
            row.push_back(form_val(rs, bc, b));
          }
          sys.push_back(row);
        }
        auto coeffs = kernel_basis(sys);
        Mat<Rat> next;
        for (const auto& co : coeffs) {
          Vec<Rat> u(std::size_t(l), Rat(0));
          for (std::size_t c = 0; c < rem.size(); ++c)
            for (int i = 0; i < l; ++i) u[std::size_t(i)] += co[c] * rem[c][std::size_t(i)];
          next.push_back(u);
        }
        rem = rref_basis(next);
      }
    } else {
      // Q-irreducible component carrying several rotation angles; kept whole,
      // labeled by the cyclotomic index
      Part p;
      p.angle_m = e;
      p.basis = rref_basis(ker);
      parts.push_back(p);
    }
  }

  std::stable_sort(parts.begin(), parts.end(), [&](const Part& a, const Part& b) {
    if (a.angle_m != b.angle_m)
      return order == PlaneOrder::angle_desc ? a.angle_m < b.angle_m : a.angle_m > b.angle_m;
    return mat_lex_less(a.basis, b.basis);
  });
  std::vector<Part> ordered;
  if (!fixed_part.basis.empty()) ordered.push_back(fixed_part);
  for (auto& p : parts) ordered.push_back(std::move(p));

  AdaptedSystem out;
  for (auto& p : ordered) {
    out.part_angle_m.push_back(p.angle_m);
    out.part_bases.push_back(p.basis);
  }

  // choose a regular integer vector in each part
  for (auto& p : ordered) {
    Mat<Rat> basis = p.basis;
    for (auto& b : basis) clear_denominators(b);
    int k = int(basis.size());
    // roots not orthogonal to this part
    std::vector<int> need;
    for (int r = 0; r < rs.D(); ++r) {
      bool orth = true;
      for (const auto& b : basis)
        if (sgn(rs.pairing(b, rs.positive_root(r))) != 0) orth = false;
      if (!orth) need.push_back(r);
    }
    auto regular = [&](const Vec<Rat>& h) {
      for (int r : need)
        if (sgn(rs.pairing(h, rs.positive_root(r))) == 0) return false;
      return true;
    };
    bool coarse = k > 2 && p.angle_m > 2;  // several rotation angles in one part
    if (coarse) out.has_coarse = true;
    long skip = coarse ? variant : 0;
    Vec<Rat> chosen;
    // first candidate: the projection of the dominant element sum Y_i onto the
    // part (keeps the identity class on the standard chamber)
    {
      Vec<Rat> rho(std::size_t(l), Rat(0));
      for (int i = 0; i < l; ++i) {
        Vec<Rat> y = rs.fundamental_coweight(i);
        for (int j = 0; j < l; ++j) rho[std::size_t(j)] += y[std::size_t(j)];
      }
      Mat<Rat> sys(std::size_t(k), Vec<Rat>(std::size_t(k) + 1, Rat(0)));
      for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c)
          sys[std::size_t(r)][std::size_t(c)] =
              rs.coweight_form_value(basis[std::size_t(r)], basis[std::size_t(c)]);
        sys[std::size_t(r)][std::size_t(k)] = rs.coweight_form_value(basis[std::size_t(r)], rho);
      }
      auto piv = rref(sys);
      if (piv.size() == std::size_t(k)) {
        Vec<Rat> h(std::size_t(l), Rat(0));
        for (int r = 0; r < k; ++r)
          for (int i = 0; i < l; ++i)
            h[std::size_t(i)] += sys[std::size_t(r)][std::size_t(k)] *
                                 basis[std::size_t(r)][std::size_t(i)];
        clear_denominators(h);
        if (regular(h) && skip-- == 0) chosen = h;
      }
    }
    for (int norm = 1; norm < 64 && chosen.empty(); ++norm) {
      std::vector<int> c(std::size_t(k), -norm);
      while (true) {
        int mx = 0;
        for (int x : c) mx = std::max(mx, std::abs(x));
        if (mx == norm) {
          Vec<Rat> h(std::size_t(l), Rat(0));
          for (int j = 0; j < k; ++j)
            for (int i = 0; i < l; ++i)
              h[std::size_t(i)] += Rat(c[std::size_t(j)]) * basis[std::size_t(j)][std::size_t(i)];
          if (regular(h) && skip-- == 0) {
            chosen = h;
            break;
          }
        }
        int pos = k - 1;
        while (pos >= 0 && c[std::size_t(pos)] == norm) {
          c[std::size_t(pos)] = -norm;
          --pos;
        }
        if (pos < 0) break;
        ++c[std::size_t(pos)];
      }
    }
    if (chosen.empty()) throw Error(Errc::internal, "no regular vector found in invariant part");
    // orient toward the chamber with more standard-positive pairings
    int plus = 0, minus = 0;
    for (int r : need) {
      int sg = sgn(rs.pairing(chosen, rs.positive_root(r)));
      if (sg > 0) ++plus;
      else ++minus;
    }
    if (minus > plus)
      for (auto& x : chosen) x = -x;
    out.h_parts.push_back(chosen);
  }

  // partition of the roots: the *last* part not orthogonal to the root
  int P = int(ordered.size());
  out.part_of.assign(std::size_t(rs.D()), -1);
  for (int r = 0; r < rs.D(); ++r) {
    for (int p = P - 1; p >= 0 && out.part_of[std::size_t(r)] < 0; --p) {
      bool orth = true;
      for (const auto& b : ordered[std::size_t(p)].basis)
        if (sgn(rs.pairing(b, rs.positive_root(r))) != 0) orth = false;
      if (!orth) out.part_of[std::size_t(r)] = p;
    }
    if (out.part_of[std::size_t(r)] < 0)
      throw Error(Errc::internal, "root orthogonal to every invariant part");
  }

  // rescale so that the last nonzero pairing dominates every partial tail sum
  for (int p = 1; p < P; ++p) {
    Rat lambda(1);
    for (int r = 0; r < rs.D(); ++r) {
      if (out.part_of[std::size_t(r)] != p) continue;
      Rat hp = rs.pairing(out.h_parts[std::size_t(p)], rs.positive_root(r));
      for (int lstart = 0; lstart < p; ++lstart) {
        Rat tail(0);
        for (int j = lstart; j < p; ++j)
          tail += rs.pairing(out.h_parts[std::size_t(j)], rs.positive_root(r));
        Rat needed = abs(tail) / abs(hp);
        if (needed >= lambda) {
          Int fl = Int(needed);  // floor for nonnegative rationals
          lambda = Rat(fl + 1);
        }
      }
    }
    if (lambda != 1)
      for (auto& x : out.h_parts[std::size_t(p)]) x *= lambda;
  }

  out.hbar.assign(std::size_t(l), Rat(0));
  for (const auto& h : out.h_parts)
    for (int i = 0; i < l; ++i) out.hbar[std::size_t(i)] += h[std::size_t(i)];

  out.sign.assign(std::size_t(rs.D()), 0);
  for (int r = 0; r < rs.D(); ++r) {
    int sg = sgn(rs.pairing(out.hbar, rs.positive_root(r)));
    if (sg == 0) throw Error(Errc::internal, "hbar not regular");
    out.sign[std::size_t(r)] = sg;
    // (wc): positivity is decided by the part that owns the root
    int sp = sgn(rs.pairing(out.h_parts[std::size_t(out.part_of[std::size_t(r)])],
                            rs.positive_root(r)));
    if (sp != sg) throw Error(Errc::invariant_violation, "sign rule (wc) violated");
  }

  // chamber element g with adapted positive system = g(standard)
  Vec<Rat> x = out.hbar;
  std::vector<int> gword;
  while (true) {
    int pick = -1;
    for (int i = 0; i < l && pick < 0; ++i) {
      Coords ai(std::size_t(l), 0);
      ai[std::size_t(i)] = 1;
      if (sgn(rs.pairing(x, ai)) < 0) pick = i;
    }
    if (pick < 0) break;
    x = WeylElement::simple(rs, pick).act_coweight(x);
    gword.push_back(pick);
  }
  out.chamber = WeylElement::from_word(rs, gword);
  out.s_std = out.chamber.inverse() * s * out.chamber;
  out.D0 = s.fixed_positive_count();
  return out;
}

}  // namespace weylq
