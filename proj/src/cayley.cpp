#include "cayley.hpp"

namespace weylq {

CayleyOperator::CayleyOperator(const RootSystem& rs, const WeylElement& s) : rs_(&rs) {
  int l = rs.rank();
  gram_.assign(std::size_t(l), Vec<Rat>(std::size_t(l), Rat(0)));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      Coords ei(std::size_t(l), 0), ej(std::size_t(l), 0);
      ei[std::size_t(i)] = 1;
      ej[std::size_t(j)] = 1;
      gram_[std::size_t(i)][std::size_t(j)] = Rat(rs.form(ei, ej));
    }
  smat_.assign(std::size_t(l), Vec<Rat>(std::size_t(l), Rat(0)));
  for (int j = 0; j < l; ++j) {
    Coords ej(std::size_t(l), 0);
    ej[std::size_t(j)] = 1;
    Coords im = s.act_root(ej);
    for (int i = 0; i < l; ++i) smat_[std::size_t(i)][std::size_t(j)] = Rat(im[std::size_t(i)]);
  }
  Mat<Rat> m = smat_;
  for (int i = 0; i < l; ++i) m[std::size_t(i)][std::size_t(i)] -= 1;
  fixed_basis_ = kernel_basis(m);
}

Vec<Rat> CayleyOperator::apply(const Vec<Rat>& x) const {
  int l = rs_->rank();
  // project out the fixed space with respect to the form
  Vec<Rat> px = x;
  if (!fixed_basis_.empty()) {
    // solve Gram system on the fixed basis
    std::size_t f = fixed_basis_.size();
    Mat<Rat> sys(f, Vec<Rat>(f + 1));
    auto form_vv = [&](const Vec<Rat>& a, const Vec<Rat>& b) {
      Rat s(0);
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
          s += a[std::size_t(i)] * gram_[std::size_t(i)][std::size_t(j)] * b[std::size_t(j)];
      return s;
    };
    for (std::size_t r = 0; r < f; ++r) {
      for (std::size_t c = 0; c < f; ++c) sys[r][c] = form_vv(fixed_basis_[r], fixed_basis_[c]);
      sys[r][f] = form_vv(fixed_basis_[r], x);
    }
    auto piv = rref(sys);
    if (piv.size() != f) throw Error(Errc::internal, "degenerate form on the fixed space");
    for (std::size_t r = 0; r < f; ++r)
      for (int i = 0; i < l; ++i) px[std::size_t(i)] -= sys[r][f] * fixed_basis_[r][std::size_t(i)];
  }
  // solve (1-s) w = px with w orthogonal to the fixed space
  std::size_t f = fixed_basis_.size();
  Mat<Rat> sys(std::size_t(l) + f, Vec<Rat>(std::size_t(l) + 1));
  for (int r = 0; r < l; ++r) {
    for (int c = 0; c < l; ++c)
      sys[std::size_t(r)][std::size_t(c)] =
          Rat(r == c ? 1 : 0) - smat_[std::size_t(r)][std::size_t(c)];
    sys[std::size_t(r)][std::size_t(l)] = px[std::size_t(r)];
  }
  for (std::size_t r = 0; r < f; ++r) {
    for (int c = 0; c < l; ++c) {
      Rat v(0);
      for (int i = 0; i < l; ++i)
        v += fixed_basis_[r][std::size_t(i)] * gram_[std::size_t(i)][std::size_t(c)];
      sys[std::size_t(l) + r][std::size_t(c)] = v;
    }
    sys[std::size_t(l) + r][std::size_t(l)] = 0;
  }
  auto piv = rref(sys);
  Vec<Rat> w(std::size_t(l), Rat(0));
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == std::size_t(l)) throw Error(Errc::internal, "(1-s) system inconsistent");
    w[piv[r]] = sys[r][std::size_t(l)];
  }
  if (piv.size() != std::size_t(l)) throw Error(Errc::internal, "(1-s) solution not unique");
  // (1+s) w
  Vec<Rat> out(std::size_t(l), Rat(0));
  for (int i = 0; i < l; ++i) {
    out[std::size_t(i)] = w[std::size_t(i)];
    for (int j = 0; j < l; ++j)
      out[std::size_t(i)] += smat_[std::size_t(i)][std::size_t(j)] * w[std::size_t(j)];
  }
  return out;
}

Rat CayleyOperator::pair(const Vec<Rat>& x, const Vec<Rat>& y) const {
  Vec<Rat> cx = apply(x);
  Rat s(0);
  int l = rs_->rank();
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      s += cx[std::size_t(i)] * gram_[std::size_t(i)][std::size_t(j)] * y[std::size_t(j)];
  return s;
}

Rat CayleyOperator::pair_roots(const Coords& x, const Coords& y) const {
  Vec<Rat> xr, yr;
  for (int v : x) xr.push_back(Rat(v));
  for (int v : y) yr.push_back(Rat(v));
  return pair(xr, yr);
}

namespace {

Mat<Rat> carter_matrix(const RootSystem& rs, const std::vector<Coords>& gammas) {
  std::size_t n = gammas.size();
  Mat<Rat> A(n, Vec<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A[i][j] = Rat(rs.cartan_pairing(gammas[i], gammas[j]));
  return A;
}

Mat<Rat> gram_of(const RootSystem& rs, const std::vector<Coords>& gammas) {
  std::size_t n = gammas.size();
  Mat<Rat> G(n, Vec<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) G[i][j] = Rat(rs.form(gammas[i], gammas[j]));
  return G;
}

}  // namespace

Mat<Rat> cayley_gamma_matrix_gauss(const RootSystem& rs, const std::vector<Coords>& gammas) {
  std::size_t n = gammas.size();
  if (n == 0) return {};
  Mat<Rat> A = carter_matrix(rs, gammas);
  Mat<Rat> U(n, Vec<Rat>(n, Rat(0))), V(n, Vec<Rat>(n, Rat(0)));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (k < i) U[k][i] = A[k][i];
      else V[k][i] = A[k][i];
    }
  Mat<Rat> IU = mat_identity<Rat>(n), IV = mat_identity<Rat>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IU[i][j] += U[i][j];
      IV[i][j] -= V[i][j];
    }
  auto IUinv = mat_inverse(IU);
  if (!IUinv) throw Error(Errc::singular_carter_matrix, "I+U not invertible");
  Mat<Rat> S = mat_mul(*IUinv, IV);  // s gamma_i = S_ki gamma_k
  Mat<Rat> P = mat_identity<Rat>(n), M = mat_identity<Rat>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      P[i][j] += S[i][j];
      M[i][j] -= S[i][j];
    }
  auto Minv = mat_inverse(M);
  if (!Minv) throw Error(Errc::singular_carter_matrix, "1-s singular on the gamma span");
  Mat<Rat> C = mat_mul(P, *Minv);
  // pairings: ((C gamma_i), gamma_j) with C gamma_i = sum_k C_ki gamma_k
  Mat<Rat> G = gram_of(rs, gammas);
  Mat<Rat> out(n, Vec<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[i][j] += C[k][i] * G[k][j];
  return out;
}

Mat<Rat> cayley_gamma_closed_form(const RootSystem& rs, const std::vector<Coords>& gammas) {
  std::size_t n = gammas.size();
  Mat<Rat> out(n, Vec<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int e = i < j ? -1 : (i == j ? 0 : 1);
      out[i][j] = Rat(e) * Rat(rs.form(gammas[i], gammas[j]));
    }
  return out;
}

Mat<Rat> c_via_gamma_expansion(const RootSystem& rs, const std::vector<Coords>& gammas) {
  int l = rs.rank();
  std::size_t n = gammas.size();
  Mat<Rat> cay = cayley_gamma_matrix_gauss(rs, gammas);  // pairings on the gamma basis
  Mat<Rat> G = gram_of(rs, gammas);
  auto Ginv = mat_inverse(G);
  if (!Ginv) throw Error(Errc::singular_carter_matrix, "degenerate gamma Gram matrix");
  Mat<Rat> out(std::size_t(l), Vec<Rat>(std::size_t(l), Rat(0)));
  // P alpha_i = sum_k x_k gamma_k with x = G^{-1} (alpha_i, gamma_.)
  for (int i = 0; i < l; ++i) {
    Coords ei(std::size_t(l), 0);
    ei[std::size_t(i)] = 1;
    Vec<Rat> rhs(n, Rat(0));
    for (std::size_t k = 0; k < n; ++k) rhs[k] = Rat(rs.form(ei, gammas[k]));
    Vec<Rat> x = mat_apply(*Ginv, rhs);
    for (int j = 0; j < l; ++j) {
      Coords ej(std::size_t(l), 0);
      ej[std::size_t(j)] = 1;
      Vec<Rat> rhsj(n, Rat(0));
      for (std::size_t k = 0; k < n; ++k) rhsj[k] = Rat(rs.form(ej, gammas[k]));
      Vec<Rat> y = mat_apply(*Ginv, rhsj);
      // (C P a_i, a_j) = (C P a_i, P a_j) since C lands in the gamma span
      Rat v(0);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) v += x[a] * cay[a][b] * y[b];
      out[std::size_t(i)][std::size_t(j)] = v;
    }
  }
  return out;
}

Mat<Rat> solve_n(const RootSystem& rs, const Mat<Rat>& c, const Mat<Rat>& symmetric_part) {
  int l = rs.rank();
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (symmetric_part[std::size_t(i)][std::size_t(j)] !=
          symmetric_part[std::size_t(j)][std::size_t(i)])
        throw Error(Errc::usage, "symmetric part is not symmetric");
  Mat<Rat> n(std::size_t(l), Vec<Rat>(std::size_t(l), Rat(0)));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      n[std::size_t(i)][std::size_t(j)] =
          (c[std::size_t(i)][std::size_t(j)] + symmetric_part[std::size_t(i)][std::size_t(j)]) /
          (2 * rs.symmetrizers()[std::size_t(j)]);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      Rat lhs = Rat(rs.symmetrizers()[std::size_t(j)]) * n[std::size_t(i)][std::size_t(j)] -
                Rat(rs.symmetrizers()[std::size_t(i)]) * n[std::size_t(j)][std::size_t(i)];
      if (lhs != c[std::size_t(i)][std::size_t(j)])
        throw Error(Errc::invariant_violation, "n does not satisfy d_j n_ij - d_i n_ji = c_ij");
    }
  return n;
}

std::pair<Mat<Rat>, long> p_matrix(const RootSystem& rs, const WeylElement& s) {
  int l = rs.rank();
  CayleyOperator op(rs, s);
  // Y_i corresponds to the fundamental weight: alpha_i = sum_j a_ji w_j
  // so w_i has root coordinates (a^{-1})^T applied to e_i
  Mat<Rat> am(std::size_t(l), Vec<Rat>(std::size_t(l), Rat(0)));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) am[std::size_t(i)][std::size_t(j)] = Rat(rs.cartan()[std::size_t(i)][std::size_t(j)]);
  auto ainv = mat_inverse(am);
  if (!ainv) throw Error(Errc::internal, "singular Cartan matrix");
  std::vector<Vec<Rat>> w(std::size_t(l), Vec<Rat>{});
  for (int i = 0; i < l; ++i) {
    Vec<Rat> v(std::size_t(l), Rat(0));
    for (int j = 0; j < l; ++j) v[std::size_t(j)] = (*ainv)[std::size_t(j)][std::size_t(i)];
    w[std::size_t(i)] = v;
  }
  Mat<Rat> gram(std::size_t(l), Vec<Rat>(std::size_t(l), Rat(0)));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      Rat v(0);
      for (int a = 0; a < l; ++a)
        for (int b = 0; b < l; ++b) {
          Coords ea(std::size_t(l), 0), eb(std::size_t(l), 0);
          ea[std::size_t(a)] = 1;
          eb[std::size_t(b)] = 1;
          v += w[std::size_t(i)][std::size_t(a)] * Rat(rs.form(ea, eb)) * w[std::size_t(j)][std::size_t(b)];
        }
      gram[std::size_t(i)][std::size_t(j)] = v;
    }
  Mat<Rat> p(std::size_t(l), Vec<Rat>(std::size_t(l), Rat(0)));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      p[std::size_t(i)][std::size_t(j)] =
          op.pair(w[std::size_t(i)], w[std::size_t(j)]) + gram[std::size_t(i)][std::size_t(j)];
  Int lcm(1);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      Rat half = p[std::size_t(i)][std::size_t(j)] / 2;
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), half.get_den().get_mpz_t());
    }
  return {p, to_i64(lcm)};
}

CayleyData cayley_matrix(const RootSystem& rs, const WeylElement& s,
                         const InvolutionDecomposition& dec) {
  CayleyData out;
  out.gammas = dec.gammas();
  std::size_t n = out.gammas.size();
  out.eps.assign(n, Vec<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.eps[i][j] = Rat(i < j ? -1 : (i == j ? 0 : 1));
  out.cayley_on_gammas = cayley_gamma_matrix_gauss(rs, out.gammas);
  CayleyOperator op(rs, s);
  int l = rs.rank();
  out.c.assign(std::size_t(l), Vec<Rat>(std::size_t(l), Rat(0)));
  for (int i = 0; i < l; ++i) {
    Coords ei(std::size_t(l), 0);
    ei[std::size_t(i)] = 1;
    for (int j = 0; j < l; ++j) {
      Coords ej(std::size_t(l), 0);
      ej[std::size_t(j)] = 1;
      out.c[std::size_t(i)][std::size_t(j)] = op.pair_roots(ei, ej);
    }
  }
  Mat<Rat> zero(std::size_t(l), Vec<Rat>(std::size_t(l), Rat(0)));
  out.n = solve_n(rs, out.c, zero);
  auto [p, d] = p_matrix(rs, s);
  out.p = p;
  out.d = d;
  return out;
}

}  // namespace weylq
