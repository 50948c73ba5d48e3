#pragma once

#include "weyl.hpp"

namespace weylq {

// Exact evaluation of ((1+s)/(1-s)) P_{h'} on the root side: P projects onto
// the orthogonal complement of the fixed space of s, where 1-s is invertible.
class CayleyOperator {
public:
  CayleyOperator(const RootSystem& rs, const WeylElement& s);

  // ((1+s)/(1-s) P x, y) for rational vectors in simple-root coordinates
  Rat pair(const Vec<Rat>& x, const Vec<Rat>& y) const;
  Rat pair_roots(const Coords& x, const Coords& y) const;
  // the image (1+s)(1-s)^{-1} P x
  Vec<Rat> apply(const Vec<Rat>& x) const;

private:
  const RootSystem* rs_;
  Mat<Rat> gram_;         // (alpha_i, alpha_j)
  Mat<Rat> smat_;         // s on root coordinates
  Mat<Rat> fixed_basis_;  // rows spanning the fixed space on the root side
};

struct CayleyData {
  std::vector<Coords> gammas;   // gamma_1..gamma_{l'}
  Mat<Rat> eps;                 // -1 above the diagonal, 0 on it, +1 below... eps_ij for i<j is -1
  Mat<Rat> cayley_on_gammas;    // ((1+s)/(1-s) P gamma_i, gamma_j), Gauss route
  Mat<Rat> c;                   // c_ij on simple roots (direct operator route)
  Mat<Rat> n;                   // canonical n_ij = c_ij / (2 d_j)
  Mat<Rat> p;                   // p_ij on fundamental coweights
  long d = 1;                   // smallest d with d p_ij / 2 integral
};

// Matrix of s on the gamma basis through the triangular (Gauss) factors of
// the reflection product, then its Cayley transform, evaluated as pairings.
Mat<Rat> cayley_gamma_matrix_gauss(const RootSystem& rs, const std::vector<Coords>& gammas);
// Closed form eps_ij (gamma_i, gamma_j).
Mat<Rat> cayley_gamma_closed_form(const RootSystem& rs, const std::vector<Coords>& gammas);
// c_ij recomputed by expanding P alpha_i over the gamma basis.
Mat<Rat> c_via_gamma_expansion(const RootSystem& rs, const std::vector<Coords>& gammas);

CayleyData cayley_matrix(const RootSystem& rs, const WeylElement& s,
                         const InvolutionDecomposition& dec);
// n_ij = (c_ij + sym_ij) / (2 d_j); verifies d_j n_ij - d_i n_ji = c_ij
Mat<Rat> solve_n(const RootSystem& rs, const Mat<Rat>& c, const Mat<Rat>& symmetric_part);
// p_ij = ((1+s)/(1-s) P Y_i, Y_j) + (Y_i, Y_j) and the integer d
std::pair<Mat<Rat>, long> p_matrix(const RootSystem& rs, const WeylElement& s);

}  // namespace weylq
