#pragma once

#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "scalar.hpp"

namespace weylq {

// Root coordinates in the simple-root basis.
using Coords = std::vector<int>;

Coords coords_neg(const Coords& a);
Coords coords_add(const Coords& a, const Coords& b);
bool coords_is_zero(const Coords& a);

// Exact data of a finite reduced irreducible root system: Cartan matrix,
// symmetrizers d_i, the set of positive roots, and the invariant bilinear
// form (alpha_i, alpha_j) = d_i a_ij.  Immutable after build().
class RootSystem {
public:
  static RootSystem build(const std::string& label);

  const std::string& label() const { return label_; }
  char series() const { return series_; }
  int rank() const { return rank_; }
  int D() const { return int(pos_.size()); }
  const std::vector<std::vector<int>>& cartan() const { return a_; }
  const std::vector<int>& symmetrizers() const { return d_; }
  const std::vector<Coords>& positive_roots() const { return pos_; }
  const Coords& positive_root(int k) const { return pos_[std::size_t(k)]; }

  int height(const Coords& c) const;
  // index into positive_roots(), or -1
  int pos_index(const Coords& c) const;
  bool is_root(const Coords& c) const;

  // s_i acting on a root (simple-root coordinates)
  Coords simple_reflect(int i, const Coords& c) const;
  // s_gamma acting on a root
  Coords reflect_by(const Coords& gamma, const Coords& beta) const;

  // (alpha, beta) for root-lattice vectors; always an integer
  long form(const Coords& x, const Coords& y) const;
  // d_beta = (beta,beta)/2 for a root beta
  int d_of_root(const Coords& beta) const;
  // Carter pairing (gamma^vee, beta) = 2(gamma,beta)/(gamma,gamma)
  long cartan_pairing(const Coords& gamma, const Coords& beta) const;

  // alpha(h) for a coweight h = sum h_j H_j
  Rat pairing(const Vec<Rat>& h, const Coords& alpha) const;
  // fundamental coweight Y_i = d_i sum_j (a^{-1})_ij H_j
  Vec<Rat> fundamental_coweight(int i) const;
  // bilinear form on coweights: (H_i, H_j) = a_ij / d_j
  const Mat<Rat>& coweight_form() const { return hform_; }
  Rat coweight_form_value(const Vec<Rat>& x, const Vec<Rat>& y) const;

private:
  std::string label_;
  char series_ = 0;
  int rank_ = 0;
  std::vector<std::vector<int>> a_;
  std::vector<int> d_;
  std::vector<Coords> pos_;
  std::map<Coords, int> index_;
  Mat<Rat> ainv_;
  Mat<Rat> hform_;

  void enumerate_roots();
};

}  // namespace weylq
