#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootsys.hpp"

namespace weylq {

// Element of the Weyl group.  Carries the integer matrix of the action on
// coweights (basis H_i, columns are images) and on root coordinates.
class WeylElement {
public:
  WeylElement() = default;
  static WeylElement identity(const RootSystem& rs);
  static WeylElement simple(const RootSystem& rs, int i);
  static WeylElement reflection(const RootSystem& rs, const Coords& gamma);
  static WeylElement from_word(const RootSystem& rs, const std::vector<int>& word);

  const RootSystem& system() const { return *rs_; }
  bool is_identity() const;
  WeylElement operator*(const WeylElement& o) const;
  WeylElement inverse() const;
  bool operator==(const WeylElement& o) const { return mat_root_ == o.mat_root_; }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }
  bool operator<(const WeylElement& o) const { return mat_root_ < o.mat_root_; }

  Coords act_root(const Coords& c) const;
  Vec<Rat> act_coweight(const Vec<Rat>& h) const;
  const std::vector<std::vector<int>>& coweight_matrix() const { return mat_cw_; }

  int length() const;
  std::vector<Coords> inversion_set() const;
  // lexicographically least reduced word (0-based letters)
  std::vector<int> canonical_word() const;
  int order() const;
  // positive roots fixed by the action
  int fixed_positive_count() const;

private:
  const RootSystem* rs_ = nullptr;
  std::vector<std::vector<int>> mat_root_;  // action on root coordinates
  std::vector<std::vector<int>> mat_cw_;    // action on coweight coordinates
  friend std::vector<WeylElement> all_elements(const RootSystem&);
};

struct ConjugacyClass {
  WeylElement representative;
  long size = 0;
};

// Entire group; guarded to rank <= 4.
std::vector<WeylElement> all_elements(const RootSystem& rs);
std::vector<ConjugacyClass> conjugacy_classes(const RootSystem& rs);
// Minimal-length canonical representative of the class containing w (rank <= 4).
WeylElement class_representative(const RootSystem& rs, const WeylElement& w);
WeylElement longest_element(const RootSystem& rs);

// s = s1 s2 with s1 = prod of reflections in gamma1, s2 in gamma2; the roots
// within each list are positive and mutually orthogonal, and all of them
// together are linearly independent.
struct InvolutionDecomposition {
  std::vector<Coords> gamma1, gamma2;
  int n() const { return int(gamma1.size()); }
  int l_prime() const { return int(gamma1.size() + gamma2.size()); }
  std::vector<Coords> gammas() const;
};

// All decompositions of s, ordered deterministically (throws NotFound when
// none exists, which Carter's theorem rules out).
std::vector<InvolutionDecomposition> involution_decompositions(const RootSystem& rs,
                                                               const WeylElement& s);
InvolutionDecomposition involution_decompose(const RootSystem& rs, const WeylElement& s);
// l(s) == l(s1) + l(s2) in the standard positive system
bool decomposition_is_reduced(const RootSystem& rs, const WeylElement& s,
                              const InvolutionDecomposition& dec);

enum class PlaneOrder { angle_desc, angle_asc };

// The positive system attached to s: an s-invariant orthogonal decomposition
// of the coweight space, a regular element h_k per part rescaled so that the
// dominant part wins, and the induced chamber.
struct AdaptedSystem {
  std::vector<Vec<Rat>> h_parts;      // h_{i_k}, fixed-space part first when present
  std::vector<int> part_angle_m;      // cyclotomic index m (theta = 2 pi / m); 1 = fixed
  std::vector<Mat<Rat>> part_bases;   // basis rows of each invariant subspace
  Vec<Rat> hbar;                      // sum of the h_parts
  std::vector<int> part_of;           // positive-root index -> part index
  std::vector<int> sign;              // positive-root index -> +1/-1 (adapted sign)
  WeylElement chamber;                // g with adapted positive system = g(standard)
  WeylElement s_std;                  // g^{-1} s g; standard system is adapted for it
  int D0 = 0;                         // number of s-fixed positive roots
  bool has_coarse = false;  // some part is a Q-irreducible space of dim > 2
};

// `variant` skips that many regular candidates when picking h inside coarse
// parts; Q-irreducible parts of dimension > 2 carry several rotation angles,
// so different regular vectors can select genuinely different chambers.
AdaptedSystem adapted_positive_system(const RootSystem& rs, const WeylElement& s,
                                      PlaneOrder order = PlaneOrder::angle_desc,
                                      long variant = 0);

}  // namespace weylq
