#pragma once

#include <optional>

#include "weyl.hpp"

namespace weylq {

// A normal ordering of the positive roots: every root alpha+beta sits
// strictly between alpha and beta.
struct NormalOrdering {
  std::vector<Coords> seq;
  bool operator==(const NormalOrdering& o) const { return seq == o.seq; }
  bool operator<(const NormalOrdering& o) const { return seq < o.seq; }
};

// throws NotAPermutation when seq is not a permutation of the positive roots
bool is_normal(const RootSystem& rs, const std::vector<Coords>& seq);

// beta_k = s_{i1}...s_{i(k-1)} alpha_{ik}; word must be reduced of length D
NormalOrdering from_reduced_word(const RootSystem& rs, const std::vector<int>& word);
// inverse of the above (any normal ordering determines a reduced word of w0)
std::vector<int> word_from_ordering(const RootSystem& rs, const NormalOrdering& o);

std::vector<NormalOrdering> elementary_transpositions(const RootSystem& rs,
                                                      const NormalOrdering& o);
// the graph of all normal orderings under elementary transpositions is
// connected; gated to rank <= 2 or D <= 8
bool connectivity_check(const RootSystem& rs);
std::vector<NormalOrdering> all_normal_orderings(const RootSystem& rs);

// Circular ordering: beta_1..beta_D, -beta_1..-beta_D clockwise.  alpha < beta
// iff the clockwise segment [alpha,beta] contains neither -alpha nor -beta.
struct CircularOrdering {
  NormalOrdering base;
};
bool circular_lt(const RootSystem& rs, const CircularOrdering& c, const Coords& alpha,
                 const Coords& beta);

// Does target = sum c_k gamma_k with c_k in N over the given gammas?
bool is_natural_combination(const Coords& target, const std::vector<Coords>& gammas);
// No-combination property for pairs alpha<beta inside [begin,end): alpha+beta
// is never a natural combination of the gammas strictly between them.
bool no_combination_property(const RootSystem& rs, const std::vector<Coords>& seq, int begin,
                             int end, const std::vector<int>& gamma_positions);

// Normal orderings of a closed subsystem `roots` shaped as in the appendix:
// (p-n)/2 plain roots, then the gammas in the given order interleaved with the
// rest, ending at the last gamma, with the no-combination property.
std::vector<std::vector<Coords>> compatible_orderings(const RootSystem& rs,
                                                      const std::vector<Coords>& roots,
                                                      const std::vector<Coords>& gammas,
                                                      std::size_t max_count,
                                                      long node_budget = 2000000);

// The adapted normal ordering for s (given in coordinates where the standard
// positive system is the one attached to s) and a reduced two-involution
// decomposition.  Block structure: inversion set of s1 (with the compatible
// ordering of its -1 subsystem inside), free middle, inversion set of s2 (with
// the reversed compatible ordering inside), fixed positive roots last.
struct SegmentData {
  NormalOrdering ordering;
  int m_begin = 0, m_end = 0;      // [m_begin, m_end) is the segment
  std::vector<int> gamma_pos;      // positions of gamma_1..gamma_{l'}
  std::vector<Coords> gammas;      // gamma_1..gamma_{l'} in segment order
  int n = 0;                       // size of the first involution factor
  int l_s = 0, l_prime = 0, D0 = 0, D = 0;
  int segment_size() const { return m_end - m_begin; }
};

SegmentData build_adapted_ordering(const RootSystem& rs, const WeylElement& s_std,
                                   const InvolutionDecomposition& dec,
                                   long node_budget = 2000000);

struct AdaptedOrdering {
  AdaptedSystem aps;
  SegmentData seg;  // for aps.s_std in the standard system
};
// Full driver: adapted positive system, then the first decomposition that
// admits the structured ordering.
AdaptedOrdering adapted_ordering_for(const RootSystem& rs, const WeylElement& s,
                                     PlaneOrder order = PlaneOrder::angle_desc);

// Appendix fixtures: the compatible ordering of the full system for the
// longest element written as orthogonal reflections.
struct Fixture {
  NormalOrdering ordering;
  InvolutionDecomposition dec;  // gamma1 = all gammas, gamma2 empty
};
Fixture appendix_fixture(const std::string& label);

}  // namespace weylq
