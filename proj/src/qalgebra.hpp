#pragma once

#include <functional>

#include "ordering.hpp"

namespace weylq {

// Scalar context: the formal variable of QScalar is v = q^{1/two_d}.
struct QCtx {
  const RootSystem* rs = nullptr;
  long two_d = 2;

  QScalar q_pow(const Rat& e) const;                 // q^e; throws if v-exponent fractional
  QScalar q_int(long n, long di) const;              // [n]_{q^di}
  QScalar q_fact(long n, long di) const;             // [n]_{q^di}!
  QScalar q_binom(long m, long k, long di) const;    // Gaussian binomial
};

// Free-algebra element in triangular normal form: each stored word is an
// F-block, one (possibly fractional) K-exponent vector, then an E-block.
struct NCTerm {
  std::vector<int> fword;
  std::vector<Rat> kexp;
  std::vector<int> eword;
  bool operator<(const NCTerm& o) const;
  bool operator==(const NCTerm& o) const {
    return fword == o.fword && kexp == o.kexp && eword == o.eword;
  }
};

class NCPoly {
public:
  std::map<NCTerm, QScalar> terms;

  static NCPoly zero() { return {}; }
  static NCPoly one(const QCtx& ctx);
  static NCPoly E(const QCtx& ctx, int i);
  static NCPoly F(const QCtx& ctx, int i);
  static NCPoly K(const QCtx& ctx, const std::vector<Rat>& exp);

  bool is_zero() const { return terms.empty(); }
  void add_term(const NCTerm& t, const QScalar& c);
  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly scaled(const QScalar& c) const;
  bool operator==(const NCPoly& o) const { return terms == o.terms; }
  bool pure_e() const;
  // weight of an E-only polynomial (all words must agree); throws otherwise
  Coords e_weight(int rank) const;
  std::string str(const QCtx& ctx) const;
};

// product with rewriting to the triangular normal form
NCPoly nc_mul(const QCtx& ctx, const NCPoly& a, const NCPoly& b);
NCPoly nc_normal_form(const QCtx& ctx, const NCPoly& a);

// Lusztig braid operator T_i, extended multiplicatively and renormalized.
NCPoly braid_T(const QCtx& ctx, int i, const NCPoly& x);

struct RootVectorTable {
  NormalOrdering ordering;
  std::vector<int> word;        // the inducing reduced word
  std::vector<NCPoly> vectors;  // e_beta aligned with ordering.seq
  int position_of(const Coords& beta) const;
};

// X_{beta_k} = T_{i1} ... T_{i(k-1)} E_{ik}; checks pure-E support and
// homogeneity of each vector.
RootVectorTable root_vectors(const QCtx& ctx, const std::vector<int>& word);

// ---- weight-space linear algebra over pure-E polynomials ----

std::vector<std::vector<int>> weight_words(int rank, const Coords& weight);
// echelonized basis (rows over the weight_words coordinates) of the Serre
// ideal component in the given weight; height gated
Mat<QScalar> serre_ideal_component(const QCtx& ctx, const Coords& weight, int height_bound = 12);
// quantum Serre relator for the pair (i, j)
NCPoly serre_relator(const QCtx& ctx, int i, int j);

struct LSRelation {
  Coords alpha, beta;
  int pos_alpha = 0, pos_beta = 0;
  Rat q_exponent;  // exponent of q in front of e_beta e_alpha
  // monomials are divided-power PBW monomials on the positions strictly
  // between alpha and beta; exponents are indexed by those positions
  std::vector<int> between_positions;
  std::vector<std::pair<std::vector<int>, QScalar>> rhs;
};

// expansion of a homogeneous pure-E polynomial over divided-power PBW
// monomials supported on the given table positions, modulo the Serre ideal
// component of its weight
struct PBWExpansion {
  bool consistent = false;
  bool unique = false;
  std::vector<std::pair<std::vector<int>, QScalar>> monomials;  // nonzero only
};
PBWExpansion pbw_expand(const QCtx& ctx, const RootVectorTable& table,
                        const std::vector<int>& positions, const NCPoly& x);

// e_alpha e_beta - q^{(alpha,beta)} e_beta e_alpha expanded over PBW monomials
// modulo the Serre ideal component
LSRelation ls_relation(const QCtx& ctx, const RootVectorTable& table, int pos_alpha,
                       int pos_beta);

// exact Cayley pairing on the root lattice
using CayleyPairing = std::function<Rat(const Coords&, const Coords&)>;

// twist: exponent gains (Cayley alpha, beta); each coefficient picks up the
// Cartan exchange factor q^{(Cayley(alpha,beta) - sum_{p<p'} k_p k_p' Cayley(delta_p,delta_p'))/2}
LSRelation twist_relation(const QCtx& ctx, const RootVectorTable& table, const LSRelation& rel,
                          const CayleyPairing& cayley);

// all twisted relations for pairs inside the segment
std::vector<LSRelation> segment_relations(const QCtx& ctx, const RootVectorTable& table,
                                          const SegmentData& seg, const CayleyPairing& cayley);

// coefficients land in A' = C[v^{+-1}, 1/[2]_{q_i}, ..., 1/[r]_{q_i}]:
// the denominator must divide a product of [k]_{q_i}
bool scalar_in_A_prime(const QCtx& ctx, const QScalar& x, long rmax = 4);

// ---- character of the quantum nilpotent subalgebra ----

// polynomial in the symbolic character values c_1..c_{l'}
struct CPoly {
  std::map<std::vector<int>, QScalar> terms;
  bool is_zero() const { return terms.empty(); }
  void add(const std::vector<int>& mono, const QScalar& c);
  CPoly operator-(const CPoly& o) const;
  std::string str() const;
};

struct CharacterReport {
  bool all_residuals_zero = true;
  bool twist_exponents_zero = true;    // gamma-gamma pairs
  bool no_combination_support = true;
  bool coefficients_in_A_prime = true;
  std::vector<std::string> failures;
};

// substitutes chi(e_{gamma_i}) = c_i (symbolic), chi(e_beta) = 0 otherwise
// into every segment relation; all residuals must vanish identically
CharacterReport verify_character(const QCtx& ctx, const RootVectorTable& table,
                                 const SegmentData& seg, const std::vector<LSRelation>& rels);

// true iff no rhs monomial of any segment relation is a pure product of gammas
bool check_no_combination_support(const SegmentData& seg, const std::vector<LSRelation>& rels);

// PBW monomials of the given weight are linearly independent modulo the Serre
// ideal component; also checks that they complement it in the full weight space
bool pbw_independent(const QCtx& ctx, const RootVectorTable& table, const Coords& weight);

}  // namespace weylq
