#pragma once

#include "ordering.hpp"

namespace weylq {

struct SliceDims {
  int l_s = 0, D0 = 0, l = 0, l_prime = 0;
  int dim_Ns = 0, dim_Z = 0, dim_Ts = 0, dim_m_plus = 0, dim_G = 0;
};

// Fills the dimension table from the segment counts and asserts the
// identities dim_Ns = l(s), dim_Z = 2 D0 + l - l', dim_Ts = dim_Ns + dim_Z,
// 2 dim_m_plus + dim_Ts = dim_G.
SliceDims slice_dims(const RootSystem& rs, const SegmentData& seg);

struct ClassRow {
  ConjugacyClass cls;
  bool ordering_ok = false;
  std::string failure;
  SliceDims dims;           // valid iff ordering_ok
  bool gamma1_simple = false;  // some reduced decomposition has simple (or no) gamma1
};

// One row per conjugacy class; rank <= 4.
std::vector<ClassRow> class_table(const RootSystem& rs, PlaneOrder order = PlaneOrder::angle_desc);

}  // namespace weylq
