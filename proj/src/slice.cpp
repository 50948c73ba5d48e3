#include "slice.hpp"

namespace weylq {

SliceDims slice_dims(const RootSystem& rs, const SegmentData& seg) {
  SliceDims d;
  d.l_s = seg.l_s;
  d.D0 = seg.D0;
  d.l = rs.rank();
  d.l_prime = seg.l_prime;
  d.dim_Ns = seg.l_s;
  d.dim_Z = 2 * seg.D0 + (d.l - d.l_prime);
  d.dim_Ts = d.dim_Ns + d.dim_Z;
  d.dim_m_plus = seg.segment_size();
  d.dim_G = 2 * seg.D + d.l;
  if (d.dim_Ts != seg.l_s + 2 * seg.D0 + d.l - d.l_prime)
    throw Error(Errc::invariant_violation, "dim_Ts identity failed");
  if (2 * d.dim_m_plus + d.dim_Ts != d.dim_G)
    throw Error(Errc::invariant_violation, "2 dim_m_plus + dim_Ts != dim_G");
  int expected = seg.D - ((seg.l_s - seg.l_prime) / 2 + seg.D0);
  if (d.dim_m_plus != expected)
    throw Error(Errc::invariant_violation, "segment size does not match the dimension count");
  return d;
}

std::vector<ClassRow> class_table(const RootSystem& rs, PlaneOrder order) {
  std::vector<ClassRow> out;
  for (const auto& cls : conjugacy_classes(rs)) {
    ClassRow row;
    row.cls = cls;
    try {
      AdaptedOrdering ao = adapted_ordering_for(rs, cls.representative, order);
      row.ordering_ok = true;
      row.dims = slice_dims(rs, ao.seg);
      for (const auto& dec : involution_decompositions(rs, ao.aps.s_std)) {
        if (!decomposition_is_reduced(rs, ao.aps.s_std, dec)) continue;
        bool simple = true;
        for (const auto& g : dec.gamma1)
          if (rs.height(g) != 1) simple = false;
        if (simple) {
          row.gamma1_simple = true;
          break;
        }
      }
    } catch (const Error& e) {
      if (e.code != Errc::construction_failed) throw;
      row.ordering_ok = false;
      row.failure = e.what();
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace weylq
