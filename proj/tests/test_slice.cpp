#include <doctest.h>

#include "slice.hpp"

using namespace weylq;

TEST_CASE("A2 coxeter dims") {
  RootSystem a2 = RootSystem::build("A2");
  WeylElement cox = WeylElement::from_word(a2, {0, 1});
  AdaptedOrdering ao = adapted_ordering_for(a2, cox);
  SliceDims d = slice_dims(a2, ao.seg);
  CHECK(d.dim_Ts == 2);
  CHECK(d.dim_m_plus == 3);
  CHECK(d.dim_G == 8);
  CHECK(2 * d.dim_m_plus + d.dim_Ts == d.dim_G);
}

TEST_CASE("identity dims") {
  RootSystem a2 = RootSystem::build("A2");
  AdaptedOrdering ao = adapted_ordering_for(a2, WeylElement::identity(a2));
  SliceDims d = slice_dims(a2, ao.seg);
  CHECK(d.dim_Ts == d.dim_G);
  CHECK(d.dim_m_plus == 0);
}

TEST_CASE("A1 dims") {
  RootSystem a1 = RootSystem::build("A1");
  AdaptedOrdering ao = adapted_ordering_for(a1, WeylElement::simple(a1, 0));
  SliceDims d = slice_dims(a1, ao.seg);
  CHECK(d.dim_Ts == 1);
  CHECK(d.dim_m_plus == 1);
  CHECK(d.dim_G == 3);
}

TEST_CASE("class tables") {
  RootSystem a1 = RootSystem::build("A1");
  CHECK(class_table(a1).size() == 2);
  RootSystem a2 = RootSystem::build("A2");
  auto rows = class_table(a2);
  CHECK(rows.size() == 3);
  for (const auto& row : rows) CHECK(row.ordering_ok);
  RootSystem b2 = RootSystem::build("B2");
  auto rows_b2 = class_table(b2);
  CHECK(rows_b2.size() == 5);
  for (const auto& row : rows_b2) {
    if (!row.ordering_ok) continue;
    if (row.cls.representative.is_identity()) CHECK(row.dims.dim_Ts == 10);
  }
}
