#pragma once

#include <stdexcept>
#include <string>

namespace weylq {

enum class Errc {
  ok = 0,
  unsupported_type,
  rank_too_large,
  not_reduced,
  wrong_length,
  not_a_permutation,
  too_large,
  antipodal_pair,
  no_fixture,
  not_found,
  construction_failed,
  singular_carter_matrix,
  impure_root_vector,
  inconsistent_system,
  non_unique_solution,
  height_bound,
  incomplete_relations,
  specialization_singular,
  invariant_violation,
  usage,
  internal,
};

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& what) : std::runtime_error(what), code(c) {}
};

}  // namespace weylq
