#include "../include/weylq.h"

#include <cstring>
#include <string>

#include "report.hpp"

using namespace weylq;

struct weylq_system {
  RootSystem rs;
};

namespace {

thread_local std::string g_last_error;

weylq_status status_of(Errc code) {
  switch (code) {
    case Errc::ok: return WEYLQ_OK;
    case Errc::unsupported_type: return WEYLQ_ERR_UNSUPPORTED_TYPE;
    case Errc::rank_too_large: return WEYLQ_ERR_RANK_TOO_LARGE;
    case Errc::not_reduced: return WEYLQ_ERR_NOT_REDUCED;
    case Errc::wrong_length: return WEYLQ_ERR_WRONG_LENGTH;
    case Errc::not_a_permutation: return WEYLQ_ERR_NOT_A_PERMUTATION;
    case Errc::too_large: return WEYLQ_ERR_TOO_LARGE;
    case Errc::antipodal_pair: return WEYLQ_ERR_ANTIPODAL_PAIR;
    case Errc::no_fixture: return WEYLQ_ERR_NO_FIXTURE;
    case Errc::not_found: return WEYLQ_ERR_NOT_FOUND;
    case Errc::construction_failed: return WEYLQ_ERR_CONSTRUCTION_FAILED;
    case Errc::singular_carter_matrix: return WEYLQ_ERR_SINGULAR_CARTER_MATRIX;
    case Errc::impure_root_vector: return WEYLQ_ERR_IMPURE_ROOT_VECTOR;
    case Errc::inconsistent_system: return WEYLQ_ERR_INCONSISTENT_SYSTEM;
    case Errc::non_unique_solution: return WEYLQ_ERR_NON_UNIQUE_SOLUTION;
    case Errc::height_bound: return WEYLQ_ERR_HEIGHT_BOUND;
    case Errc::incomplete_relations: return WEYLQ_ERR_INCOMPLETE_RELATIONS;
    case Errc::specialization_singular: return WEYLQ_ERR_SPECIALIZATION_SINGULAR;
    case Errc::invariant_violation: return WEYLQ_ERR_INVARIANT_VIOLATION;
    case Errc::usage: return WEYLQ_ERR_USAGE;
    case Errc::internal: return WEYLQ_ERR_INTERNAL;
  }
  return WEYLQ_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
weylq_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return WEYLQ_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return WEYLQ_ERR_INTERNAL;
  }
}

PlaneOrder parse_order(const char* s) {
  if (s == nullptr || std::string(s) == "angle-desc") return PlaneOrder::angle_desc;
  if (std::string(s) == "angle-asc") return PlaneOrder::angle_asc;
  throw Error(Errc::usage, "plane order must be angle-desc or angle-asc");
}

}  // namespace

extern "C" {

weylq_status weylq_system_create(const char* label, weylq_system** out) {
  if (label == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return WEYLQ_ERR_USAGE;
  }
  *out = nullptr;
  return guarded([&] { *out = new weylq_system{RootSystem::build(label)}; });
}

void weylq_system_destroy(weylq_system* sys) { delete sys; }

weylq_status weylq_system_json(const weylq_system* sys, char** out) {
  if (sys == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return WEYLQ_ERR_USAGE;
  }
  return guarded([&] { *out = dup_string(system_json(sys->rs).dump()); });
}

weylq_status weylq_classes(const weylq_system* sys, const char* format, char** out) {
  if (sys == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return WEYLQ_ERR_USAGE;
  }
  std::string fmt = format == nullptr ? "json" : format;
  return guarded([&] {
    if (fmt == "json") *out = dup_string(classes_json(sys->rs).dump());
    else if (fmt == "csv") *out = dup_string(classes_csv(sys->rs));
    else throw Error(Errc::usage, "format must be json or csv");
  });
}

weylq_status weylq_ordering(const weylq_system* sys, const char* class_spec,
                            const char* plane_order, char** out) {
  if (sys == nullptr || class_spec == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return WEYLQ_ERR_USAGE;
  }
  return guarded([&] {
    WeylElement s = resolve_class(sys->rs, class_spec);
    *out = dup_string(ordering_json(sys->rs, s, parse_order(plane_order)).dump());
  });
}

weylq_status weylq_fixture(const char* label, char** out) {
  if (label == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return WEYLQ_ERR_USAGE;
  }
  return guarded([&] { *out = dup_string(fixture_json(label).dump()); });
}

weylq_status weylq_relations(const weylq_system* sys, const char* class_spec,
                             const char* plane_order, char** out) {
  if (sys == nullptr || class_spec == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return WEYLQ_ERR_USAGE;
  }
  return guarded([&] {
    WeylElement s = resolve_class(sys->rs, class_spec);
    *out = dup_string(relations_json(sys->rs, s, parse_order(plane_order)).dump());
  });
}

weylq_status weylq_verify(const weylq_system* sys, char** report_json, int* failures) {
  if (sys == nullptr || report_json == nullptr || failures == nullptr) {
    g_last_error = "null argument";
    return WEYLQ_ERR_USAGE;
  }
  return guarded([&] {
    VerifyOutcome outcome = run_verify(sys->rs);
    *report_json = dup_string(outcome.report.dump());
    *failures = outcome.failures;
  });
}

weylq_status weylq_sl2w(int max_m, int max_k, const char* epsilon, char** out) {
  if (out == nullptr) {
    g_last_error = "null argument";
    return WEYLQ_ERR_USAGE;
  }
  std::string eps = epsilon == nullptr ? "symbolic" : epsilon;
  return guarded([&] {
    if (max_m < 0 || max_k < 0) throw Error(Errc::usage, "truncation bounds must be nonnegative");
    *out = dup_string(sl2w_json(max_m, max_k, eps).dump());
  });
}

void weylq_string_free(char* s) { std::free(s); }

const char* weylq_status_name(weylq_status status) {
  switch (status) {
    case WEYLQ_OK: return "ok";
    case WEYLQ_ERR_UNSUPPORTED_TYPE: return "unsupported_type";
    case WEYLQ_ERR_RANK_TOO_LARGE: return "rank_too_large";
    case WEYLQ_ERR_NOT_REDUCED: return "not_reduced";
    case WEYLQ_ERR_WRONG_LENGTH: return "wrong_length";
    case WEYLQ_ERR_NOT_A_PERMUTATION: return "not_a_permutation";
    case WEYLQ_ERR_TOO_LARGE: return "too_large";
    case WEYLQ_ERR_ANTIPODAL_PAIR: return "antipodal_pair";
    case WEYLQ_ERR_NO_FIXTURE: return "no_fixture";
    case WEYLQ_ERR_NOT_FOUND: return "not_found";
    case WEYLQ_ERR_CONSTRUCTION_FAILED: return "construction_failed";
    case WEYLQ_ERR_SINGULAR_CARTER_MATRIX: return "singular_carter_matrix";
    case WEYLQ_ERR_IMPURE_ROOT_VECTOR: return "impure_root_vector";
    case WEYLQ_ERR_INCONSISTENT_SYSTEM: return "inconsistent_system";
    case WEYLQ_ERR_NON_UNIQUE_SOLUTION: return "non_unique_solution";
    case WEYLQ_ERR_HEIGHT_BOUND: return "height_bound";
    case WEYLQ_ERR_INCOMPLETE_RELATIONS: return "incomplete_relations";
    case WEYLQ_ERR_SPECIALIZATION_SINGULAR: return "specialization_singular";
    case WEYLQ_ERR_INVARIANT_VIOLATION: return "invariant_violation";
    case WEYLQ_ERR_USAGE: return "usage";
    case WEYLQ_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* weylq_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
