#pragma once

#include <json.hpp>

#include "cayley.hpp"
#include "qalgebra.hpp"
#include "sl2w.hpp"
#include "slice.hpp"

namespace weylq {

using Json = nlohmann::ordered_json;

Json rat_json(const Rat& r);
Json qscalar_json(const QScalar& x);

Json system_json(const RootSystem& rs);

// "identity", "coxeter", "w0", or a comma/space separated 1-based word
WeylElement resolve_class(const RootSystem& rs, const std::string& spec);
std::string class_name(const RootSystem& rs, const WeylElement& rep);

Json classes_json(const RootSystem& rs, PlaneOrder order = PlaneOrder::angle_desc);
std::string classes_csv(const RootSystem& rs, PlaneOrder order = PlaneOrder::angle_desc);

Json ordering_json(const RootSystem& rs, const WeylElement& s, PlaneOrder order);
Json fixture_json(const std::string& label);

// twisted commutation-relation table for the segment of a class; gated to the
// relation-pipeline scale (rank <= 2 plus A3)
Json relations_json(const RootSystem& rs, const WeylElement& s, PlaneOrder order);

// full verification: dimension identities and the Cayley matrix lemma for
// every class, plus the twisted-relation/character suite at small rank
struct VerifyOutcome {
  Json report;
  int failures = 0;
};
VerifyOutcome run_verify(const RootSystem& rs, PlaneOrder order = PlaneOrder::angle_desc);

Json sl2w_json(int max_m, int max_k, const std::string& epsilon);

}  // namespace weylq
