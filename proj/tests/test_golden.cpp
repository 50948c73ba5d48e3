#include <doctest.h>

#include <weylq.h>

#include <fstream>
#include <sstream>
#include <string>

// Frozen outputs: the fixtures and the derived twisted relation tables are
// regression anchors; any change to conventions or solver behavior must show
// up here.

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  std::string s = os.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

struct Owned {
  char* s = nullptr;
  ~Owned() { weylq_string_free(s); }
};

const std::string kGoldenDir = GOLDEN_DIR;

}  // namespace

TEST_CASE("appendix fixtures match the frozen files") {
  for (std::string label : {"B2", "B3", "B4", "C3", "C4", "D4", "D6", "D8", "F4", "G2", "E7"}) {
    Owned out;
    REQUIRE(weylq_fixture(label.c_str(), &out.s) == WEYLQ_OK);
    CHECK(std::string(out.s) == read_file(kGoldenDir + "/fixture_" + label + ".json"));
  }
}

TEST_CASE("twisted relation tables match the frozen files") {
  struct Row {
    const char* system;
    const char* cls;
    const char* file;
  };
  for (const Row& row : {Row{"A2", "coxeter", "relations_A2_coxeter.json"},
                         Row{"B2", "coxeter", "relations_B2_coxeter.json"},
                         Row{"G2", "coxeter", "relations_G2_coxeter.json"},
                         Row{"B2", "w0", "relations_B2_w0.json"},
                         Row{"G2", "w0", "relations_G2_w0.json"}}) {
    weylq_system* sys = nullptr;
    REQUIRE(weylq_system_create(row.system, &sys) == WEYLQ_OK);
    Owned out;
    REQUIRE(weylq_relations(sys, row.cls, nullptr, &out.s) == WEYLQ_OK);
    CHECK(std::string(out.s) == read_file(kGoldenDir + "/" + row.file));
    weylq_system_destroy(sys);
  }
}
