#include <doctest.h>

#include "rootsys.hpp"

using namespace weylq;

namespace {
int expected_count(char series, int rank) {
  switch (series) {
    case 'A': return rank * (rank + 1) / 2;
    case 'B':
    case 'C': return rank * rank;
    case 'D': return rank * (rank - 1);
    case 'E': return rank == 6 ? 36 : (rank == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
  }
  return -1;
}
}  // namespace

TEST_CASE("positive root counts match the classical table") {
  for (std::string label : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "D5",
                            "E6", "E7", "E8", "F4", "G2"}) {
    RootSystem rs = RootSystem::build(label);
    CHECK(rs.D() == expected_count(rs.series(), rs.rank()));
  }
}

TEST_CASE("unknown label is rejected") {
  CHECK_THROWS_AS(RootSystem::build("H3"), Error);
  CHECK_THROWS_AS(RootSystem::build("A0"), Error);
  CHECK_THROWS_AS(RootSystem::build("E9"), Error);
  CHECK_THROWS_AS(RootSystem::build("X"), Error);
}

TEST_CASE("G2 positive roots") {
  RootSystem rs = RootSystem::build("G2");
  std::vector<Coords> expect = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
  for (const auto& r : expect) CHECK(rs.pos_index(r) >= 0);
  CHECK(rs.D() == 6);
}

TEST_CASE("B2 ordered root set") {
  RootSystem rs = RootSystem::build("B2");
  // alpha long, beta short: alpha, alpha+beta, alpha+2beta, beta
  CHECK(rs.pos_index({1, 0}) >= 0);
  CHECK(rs.pos_index({1, 1}) >= 0);
  CHECK(rs.pos_index({1, 2}) >= 0);
  CHECK(rs.pos_index({0, 1}) >= 0);
  CHECK(rs.D() == 4);
}

TEST_CASE("symmetrized form and d") {
  RootSystem b2 = RootSystem::build("B2");
  CHECK(b2.symmetrizers() == std::vector<int>{2, 1});
  CHECK(b2.form({1, 0}, {1, 0}) == 4);  // long root
  RootSystem a2 = RootSystem::build("A2");
  CHECK(a2.form({1, 0}, {0, 1}) == -1);
  RootSystem g2 = RootSystem::build("G2");
  CHECK(g2.symmetrizers() == std::vector<int>{1, 3});
  CHECK(g2.form({3, 2}, {1, 0}) == 0);  // highest root orthogonal to alpha1
  RootSystem f4 = RootSystem::build("F4");
  CHECK(f4.symmetrizers() == std::vector<int>{2, 2, 1, 1});
}

TEST_CASE("pairing with coweights") {
  RootSystem a2 = RootSystem::build("A2");
  Vec<Rat> H1 = {Rat(1), Rat(0)};
  CHECK(a2.pairing(H1, {1, 0}) == Rat(2));
  CHECK(a2.pairing(H1, {0, 1}) == Rat(-1));
  Vec<Rat> Y1 = a2.fundamental_coweight(0);
  CHECK(a2.pairing(Y1, {0, 1}) == Rat(0));
  CHECK(a2.pairing(Y1, {1, 0}) == Rat(1));  // alpha_i(Y_i) = d_i
}

TEST_CASE("every root norm is 2 d_i for some i") {
  for (std::string label : {"A2", "B3", "C3", "D4", "F4", "G2"}) {
    RootSystem rs = RootSystem::build(label);
    for (const auto& beta : rs.positive_roots()) {
      long n = rs.form(beta, beta);
      bool found = false;
      for (int d : rs.symmetrizers())
        if (n == 2 * d) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("reflection closure") {
  for (std::string label : {"A2", "B2", "B3", "G2", "F4"}) {
    RootSystem rs = RootSystem::build(label);
    for (const auto& a : rs.positive_roots())
      for (const auto& b : rs.positive_roots()) {
        Coords r = rs.reflect_by(a, b);
        CHECK(rs.is_root(r));
      }
  }
}

TEST_CASE("root strings are unbroken") {
  for (std::string label : {"B2", "G2"}) {
    RootSystem rs = RootSystem::build(label);
    for (const auto& a : rs.positive_roots())
      for (const auto& b : rs.positive_roots()) {
        if (a == b) continue;
        // walk b + k a upward; once it stops being a root it must stay out
        bool left = false;
        Coords c = b;
        for (int k = 1; k <= 4; ++k) {
          c = coords_add(c, a);
          if (!rs.is_root(c)) left = true;
          else CHECK_FALSE(left);
        }
      }
  }
}

TEST_CASE("pairing rejects mismatched dimensions") {
  RootSystem a2 = RootSystem::build("A2");
  Vec<Rat> bad = {Rat(1)};
  CHECK_THROWS_AS(a2.pairing(bad, {1, 0}), Error);
}
