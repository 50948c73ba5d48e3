#include <doctest.h>

#include "cayley.hpp"

using namespace weylq;

TEST_CASE("A2 coxeter cayley matrix") {
  RootSystem a2 = RootSystem::build("A2");
  WeylElement cox = WeylElement::from_word(a2, {0, 1});
  std::vector<Coords> gammas = {{1, 0}, {0, 1}};
  Mat<Rat> gauss = cayley_gamma_matrix_gauss(a2, gammas);
  CHECK(gauss[0][0] == 0);
  CHECK(gauss[0][1] == 1);
  CHECK(gauss[1][0] == -1);
  CHECK(gauss[1][1] == 0);
  CHECK(gauss == cayley_gamma_closed_form(a2, gammas));
  // direct operator route
  CayleyOperator op(a2, cox);
  CHECK(op.pair_roots({1, 0}, {0, 1}) == Rat(1));
  CHECK(op.pair_roots({0, 1}, {1, 0}) == Rat(-1));
  CHECK(op.pair_roots({1, 0}, {1, 0}) == Rat(0));
}

TEST_CASE("gauss route for a non-orthogonal gamma pair") {
  RootSystem a2 = RootSystem::build("A2");
  std::vector<Coords> gammas = {{0, 1}, {1, 1}};  // s_{a2} s_{a1+a2} = coxeter
  CHECK(cayley_gamma_matrix_gauss(a2, gammas) == cayley_gamma_closed_form(a2, gammas));
}

TEST_CASE("A1 cayley data") {
  RootSystem a1 = RootSystem::build("A1");
  WeylElement s = WeylElement::simple(a1, 0);
  CayleyOperator op(a1, s);
  CHECK(op.pair_roots({1}, {1}) == Rat(0));  // (1+s)/(1-s) = 0 on the -1 line
  auto [p, d] = p_matrix(a1, s);
  CHECK(p[0][0] == Rat(1, 2));  // (Y1, Y1) = 1/2
  CHECK(d == 4);                // p/2 = 1/4
}

TEST_CASE("identity p matrix is the coweight gram matrix") {
  RootSystem a2 = RootSystem::build("A2");
  auto [p, d] = p_matrix(a2, WeylElement::identity(a2));
  CHECK(p[0][0] == Rat(2, 3));
  CHECK(p[0][1] == Rat(1, 3));
  CHECK(p[1][0] == Rat(1, 3));
  CHECK(d == 6);  // p_01/2 = 1/6
}

TEST_CASE("A2 coxeter p matrix and d") {
  RootSystem a2 = RootSystem::build("A2");
  WeylElement cox = WeylElement::from_word(a2, {0, 1});
  auto [p, d] = p_matrix(a2, cox);
  CHECK(p[0][0] == Rat(2, 3));
  CHECK(p[0][1] == Rat(2, 3));
  CHECK(p[1][0] == Rat(0));
  CHECK(p[1][1] == Rat(2, 3));
  CHECK(d == 3);
}

TEST_CASE("solve_n canonical solution") {
  RootSystem a2 = RootSystem::build("A2");
  WeylElement cox = WeylElement::from_word(a2, {0, 1});
  auto dec = involution_decompose(a2, cox);
  CayleyData cd = cayley_matrix(a2, cox, dec);
  CHECK(cd.c[0][1] == Rat(1));
  CHECK(cd.n[0][1] == Rat(1, 2));
  CHECK(cd.n[1][0] == Rat(-1, 2));
  CHECK(cd.d == 3);
  // zero c gives zero n
  Mat<Rat> zero(2, Vec<Rat>(2, Rat(0)));
  Mat<Rat> n0 = solve_n(a2, zero, zero);
  CHECK(n0[0][1] == Rat(0));
  // with a symmetric part
  Mat<Rat> sym(2, Vec<Rat>(2, Rat(1)));
  Mat<Rat> n1 = solve_n(a2, cd.c, sym);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(Rat(a2.symmetrizers()[std::size_t(j)]) * n1[std::size_t(i)][std::size_t(j)] -
                Rat(a2.symmetrizers()[std::size_t(i)]) * n1[std::size_t(j)][std::size_t(i)] ==
            cd.c[std::size_t(i)][std::size_t(j)]);
}

TEST_CASE("skew symmetry of the cayley pairing") {
  for (std::string label : {"A2", "B2", "G2", "A3"}) {
    RootSystem rs = RootSystem::build(label);
    for (const auto& cls : conjugacy_classes(rs)) {
      CayleyOperator op(rs, cls.representative);
      for (const auto& a : rs.positive_roots())
        for (const auto& b : rs.positive_roots())
          CHECK(op.pair_roots(a, b) == -op.pair_roots(b, a));
    }
  }
}

TEST_CASE("gauss route equals closed form across decompositions") {
  for (std::string label : {"A1", "A2", "B2"}) {
    RootSystem rs = RootSystem::build(label);
    for (const auto& cls : conjugacy_classes(rs))
      for (const auto& dec : involution_decompositions(rs, cls.representative)) {
        auto gammas = dec.gammas();
        if (gammas.empty()) continue;
        CHECK(cayley_gamma_matrix_gauss(rs, gammas) == cayley_gamma_closed_form(rs, gammas));
      }
  }
}

TEST_CASE("c matrix recomputed two ways") {
  for (std::string label : {"A2", "B2", "A3"}) {
    RootSystem rs = RootSystem::build(label);
    for (const auto& cls : conjugacy_classes(rs)) {
      const WeylElement& s = cls.representative;
      auto decs = involution_decompositions(rs, s);
      CayleyOperator op(rs, s);
      for (const auto& dec : decs) {
        auto gammas = dec.gammas();
        if (gammas.empty()) continue;
        Mat<Rat> via_gamma = c_via_gamma_expansion(rs, gammas);
        for (int i = 0; i < rs.rank(); ++i) {
          Coords ei(std::size_t(rs.rank()), 0);
          ei[std::size_t(i)] = 1;
          for (int j = 0; j < rs.rank(); ++j) {
            Coords ej(std::size_t(rs.rank()), 0);
            ej[std::size_t(j)] = 1;
            CHECK(via_gamma[std::size_t(i)][std::size_t(j)] == op.pair_roots(ei, ej));
          }
        }
      }
    }
  }
}

TEST_CASE("K operator identity: the skew part of canonical n is the cayley form") {
  RootSystem b2 = RootSystem::build("B2");
  WeylElement cox = WeylElement::from_word(b2, {0, 1});
  auto dec = involution_decompose(b2, cox);
  CayleyData cd = cayley_matrix(b2, cox, dec);
  // (K alpha_i, alpha_j) = d_j n_ij; K - K* must reproduce c
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Rat kij = Rat(b2.symmetrizers()[std::size_t(j)]) * cd.n[std::size_t(i)][std::size_t(j)];
      Rat kji = Rat(b2.symmetrizers()[std::size_t(i)]) * cd.n[std::size_t(j)][std::size_t(i)];
      CHECK(kij - kji == cd.c[std::size_t(i)][std::size_t(j)]);
    }
}
