// Acceptance suite: one pass/fail line per criterion; exit code is the number
// of failed criteria.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "cayley.hpp"
#include "qalgebra.hpp"
#include "slice.hpp"
#include "sl2w.hpp"

using namespace weylq;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& fn) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool pass = false;
  try {
    pass = fn(detail);
  } catch (const std::exception& e) {
    detail = e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << " (" << name << ") ["
            << ms << " ms]";
  if (!detail.empty()) std::cout << " - " << detail;
  std::cout << "\n"
            << std::flush;
  if (!pass) ++g_failures;
}

bool fixtures_criterion(std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  auto small_start = std::chrono::steady_clock::now();
  for (std::string label : {"B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2", "E7"}) {
    if (label == "E7") {
      // the rank <= 4 fixtures must finish inside five seconds
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - small_start)
                    .count();
      os << "rank<=4 fixtures in " << ms << " ms; ";
      if (ms >= 5000) {
        ok = false;
        os << "rank<=4 fixture budget exceeded; ";
      }
    }
    RootSystem rs = RootSystem::build(label);
    Fixture f = appendix_fixture(label);
    if (!is_normal(rs, f.ordering.seq)) {
      ok = false;
      os << label << ": not normal; ";
      continue;
    }
    int p = rs.D(), n = int(f.dec.gamma1.size());
    std::vector<int> gpos;
    for (int k = 0; k < p; ++k)
      for (const auto& g : f.dec.gamma1)
        if (f.ordering.seq[std::size_t(k)] == g) gpos.push_back(k);
    if (int(gpos.size()) != n || gpos.front() != (p - n) / 2 || gpos.back() != p - 1) {
      ok = false;
      os << label << ": interleave pattern broken; ";
      continue;
    }
    for (int k = 0; k < n; ++k)
      if (f.ordering.seq[std::size_t(gpos[std::size_t(k)])] != f.dec.gamma1[std::size_t(k)]) {
        ok = false;
        os << label << ": gamma order broken; ";
      }
    if (!no_combination_property(rs, f.ordering.seq, (p - n) / 2, p, gpos)) {
      ok = false;
      os << label << ": no-combination property fails; ";
    }
    WeylElement w = WeylElement::identity(rs);
    for (const auto& g : f.dec.gamma1) w = w * WeylElement::reflection(rs, g);
    if (!(w == longest_element(rs))) {
      ok = false;
      os << label << ": gamma product is not w0; ";
    }
  }
  os << "E7 validated (optional); E8 generator not implemented (optional)";
  detail = os.str();
  return ok;
}

bool tmatrel_criterion(std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  long decs_checked = 0;
  for (std::string label : {"A1", "A2", "A3", "B2", "B3", "C3"}) {
    RootSystem rs = RootSystem::build(label);
    for (const auto& cls : conjugacy_classes(rs)) {
      for (const auto& dec : involution_decompositions(rs, cls.representative)) {
        auto gammas = dec.gammas();
        if (gammas.empty()) continue;
        ++decs_checked;
        if (!(cayley_gamma_matrix_gauss(rs, gammas) ==
              cayley_gamma_closed_form(rs, gammas))) {
          ok = false;
          os << label << " class " << cls.representative.length() << ": mismatch; ";
        }
      }
    }
  }
  std::ostringstream head;
  head << decs_checked << " decompositions checked; " << os.str();
  detail = head.str();
  return ok;
}

bool dimension_criterion(std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  int succeeded = 0, failed_cons = 0;
  for (std::string label : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4",
                            "G2"}) {
    RootSystem rs = RootSystem::build(label);
    for (const auto& row : class_table(rs)) {
      if (!row.ordering_ok) {
        ++failed_cons;
        os << label << "/" << row.cls.representative.length() << ": no ordering; ";
        continue;
      }
      ++succeeded;
      const SliceDims& d = row.dims;
      if (d.dim_m_plus != (2 * row.dims.dim_G - 2 * d.dim_Ts) / 4 &&
          2 * d.dim_m_plus + d.dim_Ts != d.dim_G) {
        ok = false;
        os << label << ": identity broken; ";
      }
      int expect = (d.dim_G - d.l) / 2 - ((d.l_s - d.l_prime) / 2 + d.D0);
      if (d.dim_m_plus != expect) {
        ok = false;
        os << label << ": segment count formula broken; ";
      }
    }
  }
  std::ostringstream head;
  head << succeeded << " classes with adapted orderings";
  if (failed_cons > 0) head << ", " << failed_cons << " without (reported): " << os.str();
  else if (!os.str().empty()) head << "; " << os.str();
  detail = head.str();
  return ok && succeeded > 0;
}

bool pbw_criterion(std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  for (std::string label : {"A1", "A2", "B2", "G2"}) {
    RootSystem rs = RootSystem::build(label);
    QCtx ctx{&rs, 2};
    auto word = longest_element(rs).canonical_word();
    auto table = root_vectors(ctx, word);
    // all weights of height <= 6
    std::function<void(Coords, int, int)> walk = [&](Coords w, int i, int h) {
      if (h > 0 && !pbw_independent(ctx, table, w)) {
        ok = false;
        os << label << ": dependence at a weight of height " << h << "; ";
      }
      if (h >= 6) return;
      for (int j = i; j < rs.rank(); ++j) {
        Coords w2 = w;
        ++w2[std::size_t(j)];
        walk(w2, j, h + 1);
      }
    };
    walk(Coords(std::size_t(rs.rank()), 0), 0, 0);
    // every LS relation solves uniquely
    for (int i = 0; i < rs.D(); ++i)
      for (int j = i + 1; j < rs.D(); ++j) {
        try {
          ls_relation(ctx, table, i, j);
        } catch (const Error& e) {
          ok = false;
          os << label << " pair (" << i << "," << j << "): " << e.what() << "; ";
        }
      }
  }
  detail = os.str();
  return ok;
}

bool character_criterion(std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  int verified = 0;
  for (std::string label : {"A1", "A2", "B2", "G2"}) {
    RootSystem rs = RootSystem::build(label);
    for (const auto& cls : conjugacy_classes(rs)) {
      AdaptedOrdering ao;
      try {
        ao = adapted_ordering_for(rs, cls.representative);
      } catch (const Error& e) {
        os << label << "/" << cls.representative.length() << ": no ordering (" << e.what()
           << "); ";
        continue;
      }
      auto [p, d] = p_matrix(rs, ao.aps.s_std);
      (void)p;
      QCtx ctx{&rs, 2 * d};
      auto table = root_vectors(ctx, word_from_ordering(rs, ao.seg.ordering));
      CayleyOperator op(rs, ao.aps.s_std);
      CayleyPairing pairing = [&op](const Coords& x, const Coords& y) {
        return op.pair_roots(x, y);
      };
      auto rels = segment_relations(ctx, table, ao.seg, pairing);
      auto rep = verify_character(ctx, table, ao.seg, rels);
      ++verified;
      if (!(rep.all_residuals_zero && rep.no_combination_support &&
            rep.coefficients_in_A_prime)) {
        ok = false;
        os << label << "/" << cls.representative.length() << ": ";
        for (const auto& f : rep.failures) os << f << "; ";
      }
    }
  }
  std::ostringstream head;
  head << verified << " classes verified; " << os.str();
  detail = head.str();
  return ok && verified > 0;
}

bool twist_exponent_criterion(std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  for (std::string label : {"A1", "A2", "B2", "G2", "A3"}) {
    RootSystem rs = RootSystem::build(label);
    for (const auto& cls : conjugacy_classes(rs)) {
      AdaptedOrdering ao;
      try {
        ao = adapted_ordering_for(rs, cls.representative);
      } catch (const Error&) {
        continue;
      }
      CayleyOperator op(rs, ao.aps.s_std);
      const auto& gammas = ao.seg.gammas;
      for (std::size_t i = 0; i < gammas.size(); ++i)
        for (std::size_t j = i + 1; j < gammas.size(); ++j) {
          Rat expo = Rat(rs.form(gammas[i], gammas[j])) + op.pair_roots(gammas[i], gammas[j]);
          if (sgn(expo) != 0) {
            ok = false;
            os << label << ": nonzero exponent for a gamma pair; ";
          }
        }
    }
  }
  detail = os.str();
  return ok;
}

bool sl2_criterion(std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  // e v_{mk} = eps^{-m} v_{mk} for |m| <= 6, k <= 6
  for (long m = -6; m <= 6 && ok; ++m)
    for (long k = 0; k <= 6 && ok; ++k) {
      QModuleVector v;
      v.add(m, k, QScalar(1));
      QModuleVector want;
      want.add(m, k, QScalar::v_pow(-m));
      if (!(act(SL2StarElement::e(), v) == want)) {
        ok = false;
        os << "e action wrong at (" << m << "," << k << "); ";
      }
    }
  WhittakerReport rep = whittaker_and_hecke(6, 6);
  for (const auto& [m, k] : rep.whittaker_basis)
    if (m != 0) {
      ok = false;
      os << "whittaker vector off m=0; ";
    }
  if (rep.whittaker_basis.size() != 7) {
    ok = false;
    os << "whittaker space dimension wrong; ";
  }
  for (int k = 0; k <= 6; ++k) {
    if (rep.hk0_rank_by_degree[std::size_t(k)] != 1 ||
        rep.hk1_rank_by_degree[std::size_t(k)] != 1) {
      ok = false;
      os << "hecke rank wrong at degree " << k << "; ";
    }
  }
  if (!rep.hk1_nonzero) {
    ok = false;
    os << "Hk^1 vanished; ";
  }
  detail = os.str();
  return ok;
}

bool connectivity_criterion(std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  for (std::string label : {"A2", "B2"}) {
    RootSystem rs = RootSystem::build(label);
    if (!connectivity_check(rs)) {
      ok = false;
      os << label << ": transposition graph disconnected; ";
    }
    os << label << "=" << all_normal_orderings(rs).size() << " orderings ";
  }
  detail = os.str();
  return ok;
}

bool braid_criterion(std::string& detail) {
  RootSystem a2 = RootSystem::build("A2");
  QCtx ctx{&a2, 2};
  std::vector<NCPoly> gens = {NCPoly::E(ctx, 0), NCPoly::E(ctx, 1), NCPoly::F(ctx, 0),
                              NCPoly::F(ctx, 1)};
  std::vector<Rat> k0(2, Rat(0)), k1(2, Rat(0));
  k0[0] = 1;
  k1[1] = 1;
  gens.push_back(NCPoly::K(ctx, k0));
  gens.push_back(NCPoly::K(ctx, k1));
  for (const auto& x : gens) {
    NCPoly lhs = braid_T(ctx, 0, braid_T(ctx, 1, braid_T(ctx, 0, x)));
    NCPoly rhs = braid_T(ctx, 1, braid_T(ctx, 0, braid_T(ctx, 1, x)));
    if (!(lhs == rhs)) {
      detail = "T1 T2 T1 != T2 T1 T2 on a generator";
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "appendix fixtures", fixtures_criterion);
  criterion(2, "cayley matrix lemma", tmatrel_criterion);
  criterion(3, "dimension identities", dimension_criterion);
  criterion(4, "pbw/ls oracle", pbw_criterion);
  criterion(5, "nilpotent character", character_criterion);
  criterion(6, "twist exponents", twist_exponent_criterion);
  criterion(7, "sl2 module", sl2_criterion);
  criterion(8, "ordering graph connectivity", connectivity_criterion);
  criterion(9, "braid relation", braid_criterion);
  std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << "\n";
  return g_failures;
}
