#include "report.hpp"

#include <sstream>

namespace weylq {

Json rat_json(const Rat& r) {
  return Json::array({to_i64(r.get_num()), to_i64(r.get_den())});
}

Json qscalar_json(const QScalar& x) {
  Json num = Json::object(), den = Json::object();
  for (const auto& [e, c] : x.num().coeff_map()) num[std::to_string(e)] = to_i64(c);
  for (const auto& [e, c] : x.den().coeff_map()) den[std::to_string(e)] = to_i64(c);
  return Json{{"num", num}, {"den", den}};
}

Json system_json(const RootSystem& rs) {
  Json j;
  j["schema"] = "weylq/1";
  j["type"] = rs.label();
  j["rank"] = rs.rank();
  j["cartan"] = rs.cartan();
  j["d"] = rs.symmetrizers();
  j["positive_roots"] = rs.positive_roots();
  return j;
}

WeylElement resolve_class(const RootSystem& rs, const std::string& spec) {
  if (spec == "identity" || spec == "e") return WeylElement::identity(rs);
  if (spec == "coxeter") {
    std::vector<int> word;
    for (int i = 0; i < rs.rank(); ++i) word.push_back(i);
    return WeylElement::from_word(rs, word);
  }
  if (spec == "w0") return longest_element(rs);
  std::vector<int> word;
  std::string tok;
  for (char ch : spec + ",") {
    if (ch == ',' || ch == ' ' || ch == '.') {
      if (!tok.empty()) {
        int v = 0;
        try {
          v = std::stoi(tok);
        } catch (const std::exception&) {
          throw Error(Errc::usage, "bad class word: " + spec);
        }
        if (v < 1 || v > rs.rank()) throw Error(Errc::usage, "word letter out of range");
        word.push_back(v - 1);
        tok.clear();
      }
    } else {
      tok.push_back(ch);
    }
  }
  if (word.empty()) throw Error(Errc::usage, "empty class specification");
  return WeylElement::from_word(rs, word);
}

std::string class_name(const RootSystem&, const WeylElement& rep) {
  if (rep.is_identity()) return "identity";
  std::ostringstream os;
  os << "w";
  for (int i : rep.canonical_word()) os << (i + 1);
  std::string name = os.str();
  return name;
}

namespace {

Json dims_json(const SliceDims& d) {
  Json j;
  j["l_s"] = d.l_s;
  j["D0"] = d.D0;
  j["l"] = d.l;
  j["l_prime"] = d.l_prime;
  j["dim_Ns"] = d.dim_Ns;
  j["dim_Z"] = d.dim_Z;
  j["dim_Ts"] = d.dim_Ts;
  j["dim_m_plus"] = d.dim_m_plus;
  j["dim_G"] = d.dim_G;
  return j;
}

std::vector<std::string> class_aliases(const RootSystem& rs, const WeylElement& rep) {
  std::vector<std::string> aliases;
  if (rep.is_identity()) aliases.push_back("identity");
  if (rs.rank() <= 4) {
    WeylElement cox = resolve_class(rs, "coxeter");
    if (class_representative(rs, cox) == rep) aliases.push_back("coxeter");
    WeylElement w0 = longest_element(rs);
    if (class_representative(rs, w0) == rep) aliases.push_back("w0");
  }
  return aliases;
}

}  // namespace

Json classes_json(const RootSystem& rs, PlaneOrder order) {
  Json j;
  j["schema"] = "weylq/1";
  j["system"] = rs.label();
  j["classes"] = Json::array();
  for (const auto& row : class_table(rs, order)) {
    Json c;
    c["name"] = class_name(rs, row.cls.representative);
    Json word = Json::array();
    for (int i : row.cls.representative.canonical_word()) word.push_back(i + 1);
    c["rep_word"] = word;
    c["aliases"] = class_aliases(rs, row.cls.representative);
    c["size"] = row.cls.size;
    c["ordering_ok"] = row.ordering_ok;
    c["gamma1_simple"] = row.gamma1_simple;
    if (row.ordering_ok) c["dims"] = dims_json(row.dims);
    else c["failure"] = row.failure;
    j["classes"].push_back(c);
  }
  return j;
}

std::string classes_csv(const RootSystem& rs, PlaneOrder order) {
  std::ostringstream os;
  os << "class,size,ordering_ok,gamma1_simple,l_s,D0,l,l_prime,dim_Ns,dim_Z,dim_Ts,"
        "dim_m_plus,dim_G\n";
  for (const auto& row : class_table(rs, order)) {
    os << class_name(rs, row.cls.representative) << "," << row.cls.size << ","
       << (row.ordering_ok ? 1 : 0) << "," << (row.gamma1_simple ? 1 : 0);
    if (row.ordering_ok) {
      const auto& d = row.dims;
      os << "," << d.l_s << "," << d.D0 << "," << d.l << "," << d.l_prime << "," << d.dim_Ns
         << "," << d.dim_Z << "," << d.dim_Ts << "," << d.dim_m_plus << "," << d.dim_G;
    } else {
      os << ",,,,,,,,,";
    }
    os << "\n";
  }
  return os.str();
}

namespace {

Json coords_list(const std::vector<Coords>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(c);
  return out;
}

Json segment_json(const SegmentData& seg) {
  Json j;
  j["ordering"] = coords_list(seg.ordering.seq);
  j["m_plus"] = Json{{"begin", seg.m_begin}, {"end", seg.m_end}};
  j["gamma_positions"] = seg.gamma_pos;
  j["gammas"] = coords_list(seg.gammas);
  Json g1 = Json::array(), g2 = Json::array();
  for (int k = 0; k < int(seg.gammas.size()); ++k)
    (k < seg.n ? g1 : g2).push_back(seg.gammas[std::size_t(k)]);
  j["gamma1"] = g1;
  j["gamma2"] = g2;
  j["n"] = seg.n;
  j["l_s"] = seg.l_s;
  j["l_prime"] = seg.l_prime;
  j["D0"] = seg.D0;
  j["D"] = seg.D;
  int mid = seg.D - seg.l_s - seg.D0;
  j["middle_unconstrained"] = mid > 0;  // inner '...' region only fixed up to normality
  return j;
}

}  // namespace

Json ordering_json(const RootSystem& rs, const WeylElement& s, PlaneOrder order) {
  AdaptedOrdering ao = adapted_ordering_for(rs, s, order);
  Json j;
  j["schema"] = "weylq/1";
  j["system"] = rs.label();
  j["class"] = class_name(rs, rs.rank() <= 4 ? class_representative(rs, s) : s);
  Json hbar = Json::array();
  for (const auto& x : ao.aps.hbar) hbar.push_back(rat_json(x));
  j["h_bar"] = hbar;
  Json gword = Json::array();
  for (int i : ao.aps.chamber.canonical_word()) gword.push_back(i + 1);
  j["chamber_word"] = gword;
  Json sword = Json::array();
  for (int i : ao.aps.s_std.canonical_word()) sword.push_back(i + 1);
  j["s_standard_word"] = sword;
  j["segment"] = segment_json(ao.seg);
  Json parts = Json::array();
  for (std::size_t k = 0; k < ao.aps.h_parts.size(); ++k) {
    Json p;
    p["angle_m"] = ao.aps.part_angle_m[k];
    Json h = Json::array();
    for (const auto& x : ao.aps.h_parts[k]) h.push_back(rat_json(x));
    p["h"] = h;
    parts.push_back(p);
  }
  j["invariant_parts"] = parts;
  return j;
}

Json fixture_json(const std::string& label) {
  Fixture f = appendix_fixture(label);
  Json j;
  j["schema"] = "weylq/1";
  j["system"] = label;
  j["ordering"] = coords_list(f.ordering.seq);
  j["gamma1"] = coords_list(f.dec.gamma1);
  j["gamma2"] = coords_list(f.dec.gamma2);
  return j;
}

Json relations_json(const RootSystem& rs, const WeylElement& s, PlaneOrder order) {
  if (!(rs.rank() <= 2 || rs.label() == "A3"))
    throw Error(Errc::rank_too_large, "relation tables gated to rank <= 2 plus A3");
  AdaptedOrdering ao = adapted_ordering_for(rs, s, order);
  auto [p, d] = p_matrix(rs, ao.aps.s_std);
  (void)p;
  QCtx ctx{&rs, 2 * d};
  auto table = root_vectors(ctx, word_from_ordering(rs, ao.seg.ordering));
  CayleyOperator op(rs, ao.aps.s_std);
  CayleyPairing pairing = [&op](const Coords& x, const Coords& y) {
    return op.pair_roots(x, y);
  };
  auto rels = segment_relations(ctx, table, ao.seg, pairing);

  Json j;
  j["schema"] = "weylq/1";
  j["system"] = rs.label();
  j["class"] = class_name(rs, rs.rank() <= 4 ? class_representative(rs, s) : s);
  j["d"] = d;
  j["variable"] = "v = q^(1/" + std::to_string(2 * d) + ")";
  j["segment"] = segment_json(ao.seg);
  Json out = Json::array();
  for (const auto& rel : rels) {
    Json r;
    r["alpha"] = rel.alpha;
    r["beta"] = rel.beta;
    r["positions"] = Json::array({rel.pos_alpha, rel.pos_beta});
    r["q_exponent"] = rat_json(rel.q_exponent);
    r["between_positions"] = rel.between_positions;
    Json monos = Json::array();
    for (const auto& [exps, coeff] : rel.rhs) {
      Json m;
      m["exps"] = exps;
      m["coeff"] = qscalar_json(coeff);
      monos.push_back(m);
    }
    r["rhs"] = monos;
    out.push_back(r);
  }
  j["relations"] = out;
  return j;
}

VerifyOutcome run_verify(const RootSystem& rs, PlaneOrder order) {
  VerifyOutcome out;
  out.report["schema"] = "weylq/1";
  out.report["system"] = rs.label();
  Json checks = Json::array();
  auto add_check = [&](const std::string& name, bool pass, const std::string& detail = "") {
    Json c;
    c["name"] = name;
    c["pass"] = pass;
    if (!detail.empty()) c["detail"] = detail;
    checks.push_back(c);
    if (!pass) ++out.failures;
  };

  if (rs.rank() > 4) throw Error(Errc::rank_too_large, "verify gated to rank <= 4");

  for (const auto& cls : conjugacy_classes(rs)) {
    std::string cname = class_name(rs, cls.representative);
    // Cayley matrix lemma over every decomposition found for the class rep
    bool cayley_ok = true;
    std::string reason;
    for (const auto& dec : involution_decompositions(rs, cls.representative)) {
      auto gammas = dec.gammas();
      if (gammas.empty()) continue;
      if (!(cayley_gamma_matrix_gauss(rs, gammas) == cayley_gamma_closed_form(rs, gammas))) {
        cayley_ok = false;
        reason = "Gauss route disagrees with the closed form";
      }
    }
    add_check("cayley_matrix:" + cname, cayley_ok, reason);

    bool dims_ok = true;
    bool have_ordering = false;
    SegmentData seg;
    AdaptedOrdering ao;
    try {
      ao = adapted_ordering_for(rs, cls.representative, order);
      seg = ao.seg;
      have_ordering = true;
      slice_dims(rs, seg);
    } catch (const Error& e) {
      if (e.code == Errc::invariant_violation) {
        dims_ok = false;
        reason = e.what();
      } else if (e.code != Errc::construction_failed) {
        throw;
      } else {
        reason = e.what();
      }
    }
    add_check("dimension_identities:" + cname, dims_ok,
              have_ordering ? "" : ("no adapted ordering: " + reason));

    // character suite at relation-pipeline scale
    if (have_ordering && (rs.rank() <= 2 || rs.label() == "A3")) {
      try {
        auto [p, d] = p_matrix(rs, ao.aps.s_std);
        (void)p;
        QCtx ctx{&rs, 2 * d};
        auto word = word_from_ordering(rs, seg.ordering);
        auto table = root_vectors(ctx, word);
        CayleyOperator op(rs, ao.aps.s_std);
        CayleyPairing pairing = [&op](const Coords& x, const Coords& y) {
          return op.pair_roots(x, y);
        };
        auto rels = segment_relations(ctx, table, seg, pairing);
        auto rep = verify_character(ctx, table, seg, rels);
        std::string detail;
        for (const auto& f2 : rep.failures) detail += f2 + "; ";
        add_check("character:" + cname,
                  rep.all_residuals_zero && rep.twist_exponents_zero &&
                      rep.no_combination_support && rep.coefficients_in_A_prime,
                  detail);
      } catch (const Error& e) {
        add_check("character:" + cname, false, e.what());
      }
    }
  }
  out.report["checks"] = checks;
  out.report["failures"] = out.failures;
  return out;
}

Json sl2w_json(int max_m, int max_k, const std::string& epsilon) {
  WhittakerReport rep;
  if (epsilon == "symbolic" || epsilon.empty()) {
    rep = whittaker_and_hecke(max_m, max_k);
  } else {
    // rational p/q
    std::size_t slash = epsilon.find('/');
    try {
      Int num(epsilon.substr(0, slash));
      Int den = slash == std::string::npos ? Int(1) : Int(epsilon.substr(slash + 1));
      if (sgn(den) == 0) throw Error(Errc::usage, "zero denominator");
      Rat eps(num, den);
      eps.canonicalize();
      rep = whittaker_and_hecke_rational(eps, max_m, max_k);
    } catch (const std::invalid_argument&) {
      throw Error(Errc::usage, "bad epsilon: " + epsilon);
    }
  }
  Json j;
  j["schema"] = "weylq/1";
  j["max_m"] = rep.max_m;
  j["max_k"] = rep.max_k;
  j["epsilon"] = epsilon.empty() ? "symbolic" : epsilon;
  Json basis = Json::array();
  for (const auto& mk : rep.whittaker_basis) {
    Json pair = Json::array();
    pair.push_back(mk.first);
    pair.push_back(mk.second);
    basis.push_back(pair);
  }
  j["whittaker_basis"] = basis;
  j["hk0_rank_by_degree"] = rep.hk0_rank_by_degree;
  j["hk1_rank_by_degree"] = rep.hk1_rank_by_degree;
  j["hk1_nonzero"] = rep.hk1_nonzero;
  return j;
}

}  // namespace weylq
