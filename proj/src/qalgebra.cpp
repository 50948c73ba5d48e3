#include "qalgebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace weylq {

QScalar QCtx::q_pow(const Rat& e) const {
  Rat ve = e * two_d;
  if (ve.get_den() != 1)
    throw Error(Errc::invariant_violation, "q-exponent outside (1/2d)Z: " + Rat(e).get_str());
  return QScalar::v_pow(to_i64(ve.get_num()));
}

QScalar QCtx::q_int(long n, long di) const {
  // [n] = (q^{n di} - q^{-n di}) / (q^{di} - q^{-di}) = sum_{k} q^{di(n-1-2k)}
  QScalar s(0);
  for (long k = 0; k < n; ++k) s += q_pow(Rat(di * (n - 1 - 2 * k)));
  return s;
}

QScalar QCtx::q_fact(long n, long di) const {
  QScalar s(1);
  for (long k = 2; k <= n; ++k) s *= q_int(k, di);
  return s;
}

QScalar QCtx::q_binom(long m, long k, long di) const {
  if (k < 0 || k > m) return QScalar(0);
  return q_fact(m, di) / (q_fact(k, di) * q_fact(m - k, di));
}

bool NCTerm::operator<(const NCTerm& o) const {
  if (fword != o.fword) return fword < o.fword;
  if (eword != o.eword) return eword < o.eword;
  if (kexp.size() != o.kexp.size()) return kexp.size() < o.kexp.size();
  for (std::size_t i = 0; i < kexp.size(); ++i) {
    int c = cmp(kexp[i], o.kexp[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

NCPoly NCPoly::one(const QCtx& ctx) {
  NCPoly p;
  NCTerm t;
  t.kexp.assign(std::size_t(ctx.rs->rank()), Rat(0));
  p.terms[t] = QScalar(1);
  return p;
}

NCPoly NCPoly::E(const QCtx& ctx, int i) {
  NCPoly p = one(ctx);
  NCTerm t = p.terms.begin()->first;
  p.terms.clear();
  t.eword = {i};
  p.terms[t] = QScalar(1);
  return p;
}

NCPoly NCPoly::F(const QCtx& ctx, int i) {
  NCPoly p = one(ctx);
  NCTerm t = p.terms.begin()->first;
  p.terms.clear();
  t.fword = {i};
  p.terms[t] = QScalar(1);
  return p;
}

NCPoly NCPoly::K(const QCtx& ctx, const std::vector<Rat>& exp) {
  (void)ctx;
  NCPoly p;
  NCTerm t;
  t.kexp = exp;
  p.terms[t] = QScalar(1);
  return p;
}

void NCPoly::add_term(const NCTerm& t, const QScalar& c) {
  if (c.is_zero()) return;
  auto it = terms.find(t);
  if (it == terms.end()) {
    terms.emplace(t, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  NCPoly r = *this;
  for (const auto& [t, c] : o.terms) r.add_term(t, c);
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
  NCPoly r = *this;
  for (const auto& [t, c] : o.terms) r.add_term(t, -c);
  return r;
}

NCPoly NCPoly::scaled(const QScalar& c) const {
  NCPoly r;
  if (c.is_zero()) return r;
  for (const auto& [t, x] : terms) r.terms[t] = x * c;
  return r;
}

bool NCPoly::pure_e() const {
  for (const auto& [t, c] : terms) {
    if (!t.fword.empty()) return false;
    for (const auto& k : t.kexp)
      if (sgn(k) != 0) return false;
  }
  return true;
}

Coords NCPoly::e_weight(int rank) const {
  if (terms.empty()) throw Error(Errc::internal, "weight of zero polynomial");
  Coords w(std::size_t(rank), 0);
  bool first = true;
  for (const auto& [t, c] : terms) {
    Coords cur(std::size_t(rank), 0);
    for (int i : t.eword) ++cur[std::size_t(i)];
    if (first) {
      w = cur;
      first = false;
    } else if (cur != w) {
      throw Error(Errc::internal, "inhomogeneous polynomial");
    }
  }
  return w;
}

std::string NCPoly::str(const QCtx& ctx) const {
  (void)ctx;
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str("v") << ")";
    for (int i : t.fword) os << "*F" << (i + 1);
    for (std::size_t i = 0; i < t.kexp.size(); ++i)
      if (sgn(t.kexp[i]) != 0) os << "*K" << (i + 1) << "^(" << t.kexp[i].get_str() << ")";
    for (int i : t.eword) os << "*E" << (i + 1);
  }
  return os.str();
}

namespace {

struct Atom {
  int type;  // 0 = E, 1 = F, 2 = K
  int idx = 0;
  std::vector<Rat> k;
};

bool kexp_zero(const std::vector<Rat>& k) {
  for (const auto& x : k)
    if (sgn(x) != 0) return false;
  return true;
}

// q-exponent sum_j k_j d_j a_{ji}
Rat k_exchange_exponent(const QCtx& ctx, const std::vector<Rat>& k, int i) {
  Rat e(0);
  const auto& a = ctx.rs->cartan();
  const auto& d = ctx.rs->symmetrizers();
  for (int j = 0; j < ctx.rs->rank(); ++j)
    e += k[std::size_t(j)] * d[std::size_t(j)] * a[std::size_t(j)][std::size_t(i)];
  return e;
}

void normalize_atoms(const QCtx& ctx, std::vector<Atom> atoms, QScalar coeff, NCPoly& out) {
  if (coeff.is_zero()) return;
  // scan for the first violation of the F* K E* shape
  for (std::size_t t = 0; t + 1 < atoms.size(); ++t) {
    const Atom& x = atoms[t];
    const Atom& y = atoms[t + 1];
    if (x.type == 2 && y.type == 2) {
      std::vector<Atom> next = atoms;
      for (int j = 0; j < ctx.rs->rank(); ++j) next[t].k[std::size_t(j)] += y.k[std::size_t(j)];
      next.erase(next.begin() + long(t) + 1);
      normalize_atoms(ctx, std::move(next), coeff, out);
      return;
    }
    if (x.type == 0 && y.type == 2) {  // E_i K -> q^{-e} K E_i
      QScalar s = ctx.q_pow(-k_exchange_exponent(ctx, y.k, x.idx));
      std::vector<Atom> next = atoms;
      std::swap(next[t], next[t + 1]);
      normalize_atoms(ctx, std::move(next), coeff * s, out);
      return;
    }
    if (x.type == 2 && y.type == 1) {  // K F_i -> q^{-e} F_i K
      QScalar s = ctx.q_pow(-k_exchange_exponent(ctx, x.k, y.idx));
      std::vector<Atom> next = atoms;
      std::swap(next[t], next[t + 1]);
      normalize_atoms(ctx, std::move(next), coeff * s, out);
      return;
    }
    if (x.type == 0 && y.type == 1) {  // E_i F_j = F_j E_i + delta (K_i - K_i^{-1})/(q_i-q_i^{-1})
      std::vector<Atom> swapped = atoms;
      std::swap(swapped[t], swapped[t + 1]);
      normalize_atoms(ctx, std::move(swapped), coeff, out);
      if (x.idx == y.idx) {
        long di = ctx.rs->symmetrizers()[std::size_t(x.idx)];
        QScalar denom = ctx.q_pow(Rat(di)) - ctx.q_pow(Rat(-di));
        for (int sign : {1, -1}) {
          std::vector<Atom> next(atoms.begin(), atoms.begin() + long(t));
          Atom K;
          K.type = 2;
          K.k.assign(std::size_t(ctx.rs->rank()), Rat(0));
          K.k[std::size_t(x.idx)] = sign;
          next.push_back(K);
          next.insert(next.end(), atoms.begin() + long(t) + 2, atoms.end());
          normalize_atoms(ctx, std::move(next), coeff * QScalar(sign) / denom, out);
        }
      }
      return;
    }
  }
  // sorted: F* K* E* with K's merged on sight; collect
  NCTerm term;
  term.kexp.assign(std::size_t(ctx.rs->rank()), Rat(0));
  for (const auto& a : atoms) {
    if (a.type == 1) term.fword.push_back(a.idx);
    else if (a.type == 0) term.eword.push_back(a.idx);
    else
      for (int j = 0; j < ctx.rs->rank(); ++j) term.kexp[std::size_t(j)] += a.k[std::size_t(j)];
  }
  out.add_term(term, coeff);
}

std::vector<Atom> atoms_of(const NCTerm& t) {
  std::vector<Atom> atoms;
  for (int i : t.fword) atoms.push_back(Atom{1, i, {}});
  if (!kexp_zero(t.kexp)) atoms.push_back(Atom{2, 0, t.kexp});
  for (int i : t.eword) atoms.push_back(Atom{0, i, {}});
  return atoms;
}

}  // namespace

NCPoly nc_mul(const QCtx& ctx, const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [ta, ca] : a.terms)
    for (const auto& [tb, cb] : b.terms) {
      std::vector<Atom> atoms = atoms_of(ta);
      auto rhs = atoms_of(tb);
      atoms.insert(atoms.end(), rhs.begin(), rhs.end());
      normalize_atoms(ctx, std::move(atoms), ca * cb, out);
    }
  return out;
}

NCPoly nc_normal_form(const QCtx& ctx, const NCPoly& a) {
  NCPoly out;
  for (const auto& [t, c] : a.terms) normalize_atoms(ctx, atoms_of(t), c, out);
  return out;
}

NCPoly braid_T(const QCtx& ctx, int i, const NCPoly& x) {
  const auto& a = ctx.rs->cartan();
  int l = ctx.rs->rank();
  long di = ctx.rs->symmetrizers()[std::size_t(i)];

  auto image_E = [&](int j) {
    if (j == i) {
      // T_i(E_i) = -F_i K_i
      NCPoly p;
      NCTerm t;
      t.fword = {i};
      t.kexp.assign(std::size_t(l), Rat(0));
      t.kexp[std::size_t(i)] = 1;
      p.terms[t] = QScalar(-1);
      return p;
    }
    long m = -a[std::size_t(i)][std::size_t(j)];
    NCPoly sum;
    for (long r = 0; r <= m; ++r) {
      // (-1)^{r+m} q_i^{-r} E_i^{(m-r)} E_j E_i^{(r)}
      NCTerm t;
      t.kexp.assign(std::size_t(l), Rat(0));
      for (long k = 0; k < m - r; ++k) t.eword.push_back(i);
      t.eword.push_back(j);
      for (long k = 0; k < r; ++k) t.eword.push_back(i);
      QScalar c = ctx.q_pow(Rat(-r * di)) / (ctx.q_fact(m - r, di) * ctx.q_fact(r, di));
      if ((r + m) % 2 != 0) c = -c;
      sum.add_term(t, c);
    }
    return sum;
  };
  auto image_F = [&](int j) {
    if (j == i) {
      // T_i(F_i) = -K_i^{-1} E_i
      NCPoly p;
      NCTerm t;
      t.eword = {i};
      t.kexp.assign(std::size_t(l), Rat(0));
      t.kexp[std::size_t(i)] = -1;
      p.terms[t] = QScalar(-1);
      return p;
    }
    long m = -a[std::size_t(i)][std::size_t(j)];
    NCPoly sum;
    for (long r = 0; r <= m; ++r) {
      // (-1)^{r+m} q_i^{r} F_i^{(r)} F_j F_i^{(m-r)}
      NCTerm t;
      t.kexp.assign(std::size_t(l), Rat(0));
      for (long k = 0; k < r; ++k) t.fword.push_back(i);
      t.fword.push_back(j);
      for (long k = 0; k < m - r; ++k) t.fword.push_back(i);
      QScalar c = ctx.q_pow(Rat(r * di)) / (ctx.q_fact(m - r, di) * ctx.q_fact(r, di));
      if ((r + m) % 2 != 0) c = -c;
      sum.add_term(t, c);
    }
    return sum;
  };

  NCPoly out;
  for (const auto& [t, c] : x.terms) {
    NCPoly acc = NCPoly::one(ctx).scaled(c);
    for (int j : t.fword) acc = nc_mul(ctx, acc, image_F(j));
    if (!kexp_zero(t.kexp)) {
      // K exponents transform through T_i(H_j) = H_j - a_ji H_i
      std::vector<Rat> k = t.kexp;
      Rat drop(0);
      for (int j = 0; j < l; ++j) drop += Rat(a[std::size_t(i)][std::size_t(j)]) * t.kexp[std::size_t(j)];
      k[std::size_t(i)] -= drop;
      acc = nc_mul(ctx, acc, NCPoly::K(ctx, k));
    }
    for (int j : t.eword) acc = nc_mul(ctx, acc, image_E(j));
    out = out + acc;
  }
  return out;
}

int RootVectorTable::position_of(const Coords& beta) const {
  for (int k = 0; k < int(ordering.seq.size()); ++k)
    if (ordering.seq[std::size_t(k)] == beta) return k;
  return -1;
}

RootVectorTable root_vectors(const QCtx& ctx, const std::vector<int>& word) {
  RootVectorTable table;
  table.ordering = from_reduced_word(*ctx.rs, word);  // validates the word
  table.word = word;
  for (int k = 0; k < int(word.size()); ++k) {
    NCPoly x = NCPoly::E(ctx, word[std::size_t(k)]);
    for (int j = k - 1; j >= 0; --j) x = braid_T(ctx, word[std::size_t(j)], x);
    if (!x.pure_e())
      throw Error(Errc::impure_root_vector, "root vector has F or K letters");
    if (x.e_weight(ctx.rs->rank()) != table.ordering.seq[std::size_t(k)])
      throw Error(Errc::impure_root_vector, "root vector weight mismatch");
    table.vectors.push_back(std::move(x));
  }
  return table;
}

std::vector<std::vector<int>> weight_words(int rank, const Coords& weight) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  Coords rem = weight;
  std::function<void()> go = [&]() {
    if (coords_is_zero(rem)) {
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < rank; ++i) {
      if (rem[std::size_t(i)] <= 0) continue;
      --rem[std::size_t(i)];
      cur.push_back(i);
      go();
      cur.pop_back();
      ++rem[std::size_t(i)];
    }
  };
  go();
  return out;
}

NCPoly serre_relator(const QCtx& ctx, int i, int j) {
  long m = 1 - ctx.rs->cartan()[std::size_t(i)][std::size_t(j)];
  long di = ctx.rs->symmetrizers()[std::size_t(i)];
  NCPoly sum;
  for (long r = 0; r <= m; ++r) {
    NCTerm t;
    t.kexp.assign(std::size_t(ctx.rs->rank()), Rat(0));
    for (long k = 0; k < m - r; ++k) t.eword.push_back(i);
    t.eword.push_back(j);
    for (long k = 0; k < r; ++k) t.eword.push_back(i);
    QScalar c = ctx.q_binom(m, r, di);
    if (r % 2 != 0) c = -c;
    sum.add_term(t, c);
  }
  return sum;
}

namespace {

Vec<QScalar> vectorize(const NCPoly& p, const std::map<std::vector<int>, int>& index) {
  Vec<QScalar> v(index.size(), QScalar(0));
  for (const auto& [t, c] : p.terms) {
    auto it = index.find(t.eword);
    if (it == index.end()) throw Error(Errc::internal, "word outside the weight component");
    v[std::size_t(it->second)] += c;
  }
  return v;
}

// free product of pure-E polynomials (no rewriting applies)
NCPoly free_mul(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [ta, ca] : a.terms)
    for (const auto& [tb, cb] : b.terms) {
      NCTerm t = ta;
      t.eword.insert(t.eword.end(), tb.eword.begin(), tb.eword.end());
      out.add_term(t, ca * cb);
    }
  return out;
}

NCPoly free_pow(const QCtx& ctx, const NCPoly& a, int k) {
  NCPoly out = NCPoly::one(ctx);
  for (int i = 0; i < k; ++i) out = free_mul(out, a);
  return out;
}

Coords coords_sub(const Coords& a, const Coords& b) {
  Coords r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

bool coords_nonneg(const Coords& a) {
  for (int x : a)
    if (x < 0) return false;
  return true;
}

}  // namespace

Mat<QScalar> serre_ideal_component(const QCtx& ctx, const Coords& weight, int height_bound) {
  int height = 0;
  for (int x : weight) height += x;
  if (height > height_bound)
    throw Error(Errc::height_bound, "weight height exceeds the configured bound");
  int l = ctx.rs->rank();
  auto words = weight_words(l, weight);
  std::map<std::vector<int>, int> index;
  for (int k = 0; k < int(words.size()); ++k) index[words[std::size_t(k)]] = k;

  Mat<QScalar> rows;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      if (i == j) continue;
      NCPoly rel = serre_relator(ctx, i, j);
      Coords mu(std::size_t(l), 0);
      mu[std::size_t(i)] = 1 - ctx.rs->cartan()[std::size_t(i)][std::size_t(j)];
      mu[std::size_t(j)] += 1;
      Coords rest = coords_sub(weight, mu);
      if (!coords_nonneg(rest)) continue;
      // all splits rest = wt(u) + wt(v)
      std::vector<Coords> uweights;
      std::function<void(std::size_t, Coords)> split = [&](std::size_t pos, Coords acc) {
        if (pos == acc.size()) {
          uweights.push_back(acc);
          return;
        }
        for (int v = 0; v <= rest[pos]; ++v) {
          acc[pos] = v;
          split(pos + 1, acc);
        }
      };
      split(0, Coords(std::size_t(l), 0));
      for (const auto& uw : uweights) {
        Coords vw = coords_sub(rest, uw);
        for (const auto& u : weight_words(l, uw))
          for (const auto& v : weight_words(l, vw)) {
            NCPoly up, vp;
            NCTerm ut, vt;
            ut.kexp.assign(std::size_t(l), Rat(0));
            vt.kexp = ut.kexp;
            ut.eword = u;
            vt.eword = v;
            up.terms[ut] = QScalar(1);
            vp.terms[vt] = QScalar(1);
            rows.push_back(vectorize(free_mul(free_mul(up, rel), vp), index));
          }
      }
    }
  if (rows.empty()) return rows;
  auto piv = rref(rows);
  rows.resize(piv.size());
  return rows;
}

namespace {

// enumerate exponent vectors k over `positions` with sum k_p * root_p = weight
void pbw_exponents(const RootVectorTable& table, const std::vector<int>& positions,
                   const Coords& weight, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(positions.size(), 0);
  std::function<void(std::size_t, Coords)> go = [&](std::size_t k, Coords rem) {
    if (k == positions.size()) {
      if (coords_is_zero(rem)) out.push_back(cur);
      return;
    }
    const Coords& root = table.ordering.seq[std::size_t(positions[k])];
    int e = 0;
    Coords r = rem;
    while (true) {
      cur[k] = e;
      go(k + 1, r);
      r = coords_sub(r, root);
      ++e;
      if (!coords_nonneg(r)) break;
    }
    cur[k] = 0;
  };
  go(0, weight);
}

// divided-power PBW monomial as a pure-E polynomial
NCPoly pbw_monomial(const QCtx& ctx, const RootVectorTable& table,
                    const std::vector<int>& positions, const std::vector<int>& exps) {
  NCPoly acc = NCPoly::one(ctx);
  QScalar scale(1);
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (exps[k] == 0) continue;
    const NCPoly& e = table.vectors[std::size_t(positions[k])];
    acc = free_mul(acc, free_pow(ctx, e, exps[k]));
    long droot = ctx.rs->d_of_root(table.ordering.seq[std::size_t(positions[k])]);
    scale *= ctx.q_fact(exps[k], droot);
  }
  return acc.scaled(QScalar(1) / scale);
}

}  // namespace

PBWExpansion pbw_expand(const QCtx& ctx, const RootVectorTable& table,
                        const std::vector<int>& positions, const NCPoly& x) {
  PBWExpansion out;
  if (x.is_zero()) {
    out.consistent = out.unique = true;
    return out;
  }
  Coords weight = x.e_weight(ctx.rs->rank());
  auto words = weight_words(ctx.rs->rank(), weight);
  std::map<std::vector<int>, int> index;
  for (int k = 0; k < int(words.size()); ++k) index[words[std::size_t(k)]] = k;

  std::vector<std::vector<int>> exps;
  pbw_exponents(table, positions, weight, exps);
  Mat<QScalar> primary;
  for (const auto& e : exps)
    primary.push_back(vectorize(pbw_monomial(ctx, table, positions, e), index));
  Mat<QScalar> secondary = serre_ideal_component(ctx, weight);
  Vec<QScalar> target = vectorize(x, index);

  auto sol = solve_partitioned(primary, secondary, target);
  out.consistent = sol.consistent;
  out.unique = sol.primary_unique;
  if (sol.consistent)
    for (std::size_t k = 0; k < exps.size(); ++k)
      if (!sol.primary[k].is_zero()) out.monomials.push_back({exps[k], sol.primary[k]});
  return out;
}

LSRelation ls_relation(const QCtx& ctx, const RootVectorTable& table, int pos_alpha,
                       int pos_beta) {
  if (!(pos_alpha < pos_beta)) throw Error(Errc::usage, "need alpha < beta in the ordering");
  const Coords& alpha = table.ordering.seq[std::size_t(pos_alpha)];
  const Coords& beta = table.ordering.seq[std::size_t(pos_beta)];
  LSRelation rel;
  rel.alpha = alpha;
  rel.beta = beta;
  rel.pos_alpha = pos_alpha;
  rel.pos_beta = pos_beta;
  rel.q_exponent = Rat(ctx.rs->form(alpha, beta));
  for (int p = pos_alpha + 1; p < pos_beta; ++p) rel.between_positions.push_back(p);

  const NCPoly& ea = table.vectors[std::size_t(pos_alpha)];
  const NCPoly& eb = table.vectors[std::size_t(pos_beta)];
  NCPoly lhs = free_mul(ea, eb) - free_mul(eb, ea).scaled(ctx.q_pow(rel.q_exponent));
  PBWExpansion exp = pbw_expand(ctx, table, rel.between_positions, lhs);
  if (!exp.consistent)
    throw Error(Errc::inconsistent_system, "LS relation has no PBW expansion");
  if (!exp.unique)
    throw Error(Errc::non_unique_solution, "PBW monomials dependent modulo the Serre ideal");
  rel.rhs = std::move(exp.monomials);
  return rel;
}

LSRelation twist_relation(const QCtx& ctx, const RootVectorTable& table, const LSRelation& rel,
                          const CayleyPairing& cayley) {
  LSRelation out = rel;
  Rat cab = cayley(rel.alpha, rel.beta);
  out.q_exponent = rel.q_exponent + cab;
  out.rhs.clear();
  for (const auto& [exps, coeff] : rel.rhs) {
    Rat expo = cab;
    for (std::size_t a = 0; a < exps.size(); ++a)
      for (std::size_t b = a + 1; b < exps.size(); ++b) {
        if (exps[a] == 0 || exps[b] == 0) continue;
        expo -= Rat(exps[a]) * Rat(exps[b]) *
                cayley(table.ordering.seq[std::size_t(rel.between_positions[a])],
                       table.ordering.seq[std::size_t(rel.between_positions[b])]);
      }
    out.rhs.push_back({exps, coeff * ctx.q_pow(expo / 2)});
  }
  return out;
}

std::vector<LSRelation> segment_relations(const QCtx& ctx, const RootVectorTable& table,
                                          const SegmentData& seg, const CayleyPairing& cayley) {
  std::vector<LSRelation> rels;
  for (int i = seg.m_begin; i < seg.m_end; ++i)
    for (int j = i + 1; j < seg.m_end; ++j)
      rels.push_back(twist_relation(ctx, table, ls_relation(ctx, table, i, j), cayley));
  return rels;
}

bool scalar_in_A_prime(const QCtx& ctx, const QScalar& x, long rmax) {
  if (x.is_zero()) return true;
  Laurent den = x.den();
  for (int i = 0; i < ctx.rs->rank(); ++i) {
    long di = ctx.rs->symmetrizers()[std::size_t(i)];
    for (long k = 2; k <= rmax; ++k) {
      QScalar qi = ctx.q_int(k, di);
      const Laurent& f = qi.num();
      while (true) {
        Laurent g = Laurent::gcd(den, f);
        if (g.is_zero() || g.hi() == 0) break;
        Laurent q;
        if (!Laurent::try_divide_exact(den, g, q)) break;
        den = q;
      }
    }
  }
  return den.is_zero() || den.hi() == den.lo();
}

void CPoly::add(const std::vector<int>& mono, const QScalar& c) {
  if (c.is_zero()) return;
  auto it = terms.find(mono);
  if (it == terms.end()) {
    terms.emplace(mono, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

CPoly CPoly::operator-(const CPoly& o) const {
  CPoly r = *this;
  for (const auto& [m, c] : o.terms) r.add(m, -c);
  return r;
}

std::string CPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str("v") << ")";
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) os << "*c" << (i + 1) << "^" << m[i];
  }
  return os.str();
}

CharacterReport verify_character(const QCtx& ctx, const RootVectorTable& table,
                                 const SegmentData& seg, const std::vector<LSRelation>& rels) {
  CharacterReport report;
  int lp = seg.l_prime;
  // position -> gamma index or -1
  std::map<int, int> gamma_at;
  for (int g = 0; g < lp; ++g) gamma_at[seg.gamma_pos[std::size_t(g)]] = g;

  std::set<std::pair<int, int>> covered;
  for (const auto& rel : rels) covered.insert({rel.pos_alpha, rel.pos_beta});
  for (int i = seg.m_begin; i < seg.m_end; ++i)
    for (int j = i + 1; j < seg.m_end; ++j)
      if (!covered.count({i, j}))
        throw Error(Errc::incomplete_relations, "missing relation for a segment pair");

  for (const auto& rel : rels) {
    auto ia = gamma_at.find(rel.pos_alpha);
    auto ib = gamma_at.find(rel.pos_beta);
    CPoly lhs;
    if (ia != gamma_at.end() && ib != gamma_at.end()) {
      // c_i c_j (1 - q^{exponent}); the twist exponent must vanish
      QScalar factor = QScalar(1) - ctx.q_pow(rel.q_exponent);
      std::vector<int> mono(std::size_t(lp), 0);
      ++mono[std::size_t(ia->second)];
      ++mono[std::size_t(ib->second)];
      lhs.add(mono, factor);
      if (sgn(rel.q_exponent) != 0) {
        report.twist_exponents_zero = false;
        report.failures.push_back("nonzero twist exponent for a gamma pair");
      }
    }
    CPoly rhs;
    for (const auto& [exps, coeff] : rel.rhs) {
      bool pure_gamma = true;
      std::vector<int> mono(std::size_t(lp), 0);
      QScalar c = coeff;
      for (std::size_t k = 0; k < exps.size(); ++k) {
        if (exps[k] == 0) continue;
        int pos = rel.between_positions[k];
        auto ig = gamma_at.find(pos);
        if (ig == gamma_at.end()) {
          pure_gamma = false;
          break;
        }
        mono[std::size_t(ig->second)] += exps[k];
        long droot = ctx.rs->d_of_root(table.ordering.seq[std::size_t(pos)]);
        c = c / ctx.q_fact(exps[k], droot);
      }
      if (pure_gamma) rhs.add(mono, c);
      if (!scalar_in_A_prime(ctx, coeff)) {
        report.coefficients_in_A_prime = false;
        report.failures.push_back("coefficient outside A'");
      }
    }
    CPoly residual = lhs - rhs;
    if (!residual.is_zero()) {
      report.all_residuals_zero = false;
      std::ostringstream os;
      os << "nonzero residual at pair (" << rel.pos_alpha << "," << rel.pos_beta
         << "): " << residual.str();
      report.failures.push_back(os.str());
    }
  }
  report.no_combination_support = check_no_combination_support(seg, rels);
  if (!report.no_combination_support)
    report.failures.push_back("rhs monomial supported on gammas only");
  return report;
}

bool check_no_combination_support(const SegmentData& seg, const std::vector<LSRelation>& rels) {
  std::set<int> gamma_positions(seg.gamma_pos.begin(), seg.gamma_pos.end());
  for (const auto& rel : rels)
    for (const auto& [exps, coeff] : rel.rhs) {
      bool pure_gamma = true, nontrivial = false;
      for (std::size_t k = 0; k < exps.size(); ++k) {
        if (exps[k] == 0) continue;
        nontrivial = true;
        if (!gamma_positions.count(rel.between_positions[k])) pure_gamma = false;
      }
      if (nontrivial && pure_gamma) return false;
    }
  return true;
}

bool pbw_independent(const QCtx& ctx, const RootVectorTable& table, const Coords& weight) {
  auto words = weight_words(ctx.rs->rank(), weight);
  std::map<std::vector<int>, int> index;
  for (int k = 0; k < int(words.size()); ++k) index[words[std::size_t(k)]] = k;
  std::vector<int> all_positions;
  for (int p = 0; p < int(table.ordering.seq.size()); ++p) all_positions.push_back(p);
  std::vector<std::vector<int>> exps;
  pbw_exponents(table, all_positions, weight, exps);
  Mat<QScalar> rows;
  for (const auto& e : exps)
    rows.push_back(vectorize(pbw_monomial(ctx, table, all_positions, e), index));
  Mat<QScalar> serre = serre_ideal_component(ctx, weight);
  std::size_t serre_rank = serre.size();  // already echelonized
  Mat<QScalar> combined = rows;
  for (const auto& r : serre) combined.push_back(r);
  // PBW monomials complement the ideal inside the full weight component
  return mat_rank(combined) == rows.size() + serre_rank &&
         rows.size() + serre_rank == words.size();
}

}  // namespace weylq
