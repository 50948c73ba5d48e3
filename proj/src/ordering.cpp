#include "ordering.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace weylq {

bool is_normal(const RootSystem& rs, const std::vector<Coords>& seq) {
  if (int(seq.size()) != rs.D()) throw Error(Errc::not_a_permutation, "wrong length");
  std::map<Coords, int> pos;
  for (int k = 0; k < int(seq.size()); ++k) {
    if (rs.pos_index(seq[std::size_t(k)]) < 0)
      throw Error(Errc::not_a_permutation, "not a positive root");
    if (!pos.emplace(seq[std::size_t(k)], k).second)
      throw Error(Errc::not_a_permutation, "duplicate root");
  }
  for (int i = 0; i < int(seq.size()); ++i)
    for (int j = i + 1; j < int(seq.size()); ++j) {
      Coords sum = coords_add(seq[std::size_t(i)], seq[std::size_t(j)]);
      auto it = pos.find(sum);
      if (it == pos.end()) continue;
      if (!(i < it->second && it->second < j)) return false;
    }
  return true;
}

NormalOrdering from_reduced_word(const RootSystem& rs, const std::vector<int>& word) {
  if (int(word.size()) != rs.D())
    throw Error(Errc::wrong_length, "word length must equal the number of positive roots");
  NormalOrdering o;
  WeylElement w = WeylElement::identity(rs);
  for (int i : word) {
    if (i < 0 || i >= rs.rank()) throw Error(Errc::usage, "letter out of range");
    Coords ai(std::size_t(rs.rank()), 0);
    ai[std::size_t(i)] = 1;
    Coords beta = w.act_root(ai);
    if (rs.pos_index(beta) < 0) throw Error(Errc::not_reduced, "word is not reduced");
    o.seq.push_back(beta);
    w = w * WeylElement::simple(rs, i);
  }
  return o;
}

std::vector<int> word_from_ordering(const RootSystem& rs, const NormalOrdering& o) {
  std::vector<int> word;
  WeylElement winv = WeylElement::identity(rs);
  for (const auto& beta : o.seq) {
    Coords a = winv.act_root(beta);
    int letter = -1;
    for (int i = 0; i < rs.rank(); ++i) {
      Coords ai(std::size_t(rs.rank()), 0);
      ai[std::size_t(i)] = 1;
      if (a == ai) letter = i;
    }
    if (letter < 0) throw Error(Errc::internal, "ordering does not come from a reduced word");
    word.push_back(letter);
    winv = WeylElement::simple(rs, letter) * winv;
  }
  return word;
}

std::vector<NormalOrdering> elementary_transpositions(const RootSystem& rs,
                                                      const NormalOrdering& o) {
  std::vector<NormalOrdering> out;
  std::set<std::vector<Coords>> seen;
  int D = int(o.seq.size());
  for (int i = 0; i < D; ++i)
    for (int j = i + 1; j < D; ++j) {
      int len = j - i + 1;
      if (len != 2 && len != 3 && len != 4 && len != 6) continue;
      const Coords& a = o.seq[std::size_t(i)];
      const Coords& b = o.seq[std::size_t(j)];
      Coords diff = coords_add(a, coords_neg(b));
      if (rs.is_root(diff)) continue;
      // the segment must exhaust the rank-2 subsystem spanned by its endpoints
      std::vector<Coords> sub;
      for (const auto& r : rs.positive_roots()) {
        bool member = false;
        for (int p = 0; p <= 3 && !member; ++p)
          for (int q = 0; q <= 3 && !member; ++q) {
            if (p == 0 && q == 0) continue;
            Coords c(a.size(), 0);
            for (std::size_t t = 0; t < c.size(); ++t) c[t] = p * a[t] + q * b[t];
            if (c == r) member = true;
          }
        if (member) sub.push_back(r);
      }
      if (int(sub.size()) != len) continue;
      std::set<Coords> segset(o.seq.begin() + i, o.seq.begin() + j + 1);
      bool match = true;
      for (const auto& r : sub)
        if (!segset.count(r)) match = false;
      if (!match) continue;
      NormalOrdering flipped = o;
      std::reverse(flipped.seq.begin() + i, flipped.seq.begin() + j + 1);
      if (!is_normal(rs, flipped.seq))
        throw Error(Errc::internal, "elementary transposition broke normality");
      if (seen.insert(flipped.seq).second) out.push_back(flipped);
    }
  return out;
}

namespace {

// Backtracking over prefixes of normal orderings.  A root may be placed only
// when every decomposition as a sum of two positive roots has exactly one
// summand already placed; completing under this rule yields a normal ordering.
struct OrderingSearch {
  const std::vector<Coords>* roots = nullptr;
  std::vector<std::vector<std::pair<int, int>>> sum_pairs;
  // allowed(pos, root, placed so far)
  std::function<bool(int, int, const std::vector<int>&)> allowed;
  std::function<bool(const std::vector<int>&)> emit;  // false stops the search
  long budget = 2000000;
  bool budget_exhausted = false;

  void prepare(const std::vector<Coords>& rts) {
    roots = &rts;
    std::map<Coords, int> idx;
    for (int k = 0; k < int(rts.size()); ++k) idx[rts[std::size_t(k)]] = k;
    sum_pairs.assign(rts.size(), {});
    for (int a = 0; a < int(rts.size()); ++a)
      for (int b = a + 1; b < int(rts.size()); ++b) {
        auto it = idx.find(coords_add(rts[std::size_t(a)], rts[std::size_t(b)]));
        if (it != idx.end()) sum_pairs[std::size_t(it->second)].push_back({a, b});
      }
  }

  void run() {
    std::vector<int> placed;
    std::vector<char> used(roots->size(), 0);
    budget_exhausted = false;
    dfs(placed, used);
  }

private:
  bool dfs(std::vector<int>& placed, std::vector<char>& used) {
    if (placed.size() == roots->size()) return !emit(placed);
    int pos = int(placed.size());
    for (int r = 0; r < int(roots->size()); ++r) {
      if (used[std::size_t(r)]) continue;
      bool ok = true;
      for (const auto& [a, b] : sum_pairs[std::size_t(r)]) {
        if (used[std::size_t(a)] == used[std::size_t(b)]) {
          ok = false;
          break;
        }
      }
      if (!ok || !allowed(pos, r, placed)) continue;
      if (--budget < 0) {
        budget_exhausted = true;
        return true;
      }
      used[std::size_t(r)] = 1;
      placed.push_back(r);
      if (dfs(placed, used)) return true;
      placed.pop_back();
      used[std::size_t(r)] = 0;
    }
    return false;
  }
};

}  // namespace

std::vector<NormalOrdering> all_normal_orderings(const RootSystem& rs) {
  if (!(rs.rank() <= 2 || rs.D() <= 8))
    throw Error(Errc::too_large, "normal-ordering enumeration gated to rank <= 2 or D <= 8");
  OrderingSearch search;
  search.prepare(rs.positive_roots());
  search.allowed = [](int, int, const std::vector<int>&) { return true; };
  std::vector<NormalOrdering> out;
  search.emit = [&](const std::vector<int>& placed) {
    NormalOrdering o;
    for (int r : placed) o.seq.push_back(rs.positive_root(r));
    out.push_back(std::move(o));
    return true;
  };
  search.budget = 100000000;
  search.run();
  if (search.budget_exhausted) throw Error(Errc::too_large, "enumeration budget exhausted");
  return out;
}

bool connectivity_check(const RootSystem& rs) {
  auto all = all_normal_orderings(rs);
  if (all.empty()) throw Error(Errc::internal, "no normal ordering found");
  std::set<std::vector<Coords>> seen;
  std::deque<NormalOrdering> queue;
  queue.push_back(all.front());
  seen.insert(all.front().seq);
  while (!queue.empty()) {
    NormalOrdering o = queue.front();
    queue.pop_front();
    for (auto& nb : elementary_transpositions(rs, o))
      if (seen.insert(nb.seq).second) queue.push_back(nb);
  }
  return seen.size() == all.size();
}

bool circular_lt(const RootSystem& rs, const CircularOrdering& c, const Coords& alpha,
                 const Coords& beta) {
  int D = rs.D();
  auto position = [&](const Coords& x) {
    for (int k = 0; k < D; ++k) {
      if (c.base.seq[std::size_t(k)] == x) return k;
      if (coords_neg(c.base.seq[std::size_t(k)]) == x) return k + D;
    }
    throw Error(Errc::usage, "not a root of the system");
  };
  if (alpha == coords_neg(beta)) throw Error(Errc::antipodal_pair, "antipodal pair");
  if (alpha == beta) throw Error(Errc::usage, "equal roots");
  int pa = position(alpha), pb = position(beta);
  int dist = ((pb - pa) % (2 * D) + 2 * D) % (2 * D);
  return dist < D;
}

bool is_natural_combination(const Coords& target, const std::vector<Coords>& gammas) {
  std::function<bool(const Coords&, std::size_t)> go = [&](const Coords& t, std::size_t k) {
    if (coords_is_zero(t)) return true;
    if (k >= gammas.size()) return false;
    Coords cur = t;
    while (true) {
      if (go(cur, k + 1)) return true;
      bool fits = true;
      for (std::size_t i = 0; i < cur.size(); ++i)
        if (cur[i] < gammas[k][i]) fits = false;
      if (!fits) return false;
      for (std::size_t i = 0; i < cur.size(); ++i) cur[i] -= gammas[k][i];
    }
  };
  return go(target, 0);
}

bool no_combination_property(const RootSystem& rs, const std::vector<Coords>& seq, int begin,
                             int end, const std::vector<int>& gamma_positions) {
  (void)rs;
  for (int i = begin; i < end; ++i)
    for (int j = i + 1; j < end; ++j) {
      std::vector<Coords> between;
      for (int gp : gamma_positions)
        if (i < gp && gp < j) between.push_back(seq[std::size_t(gp)]);
      if (between.empty()) continue;
      Coords sum = coords_add(seq[std::size_t(i)], seq[std::size_t(j)]);
      if (is_natural_combination(sum, between)) return false;
    }
  return true;
}

namespace {

// Incremental form of the no-combination property: placing `cand` at the next
// position must not create a pair whose sum is a natural combination of the
// gammas strictly between them.  Sound because every position between two
// placed roots is already placed.
bool nocomb_ok(const std::vector<Coords>& roots, const std::vector<int>& placed, int begin,
               const std::set<Coords>& gset, const Coords& cand) {
  int pos = int(placed.size());
  if (pos < begin) return true;
  std::vector<Coords> between;
  for (int p = pos - 1; p >= begin; --p) {
    const Coords& other = roots[std::size_t(placed[std::size_t(p)])];
    if (!between.empty()) {
      Coords sum = coords_add(other, cand);
      if (is_natural_combination(sum, between)) return false;
    }
    if (gset.count(other)) between.push_back(other);
  }
  return true;
}

}  // namespace

std::vector<std::vector<Coords>> compatible_orderings(const RootSystem& rs,
                                                      const std::vector<Coords>& roots,
                                                      const std::vector<Coords>& gammas,
                                                      std::size_t max_count, long node_budget) {
  int p = int(roots.size()), n = int(gammas.size());
  std::vector<std::vector<Coords>> out;
  if (n == 0) {
    if (p == 0) out.push_back({});
    return out;
  }
  if ((p - n) % 2 != 0) return out;
  int prefix = (p - n) / 2;
  std::set<Coords> gset(gammas.begin(), gammas.end());

  OrderingSearch search;
  search.prepare(roots);
  search.budget = node_budget;
  std::vector<char> is_gamma(roots.size(), 0);
  for (int r = 0; r < p; ++r)
    if (gset.count(roots[std::size_t(r)])) is_gamma[std::size_t(r)] = 1;
  search.allowed = [&](int pos, int r, const std::vector<int>& placed) {
    if (pos < prefix) return !is_gamma[std::size_t(r)];
    if ((pos == prefix || pos == p - 1) && !is_gamma[std::size_t(r)]) return false;
    return nocomb_ok(roots, placed, prefix, gset, roots[std::size_t(r)]);
  };
  search.emit = [&](const std::vector<int>& placed) {
    std::vector<int> gpos;
    for (int k = 0; k < p; ++k)
      if (is_gamma[std::size_t(placed[std::size_t(k)])]) gpos.push_back(k);
    std::vector<Coords> seq;
    for (int r : placed) seq.push_back(roots[std::size_t(r)]);
    if (!no_combination_property(rs, seq, prefix, p, gpos)) return true;
    out.push_back(seq);
    return out.size() < max_count;
  };
  search.run();
  return out;
}

SegmentData build_adapted_ordering(const RootSystem& rs, const WeylElement& s_std,
                                   const InvolutionDecomposition& dec, long node_budget) {
  const int D = rs.D();
  WeylElement w1 = WeylElement::identity(rs), w2 = WeylElement::identity(rs);
  for (const auto& g : dec.gamma1) w1 = w1 * WeylElement::reflection(rs, g);
  for (const auto& g : dec.gamma2) w2 = w2 * WeylElement::reflection(rs, g);
  if (!(w1 * w2 == s_std))
    throw Error(Errc::construction_failed, "decomposition does not multiply to s");

  auto inv1 = w1.inversion_set(), inv2 = w2.inversion_set();
  std::set<Coords> set1(inv1.begin(), inv1.end()), set2(inv2.begin(), inv2.end());
  for (const auto& r : inv1)
    if (set2.count(r))
      throw Error(Errc::construction_failed, "inversion sets of the factors intersect");
  int l1 = int(inv1.size()), l2 = int(inv2.size());
  if (s_std.length() != l1 + l2)
    throw Error(Errc::construction_failed, "decomposition not reduced");

  std::vector<Coords> m1, m2, fixed;
  for (const auto& beta : rs.positive_roots()) {
    if (w1.act_root(beta) == coords_neg(beta)) m1.push_back(beta);
    if (w2.act_root(beta) == coords_neg(beta)) m2.push_back(beta);
    if (s_std.act_root(beta) == beta) fixed.push_back(beta);
  }
  int p1 = int(m1.size()), p2 = int(m2.size());
  int n1 = int(dec.gamma1.size()), n2 = int(dec.gamma2.size());
  if ((l1 - p1) % 2 != 0 || (l2 - p2) % 2 != 0)
    throw Error(Errc::construction_failed, "odd complement in an involution block");
  int t1 = (l1 - p1) / 2, t2 = (l2 - p2) / 2;
  int D0 = int(fixed.size());

  std::set<Coords> m1set(m1.begin(), m1.end()), m2set(m2.begin(), m2.end());
  std::set<Coords> fixedset(fixed.begin(), fixed.end());
  for (const auto& r : fixed)
    if (set1.count(r) || set2.count(r))
      throw Error(Errc::construction_failed, "fixed root inside an inversion set");

  // region ids: 0 free part of block 1, 1 pinned m1, 2 middle, 3 free part of
  // block 2, 4 pinned m2, 5 fixed tail
  std::vector<int> region_of_pos(std::size_t(D), -1);
  {
    int pos = 0;
    for (int k = 0; k < t1; ++k) region_of_pos[std::size_t(pos++)] = 0;
    for (int k = 0; k < p1; ++k) region_of_pos[std::size_t(pos++)] = 1;
    for (int k = 0; k < t1; ++k) region_of_pos[std::size_t(pos++)] = 0;
    int mid = D - l1 - l2 - D0;
    if (mid < 0) throw Error(Errc::construction_failed, "block sizes exceed D");
    for (int k = 0; k < mid; ++k) region_of_pos[std::size_t(pos++)] = 2;
    for (int k = 0; k < t2; ++k) region_of_pos[std::size_t(pos++)] = 3;
    for (int k = 0; k < p2; ++k) region_of_pos[std::size_t(pos++)] = 4;
    for (int k = 0; k < t2; ++k) region_of_pos[std::size_t(pos++)] = 3;
    for (int k = 0; k < D0; ++k) region_of_pos[std::size_t(pos++)] = 5;
  }

  std::vector<int> region_of_root(std::size_t(D), 2);
  for (int r = 0; r < D; ++r) {
    const Coords& root = rs.positive_root(r);
    if (m1set.count(root)) region_of_root[std::size_t(r)] = 1;
    else if (m2set.count(root)) region_of_root[std::size_t(r)] = 4;
    else if (set1.count(root)) region_of_root[std::size_t(r)] = 0;
    else if (set2.count(root)) region_of_root[std::size_t(r)] = 3;
    else if (fixedset.count(root)) region_of_root[std::size_t(r)] = 5;
  }

  auto comp1 = compatible_orderings(rs, m1, dec.gamma1, 4, node_budget);
  auto comp2 = compatible_orderings(rs, m2, dec.gamma2, 4, node_budget);
  if (comp1.empty() || comp2.empty())
    throw Error(Errc::construction_failed, "no compatible ordering for an involution factor");

  OrderingSearch search;
  search.prepare(rs.positive_roots());

  for (const auto& c1 : comp1) {
    for (const auto& c2raw : comp2) {
      std::vector<Coords> c2(c2raw.rbegin(), c2raw.rend());  // inverse-compatible
      std::map<int, Coords> pinned;
      for (int k = 0; k < p1; ++k) pinned[t1 + k] = c1[std::size_t(k)];
      int base2 = 2 * t1 + p1 + (D - l1 - l2 - D0) + t2;
      for (int k = 0; k < p2; ++k) pinned[base2 + k] = c2[std::size_t(k)];

      search.budget = node_budget;
      search.allowed = [&](int pos, int r, const std::vector<int>&) {
        int reg = region_of_pos[std::size_t(pos)];
        if (region_of_root[std::size_t(r)] != reg) return false;
        if (reg == 1 || reg == 4) return pinned.at(pos) == rs.positive_root(r);
        return true;
      };
      std::vector<Coords> result;
      search.emit = [&](const std::vector<int>& placed) {
        for (int r : placed) result.push_back(rs.positive_root(r));
        return false;
      };
      search.run();
      if (result.empty()) continue;

      SegmentData seg;
      seg.ordering.seq = result;
      seg.D = D;
      seg.D0 = D0;
      seg.l_s = l1 + l2;
      seg.l_prime = n1 + n2;
      seg.n = n1;
      seg.m_begin = (l1 - n1) / 2;
      seg.m_end = D - D0 - (l2 - n2) / 2;
      // gamma labels: order of appearance in c1, then in the reversed c2
      std::vector<Coords> gammas;
      std::set<Coords> g1set(dec.gamma1.begin(), dec.gamma1.end());
      std::set<Coords> g2set(dec.gamma2.begin(), dec.gamma2.end());
      for (const auto& r : c1)
        if (g1set.count(r)) gammas.push_back(r);
      for (const auto& r : c2)
        if (g2set.count(r)) gammas.push_back(r);
      seg.gammas = gammas;
      std::map<Coords, int> where;
      for (int k = 0; k < D; ++k) where[result[std::size_t(k)]] = k;
      for (const auto& g : gammas) seg.gamma_pos.push_back(where.at(g));

      if (!is_normal(rs, seg.ordering.seq))
        throw Error(Errc::internal, "constructed ordering is not normal");
      int expected = D - ((seg.l_s - seg.l_prime) / 2 + D0);
      if (seg.segment_size() != expected)
        throw Error(Errc::construction_failed, "segment size violates the dimension count");
      for (std::size_t k = 0; k + 1 < seg.gamma_pos.size(); ++k)
        if (seg.gamma_pos[k] >= seg.gamma_pos[k + 1])
          throw Error(Errc::construction_failed, "gammas out of order");
      if (n1 > 0 && seg.gamma_pos.front() != seg.m_begin)
        throw Error(Errc::construction_failed, "first gamma not at the segment start");
      if (n2 > 0 && seg.gamma_pos.back() != seg.m_end - 1)
        throw Error(Errc::construction_failed, "last gamma not at the segment end");
      for (int gp : seg.gamma_pos)
        if (gp < seg.m_begin || gp >= seg.m_end)
          throw Error(Errc::construction_failed, "gamma outside the segment");
      if (!no_combination_property(rs, seg.ordering.seq, seg.m_begin, seg.m_end, seg.gamma_pos))
        throw Error(Errc::construction_failed, "no-combination property fails");
      return seg;
    }
  }
  throw Error(Errc::construction_failed, "no ordering with the required block structure found");
}

AdaptedOrdering adapted_ordering_for(const RootSystem& rs, const WeylElement& s,
                                     PlaneOrder order) {
  std::string last_reason = "no reduced involution decomposition";
  // Q-irreducible invariant parts of dimension > 2 carry several rotation
  // angles at once, so the regular vector inside them genuinely selects a
  // chamber.  Scan the candidates and keep the chamber minimizing l(s); stop
  // early once the conjugacy-minimal length is reached.
  int min_possible = 0;
  if (rs.rank() <= 4) min_possible = class_representative(rs, s).length();
  std::optional<AdaptedOrdering> best;
  for (long variant = 0; variant < 600; ++variant) {
    AdaptedOrdering cur;
    cur.aps = adapted_positive_system(rs, s, order, variant);
    for (const auto& dec : involution_decompositions(rs, cur.aps.s_std)) {
      if (!decomposition_is_reduced(rs, cur.aps.s_std, dec)) continue;
      try {
        cur.seg = build_adapted_ordering(rs, cur.aps.s_std, dec);
        if (!best || cur.seg.l_s < best->seg.l_s) best = cur;
        break;
      } catch (const Error& e) {
        if (e.code != Errc::construction_failed) throw;
        last_reason = e.what();
      }
    }
    if (!cur.aps.has_coarse) break;
    if (best && rs.rank() <= 4 && best->seg.l_s <= min_possible) break;
  }
  if (best) return *best;
  throw Error(Errc::construction_failed, last_reason);
}

namespace {

// epsilon-coordinate translation for the appendix data
struct EpsBasis {
  int epsdim = 0;
  Mat<Rat> simples;  // rows: simple roots in epsilon coordinates

  Coords to_simple(const Vec<Rat>& eps) const {
    Mat<Rat> m(std::size_t(epsdim), Vec<Rat>(simples.size() + 1));
    for (int r = 0; r < epsdim; ++r) {
      for (std::size_t c = 0; c < simples.size(); ++c)
        m[std::size_t(r)][c] = simples[c][std::size_t(r)];
      m[std::size_t(r)][simples.size()] = eps[std::size_t(r)];
    }
    auto piv = rref(m);
    Coords out(simples.size(), 0);
    for (std::size_t r = 0; r < piv.size(); ++r) {
      if (piv[r] == simples.size()) throw Error(Errc::internal, "eps vector outside root lattice");
      Rat v = m[r][simples.size()];
      if (v.get_den() != 1) throw Error(Errc::internal, "non-integral eps translation");
      out[piv[r]] = int(to_i64(v.get_num()));
    }
    return out;
  }
};

Vec<Rat> eps_unit(int dim, int i, int scale = 1) {
  Vec<Rat> v(std::size_t(dim), Rat(0));
  v[std::size_t(i)] = scale;
  return v;
}

Vec<Rat> eps_pm(int dim, int i, int j, int sj) {
  Vec<Rat> v(std::size_t(dim), Rat(0));
  v[std::size_t(i)] = 1;
  v[std::size_t(j)] = sj;
  return v;
}

Fixture fixture_bc(const RootSystem& rs, char series) {
  int l = rs.rank();
  EpsBasis eb;
  eb.epsdim = l;
  for (int i = 0; i + 1 < l; ++i) eb.simples.push_back(eps_pm(l, i, i + 1, -1));
  eb.simples.push_back(eps_unit(l, l - 1, series == 'B' ? 1 : 2));
  Fixture f;
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) f.ordering.seq.push_back(eb.to_simple(eps_pm(l, i, j, -1)));
  for (int m = 0; m < l; ++m) {
    Coords gc = eb.to_simple(eps_unit(l, m, series == 'B' ? 1 : 2));
    f.ordering.seq.push_back(gc);
    f.dec.gamma1.push_back(gc);
    for (int j = m + 1; j < l; ++j) f.ordering.seq.push_back(eb.to_simple(eps_pm(l, m, j, 1)));
  }
  return f;
}

Fixture fixture_d(const RootSystem& rs) {
  int l = rs.rank();  // even
  EpsBasis eb;
  eb.epsdim = l;
  for (int i = 0; i + 1 < l; ++i) eb.simples.push_back(eps_pm(l, i, i + 1, -1));
  eb.simples.push_back(eps_pm(l, l - 2, l - 1, 1));

  // Minus part: normal ordering of the A_{l-1} subsystem with the gammas
  // eps_{2k-1}-eps_{2k} as a final ascending block.  Built by reversing an
  // ordering whose reduced word starts with those commuting simples.
  RootSystem asys = RootSystem::build("A" + std::to_string(l - 1));
  std::vector<int> word;
  for (int i = l - 2; i >= 0; i -= 2) word.push_back(i);
  WeylElement w = WeylElement::from_word(asys, word);
  while (true) {  // extend greedily to a reduced word of w0
    int pick = -1;
    for (int i = 0; i < asys.rank() && pick < 0; ++i) {
      Coords ai(std::size_t(asys.rank()), 0);
      ai[std::size_t(i)] = 1;
      if (asys.pos_index(w.act_root(ai)) >= 0) pick = i;
    }
    if (pick < 0) break;
    word.push_back(pick);
    w = w * WeylElement::simple(asys, pick);
  }
  NormalOrdering aord = from_reduced_word(asys, word);

  Fixture f;
  for (auto it = aord.seq.rbegin(); it != aord.seq.rend(); ++it) {
    Coords c = *it;  // A_{l-1} coordinates extend by zero on the last node
    c.push_back(0);
    f.ordering.seq.push_back(c);
  }
  // Plus part in colexicographic order: eps1+eps2 first, eps_{l-1}+eps_l last.
  for (int j = 1; j < l; ++j)
    for (int i = 0; i < j; ++i) f.ordering.seq.push_back(eb.to_simple(eps_pm(l, i, j, 1)));
  for (int k = 0; k + 1 < l; k += 2) f.dec.gamma1.push_back(eb.to_simple(eps_pm(l, k, k + 1, -1)));
  for (int k = 0; k + 1 < l; k += 2) f.dec.gamma1.push_back(eb.to_simple(eps_pm(l, k, k + 1, 1)));
  return f;
}

Fixture fixture_f4(const RootSystem& rs) {
  EpsBasis eb;
  eb.epsdim = 4;
  eb.simples.push_back(eps_pm(4, 1, 2, -1));
  eb.simples.push_back(eps_pm(4, 2, 3, -1));
  eb.simples.push_back(eps_unit(4, 3));
  eb.simples.push_back({Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)});

  // B4 subsystem in its own compatible order
  std::vector<Coords> b4order;
  std::vector<Coords> gammas;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) b4order.push_back(eb.to_simple(eps_pm(4, i, j, -1)));
  for (int m = 0; m < 4; ++m) {
    gammas.push_back(eb.to_simple(eps_unit(4, m)));
    b4order.push_back(gammas.back());
    for (int j = m + 1; j < 4; ++j) b4order.push_back(eb.to_simple(eps_pm(4, m, j, 1)));
  }
  std::map<Coords, int> b4pos;
  for (int k = 0; k < int(b4order.size()); ++k) b4pos[b4order[std::size_t(k)]] = k;
  Coords alpha4 = eb.to_simple({Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)});
  std::set<Coords> gset(gammas.begin(), gammas.end());

  const auto& roots = rs.positive_roots();
  int p = int(roots.size()), n = 4;
  int prefix = (p - n) / 2;

  OrderingSearch search;
  search.prepare(roots);
  search.budget = 50000000;
  std::vector<Coords> result;
  search.allowed = [&](int pos, int r, const std::vector<int>& placed) {
    const Coords& root = roots[std::size_t(r)];
    if (pos == 0) return root == alpha4;
    if (root == alpha4) return false;
    bool isg = gset.count(root) > 0;
    if (pos < prefix && isg) return false;
    if (pos == prefix && !isg) return false;
    if (!nocomb_ok(roots, placed, prefix, gset, root)) return false;
    if (isg) {
      int count = 0;
      for (int t : placed)
        if (gset.count(roots[std::size_t(t)])) ++count;
      if (root != gammas[std::size_t(count)]) return false;
    }
    // B4 part in its compatible order
    auto it = b4pos.find(root);
    if (it != b4pos.end()) {
      int want = 0;
      for (int t : placed)
        if (b4pos.count(roots[std::size_t(t)])) ++want;
      if (it->second != want) return false;
    } else {
      // half roots: exactly 4 of 8 before eps_1 (prefix holds alpha4 + 3 more)
      int halves = 0;
      for (int t : placed)
        if (!b4pos.count(roots[std::size_t(t)])) ++halves;
      if (pos < prefix && halves >= 4) return false;
    }
    if (pos == p - 1) return root == gammas.back();
    return true;
  };
  search.emit = [&](const std::vector<int>& placed) {
    std::vector<Coords> seq;
    std::vector<int> gpos;
    for (int k = 0; k < p; ++k) {
      seq.push_back(roots[std::size_t(placed[std::size_t(k)])]);
      if (gset.count(seq.back())) gpos.push_back(k);
    }
    int half_left = 0;
    for (int k = 0; k < gpos[0]; ++k)
      if (!b4pos.count(seq[std::size_t(k)])) ++half_left;
    if (half_left != 4) return true;
    if (!no_combination_property(rs, seq, prefix, p, gpos)) return true;
    result = seq;
    return false;
  };
  search.run();
  if (result.empty()) throw Error(Errc::no_fixture, "F4 fixture search failed");
  Fixture f;
  f.ordering.seq = result;
  f.dec.gamma1 = gammas;
  return f;
}

Fixture fixture_g2(const RootSystem& rs) {
  (void)rs;
  Fixture f;
  f.ordering.seq = {{0, 1}, {1, 1}, {3, 2}, {2, 1}, {3, 1}, {1, 0}};
  f.dec.gamma1 = {{3, 2}, {1, 0}};
  return f;
}

Fixture fixture_e7(const RootSystem& rs) {
  EpsBasis eb;
  eb.epsdim = 8;
  {
    Vec<Rat> a1(8, Rat(-1, 2));
    a1[0] = a1[7] = Rat(1, 2);
    eb.simples.push_back(a1);
  }
  eb.simples.push_back(eps_pm(8, 0, 1, 1));   // eps1+eps2
  eb.simples.push_back(eps_pm(8, 1, 0, -1));  // eps2-eps1
  for (int k = 2; k <= 5; ++k) eb.simples.push_back(eps_pm(8, k, k - 1, -1));

  // gammas: eps8-eps7, then eps_{2k}-eps_{2k-1} ascending, then
  // eps_{2k}+eps_{2k-1} descending
  std::vector<Coords> gammas;
  gammas.push_back(eb.to_simple(eps_pm(8, 7, 6, -1)));
  for (int k = 1; k <= 5; k += 2) gammas.push_back(eb.to_simple(eps_pm(8, k, k - 1, -1)));
  for (int k = 5; k >= 1; k -= 2) gammas.push_back(eb.to_simple(eps_pm(8, k, k - 1, 1)));

  // D6 subsystem skeleton (relative order pinned):
  //  - A5 part: normal ordering of the subsystem on the last five simples with
  //    the three minus gammas as a final ascending block
  std::vector<Coords> d6seq;
  {
    RootSystem a5 = RootSystem::build("A5");
    std::vector<int> word = {4, 2, 0};
    WeylElement w = WeylElement::from_word(a5, word);
    while (true) {
      int pick = -1;
      for (int i = 0; i < 5 && pick < 0; ++i) {
        Coords ai(std::size_t(5), 0);
        ai[std::size_t(i)] = 1;
        if (a5.pos_index(w.act_root(ai)) >= 0) pick = i;
      }
      if (pick < 0) break;
      word.push_back(pick);
      w = w * WeylElement::simple(a5, pick);
    }
    NormalOrdering aord = from_reduced_word(a5, word);
    for (auto it = aord.seq.rbegin(); it != aord.seq.rend(); ++it) {
      Coords c(std::size_t(7), 0);  // A5 simple k sits at the E7 node k+2
      for (int k = 0; k < 5; ++k) c[std::size_t(k + 2)] = (*it)[std::size_t(k)];
      d6seq.push_back(c);
    }
  }
  //  - plus part: eps_i+eps_j by colexicographic order of the flipped indices,
  //    i.e. eps6+eps5 first, eps2+eps1 last
  for (int j = 1; j < 6; ++j)
    for (int i = 0; i < j; ++i) d6seq.push_back(eb.to_simple(eps_pm(8, 5 - j, 5 - i, 1)));

  std::map<Coords, int> d6pos;
  for (int k = 0; k < int(d6seq.size()); ++k) d6pos[d6seq[std::size_t(k)]] = k;

  // half roots (eps8-eps7 + sum (-1)^nu eps_i)/2 with odd minus count
  std::set<Coords> halves;
  for (int mask = 0; mask < 64; ++mask) {
    int minus = 0;
    Vec<Rat> v(8, Rat(0));
    v[7] = Rat(1, 2);
    v[6] = Rat(-1, 2);
    for (int i = 0; i < 6; ++i) {
      bool neg = (mask >> i) & 1;
      if (neg) ++minus;
      v[std::size_t(i)] = neg ? Rat(-1, 2) : Rat(1, 2);
    }
    if (minus % 2 == 1) halves.insert(eb.to_simple(v));
  }

  const auto& roots = rs.positive_roots();
  int p = int(roots.size());
  int prefix = (p - 7) / 2;  // 28
  std::set<Coords> gset(gammas.begin(), gammas.end());

  OrderingSearch search;
  search.prepare(roots);
  search.budget = 200000000;
  std::vector<Coords> result;
  search.allowed = [&](int pos, int r, const std::vector<int>& placed) {
    const Coords& root = roots[std::size_t(r)];
    bool isg = gset.count(root) > 0;
    if (pos < prefix && isg) return false;
    if (pos == prefix && root != gammas[0]) return false;
    if (pos >= p - 15) {
      // rigid plus block
      return root == d6seq[std::size_t(15 + pos - (p - 15))];
    }
    if (d6pos.count(root) && d6pos.at(root) >= 15) return false;  // plus root too early
    if (isg && root != gammas[0]) {
      int count = 0;
      for (int t : placed)
        if (gset.count(roots[std::size_t(t)])) ++count;
      if (root != gammas[std::size_t(count)]) return false;
    }
    // D6 subsequence pin
    auto it = d6pos.find(root);
    if (it != d6pos.end()) {
      int want = 0;
      for (int t : placed)
        if (d6pos.count(roots[std::size_t(t)])) ++want;
      if (it->second != want) return false;
    }
    if (!nocomb_ok(roots, placed, prefix, gset, root)) return false;
    return true;
  };
  search.emit = [&](const std::vector<int>& placed) {
    for (int r : placed) result.push_back(roots[std::size_t(r)]);
    return false;
  };
  search.run();
  if (result.empty()) throw Error(Errc::no_fixture, "E7 fixture search failed");
  Fixture f;
  f.ordering.seq = result;
  f.dec.gamma1 = gammas;
  return f;
}

}  // namespace

Fixture appendix_fixture(const std::string& label) {
  RootSystem rs = RootSystem::build(label);
  Fixture f;
  switch (rs.series()) {
    case 'B':
    case 'C':
      f = fixture_bc(rs, rs.series());
      break;
    case 'D':
      if (rs.rank() % 2 != 0) throw Error(Errc::no_fixture, "D-series fixture requires even rank");
      f = fixture_d(rs);
      break;
    case 'F':
      f = fixture_f4(rs);
      break;
    case 'G':
      f = fixture_g2(rs);
      break;
    case 'E':
      if (rs.rank() != 7) throw Error(Errc::no_fixture, "no appendix fixture for " + label);
      f = fixture_e7(rs);
      break;
    default:
      throw Error(Errc::no_fixture, "no appendix fixture for " + label);
  }
  // full validation: normality, interleave pattern, no-combination property,
  // and the product of the gamma reflections being the longest element
  if (!is_normal(rs, f.ordering.seq)) throw Error(Errc::internal, "fixture ordering not normal");
  int p = rs.D(), n = int(f.dec.gamma1.size());
  std::vector<int> gpos;
  for (int k = 0; k < p; ++k)
    for (const auto& g : f.dec.gamma1)
      if (f.ordering.seq[std::size_t(k)] == g) gpos.push_back(k);
  if (int(gpos.size()) != n || gpos.front() != (p - n) / 2 || gpos.back() != p - 1)
    throw Error(Errc::internal, "fixture interleave pattern broken");
  for (int k = 0; k < n; ++k)
    if (f.ordering.seq[std::size_t(gpos[std::size_t(k)])] != f.dec.gamma1[std::size_t(k)])
      throw Error(Errc::internal, "fixture gamma order broken");
  if (!no_combination_property(rs, f.ordering.seq, (p - n) / 2, p, gpos))
    throw Error(Errc::internal, "fixture no-combination property fails");
  WeylElement w = WeylElement::identity(rs);
  for (const auto& g : f.dec.gamma1) w = w * WeylElement::reflection(rs, g);
  if (!(w == longest_element(rs)))
    throw Error(Errc::internal, "fixture gammas do not multiply to the longest element");
  return f;
}

}  // namespace weylq
