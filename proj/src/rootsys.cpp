#include "rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace weylq {

Coords coords_neg(const Coords& a) {
  Coords r = a;
  for (auto& x : r) x = -x;
  return r;
}

Coords coords_add(const Coords& a, const Coords& b) {
  Coords r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

bool coords_is_zero(const Coords& a) {
  for (int x : a)
    if (x != 0) return false;
  return true;
}

namespace {

std::vector<std::vector<int>> cartan_matrix(char series, int rank) {
  auto chain = [&](int l) {
    std::vector<std::vector<int>> a(l, std::vector<int>(l, 0));
    for (int i = 0; i < l; ++i) a[i][i] = 2;
    for (int i = 0; i + 1 < l; ++i) a[i][i + 1] = a[i + 1][i] = -1;
    return a;
  };
  switch (series) {
    case 'A':
      return chain(rank);
    case 'B': {
      auto a = chain(rank);
      a[rank - 1][rank - 2] = -2;
      return a;
    }
    case 'C': {
      auto a = chain(rank);
      a[rank - 2][rank - 1] = -2;
      return a;
    }
    case 'D': {
      auto a = chain(rank - 1);
      for (auto& row : a) row.resize(rank, 0);
      a.push_back(std::vector<int>(rank, 0));
      a[rank - 1][rank - 1] = 2;
      // detach the last chain node and hang both end nodes off node rank-3
      a[rank - 2][rank - 1] = a[rank - 1][rank - 2] = 0;
      a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1;
      return a;
    }
    case 'E': {
      // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to 4
      std::vector<std::vector<int>> a(rank, std::vector<int>(rank, 0));
      for (int i = 0; i < rank; ++i) a[i][i] = 2;
      auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
      link(0, 2);
      link(2, 3);
      link(3, 4);
      link(4, 5);
      if (rank >= 7) link(5, 6);
      if (rank >= 8) link(6, 7);
      link(1, 3);
      return a;
    }
    case 'F':
      return {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
    case 'G':
      return {{2, -3}, {-1, 2}};
  }
  throw Error(Errc::unsupported_type, "unknown series");
}

std::vector<int> symmetrizers_from_cartan(const std::vector<std::vector<int>>& a) {
  // propagate d_j = d_i * a_ij / a_ji along the Dynkin graph, then clear
  // denominators and divide by the gcd
  int l = int(a.size());
  std::vector<Rat> d(l, Rat(0));
  d[0] = 1;
  std::deque<int> queue = {0};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < l; ++j) {
      if (i == j || a[i][j] == 0 || sgn(d[j]) != 0) continue;
      d[j] = d[i] * a[i][j] / a[j][i];
      queue.push_back(j);
    }
  }
  Int lcm(1);
  for (auto& x : d) {
    if (sgn(x) == 0) throw Error(Errc::unsupported_type, "disconnected Dynkin diagram");
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  }
  Int g(0);
  std::vector<Int> di(l);
  for (int i = 0; i < l; ++i) {
    di[i] = Int(d[i] * Rat(lcm));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), di[i].get_mpz_t());
  }
  std::vector<int> out(l);
  for (int i = 0; i < l; ++i) out[i] = int(to_i64(di[i] / g));
  return out;
}

}  // namespace

RootSystem RootSystem::build(const std::string& label) {
  if (label.size() < 2) throw Error(Errc::unsupported_type, "bad label: " + label);
  char series = label[0];
  int rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stoi(label.substr(1), &used);
    if (used + 1 != label.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw Error(Errc::unsupported_type, "bad label: " + label);
  }
  bool ok = false;
  switch (series) {
    case 'A': ok = rank >= 1 && rank <= 8; break;
    case 'B': ok = rank >= 2 && rank <= 8; break;
    case 'C': ok = rank >= 2 && rank <= 8; break;
    case 'D': ok = rank >= 3 && rank <= 8; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: ok = false;
  }
  if (!ok) throw Error(Errc::unsupported_type, "unsupported type: " + label);

  RootSystem rs;
  rs.label_ = label;
  rs.series_ = series;
  rs.rank_ = rank;
  if (rank == 1) {
    rs.a_ = {{2}};
    rs.d_ = {1};
  } else {
    rs.a_ = cartan_matrix(series, rank);
    rs.d_ = symmetrizers_from_cartan(rs.a_);
  }
  rs.enumerate_roots();

  Mat<Rat> am(std::size_t(rank), Vec<Rat>(std::size_t(rank), Rat(0)));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) am[i][j] = rs.a_[i][j];
  auto inv = mat_inverse(am);
  if (!inv) throw Error(Errc::internal, "singular Cartan matrix");
  rs.ainv_ = *inv;
  rs.hform_.assign(std::size_t(rank), Vec<Rat>(std::size_t(rank), Rat(0)));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) rs.hform_[i][j] = Rat(rs.a_[i][j]) / rs.d_[j];
  return rs;
}

void RootSystem::enumerate_roots() {
  std::deque<Coords> queue;
  for (int i = 0; i < rank_; ++i) {
    Coords c(std::size_t(rank_), 0);
    c[std::size_t(i)] = 1;
    queue.push_back(c);
    index_[c] = 0;  // placeholder; reindexed below
  }
  std::vector<Coords> found(queue.begin(), queue.end());
  while (!queue.empty()) {
    Coords c = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank_; ++i) {
      Coords r = simple_reflect(i, c);
      bool positive = true;
      for (int x : r)
        if (x < 0) positive = false;
      if (!positive || index_.count(r)) continue;
      index_[r] = 0;
      found.push_back(r);
      queue.push_back(r);
    }
  }
  std::sort(found.begin(), found.end(), [&](const Coords& x, const Coords& y) {
    int hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x < y;
  });
  pos_ = std::move(found);
  index_.clear();
  for (int k = 0; k < int(pos_.size()); ++k) index_[pos_[std::size_t(k)]] = k;
}

int RootSystem::height(const Coords& c) const {
  int h = 0;
  for (int x : c) h += x;
  return h;
}

int RootSystem::pos_index(const Coords& c) const {
  auto it = index_.find(c);
  return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_root(const Coords& c) const {
  return pos_index(c) >= 0 || pos_index(coords_neg(c)) >= 0;
}

Coords RootSystem::simple_reflect(int i, const Coords& c) const {
  // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i,  <beta,alpha_i^vee> = sum_j a_ij m_j
  long p = 0;
  for (int j = 0; j < rank_; ++j) p += long(a_[std::size_t(i)][std::size_t(j)]) * c[std::size_t(j)];
  Coords r = c;
  r[std::size_t(i)] -= int(p);
  return r;
}

Coords RootSystem::reflect_by(const Coords& gamma, const Coords& beta) const {
  long p = cartan_pairing(gamma, beta);
  Coords r = beta;
  for (int j = 0; j < rank_; ++j) r[std::size_t(j)] -= int(p) * gamma[std::size_t(j)];
  return r;
}

long RootSystem::form(const Coords& x, const Coords& y) const {
  long s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (x[std::size_t(i)] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      s += long(x[std::size_t(i)]) * y[std::size_t(j)] * d_[std::size_t(i)] *
           a_[std::size_t(i)][std::size_t(j)];
  }
  return s;
}

int RootSystem::d_of_root(const Coords& beta) const {
  long n = form(beta, beta);
  if (n <= 0 || n % 2 != 0) throw Error(Errc::internal, "bad root norm");
  return int(n / 2);
}

long RootSystem::cartan_pairing(const Coords& gamma, const Coords& beta) const {
  long num = 2 * form(gamma, beta), den = form(gamma, gamma);
  if (num % den != 0) throw Error(Errc::internal, "non-integral Cartan pairing");
  return num / den;
}

Rat RootSystem::pairing(const Vec<Rat>& h, const Coords& alpha) const {
  if (int(h.size()) != rank_ || int(alpha.size()) != rank_)
    throw Error(Errc::usage, "pairing: dimension mismatch");
  // alpha_i(H_j) = a_ji
  Rat s(0);
  for (int i = 0; i < rank_; ++i) {
    if (alpha[std::size_t(i)] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      s += Rat(alpha[std::size_t(i)]) * a_[std::size_t(j)][std::size_t(i)] * h[std::size_t(j)];
  }
  return s;
}

Vec<Rat> RootSystem::fundamental_coweight(int i) const {
  Vec<Rat> y(std::size_t(rank_), Rat(0));
  for (int j = 0; j < rank_; ++j) y[std::size_t(j)] = Rat(d_[std::size_t(i)]) * ainv_[std::size_t(i)][std::size_t(j)];
  return y;
}

Rat RootSystem::coweight_form_value(const Vec<Rat>& x, const Vec<Rat>& y) const {
  Rat s(0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      s += x[std::size_t(i)] * y[std::size_t(j)] * hform_[std::size_t(i)][std::size_t(j)];
  return s;
}

}  // namespace weylq
