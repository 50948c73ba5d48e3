#pragma once

#include <optional>
#include <vector>

#include "scalar.hpp"

namespace weylq {

inline bool is_zero(const QScalar& x) { return x.is_zero(); }
inline long field_weight(const Rat& x) {
  return long(mpz_sizeinbase(x.get_num().get_mpz_t(), 2) +
              mpz_sizeinbase(x.get_den().get_mpz_t(), 2));
}
inline long field_weight(const QScalar& x) { return x.weight(); }

template <class F>
using Vec = std::vector<F>;
template <class F>
using Mat = std::vector<std::vector<F>>;  // row-major

template <class F>
Mat<F> mat_identity(std::size_t n) {
  Mat<F> m(n, Vec<F>(n, F(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = F(1);
  return m;
}

template <class F>
Mat<F> mat_mul(const Mat<F>& a, const Mat<F>& b) {
  std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  Mat<F> r(n, Vec<F>(p, F(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (is_zero(a[i][t])) continue;
      for (std::size_t j = 0; j < p; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

template <class F>
Vec<F> mat_apply(const Mat<F>& a, const Vec<F>& x) {
  Vec<F> r(a.size(), F(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) r[i] += a[i][j] * x[j];
  return r;
}

// In-place reduced row echelon form, eliminating columns left to right.
// Returns the pivot column of each pivot row.
template <class F>
std::vector<std::size_t> rref(Mat<F>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    long bw = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (is_zero(m[i][c])) continue;
      long w = field_weight(m[i][c]);
      if (best == rows || w < bw) {
        best = i;
        bw = w;
      }
    }
    if (best == rows) continue;
    std::swap(m[r], m[best]);
    F inv = F(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      F f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t mat_rank(Mat<F> m) {
  return rref(m).size();
}

// Kernel basis (as rows) of the linear map given by row-major m acting on
// column vectors.
template <class F>
Mat<F> kernel_basis(Mat<F> m) {
  if (m.empty()) return {};
  std::size_t cols = m[0].size();
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat<F> basis;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    Vec<F> v(cols, F(0));
    v[fc] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::optional<Mat<F>> mat_inverse(const Mat<F>& a) {
  std::size_t n = a.size();
  Mat<F> m(n, Vec<F>(2 * n, F(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = F(1);
  }
  auto piv = rref(m);
  if (piv.size() != n) return std::nullopt;
  Mat<F> r(n, Vec<F>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i][j] = m[i][n + j];
  return r;
}

// Solve sum_j x_j * primary[j] + sum_j y_j * secondary[j] = target where the
// columns are vectors of dimension dim.  Reports consistency and whether the
// primary coordinates are uniquely determined (no kernel vector touches them).
template <class F>
struct PartitionedSolution {
  bool consistent = false;
  bool primary_unique = false;
  Vec<F> primary;
};

template <class F>
PartitionedSolution<F> solve_partitioned(const Mat<F>& primary, const Mat<F>& secondary,
                                         const Vec<F>& target) {
  std::size_t dim = target.size();
  std::size_t np = primary.size(), ns = secondary.size();
  Mat<F> m(dim, Vec<F>(np + ns + 1, F(0)));
  for (std::size_t j = 0; j < np; ++j)
    for (std::size_t i = 0; i < dim; ++i) m[i][j] = primary[j][i];
  for (std::size_t j = 0; j < ns; ++j)
    for (std::size_t i = 0; i < dim; ++i) m[i][np + j] = secondary[j][i];
  for (std::size_t i = 0; i < dim; ++i) m[i][np + ns] = target[i];

  PartitionedSolution<F> out;
  Mat<F> work = m;
  auto piv = rref(work);
  // inconsistent iff some pivot lands in the target column
  for (auto c : piv)
    if (c == np + ns) return out;
  out.consistent = true;
  std::vector<bool> is_pivot(np + ns, false);
  for (auto c : piv) is_pivot[c] = true;
  out.primary_unique = true;
  for (std::size_t j = 0; j < np; ++j)
    if (!is_pivot[j]) out.primary_unique = false;
  // particular solution with free variables set to zero
  out.primary.assign(np, F(0));
  for (std::size_t r = 0; r < piv.size(); ++r)
    if (piv[r] < np) out.primary[piv[r]] = work[r][np + ns];
  return out;
}

}  // namespace weylq
