#pragma once

// Dense linear algebra over a prime field F_l (l < 2^31), internal to the library.

#include <cstdint>
#include <vector>

#include "sgc/numtheory.hpp"

namespace sgc::detail {

using Row = std::vector<std::uint64_t>;
using Mat = std::vector<Row>;

inline std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t l) { return (a + b) % l; }
inline std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t l) { return (a + l - b) % l; }
inline std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t l) { return a * b % l; }

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(Mat& m, std::uint64_t l) {
  std::vector<std::size_t> pivots;
  std::size_t rows = m.size(), r = 0;
  if (rows == 0) return pivots;
  std::size_t cols = m[0].size();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    std::uint64_t inv = invmod(m[r][c], l);
    for (auto& x : m[r]) x = mulm(x, inv, l);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      std::uint64_t f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = subm(m[i][j], mulm(f, m[r][j], l), l);
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

// Basis of the null space {v : m v = 0} for a square or rectangular matrix.
inline Mat nullspace(Mat m, std::uint64_t l) {
  std::size_t cols = m.empty() ? 0 : m[0].size();
  auto piv = rref(m, l);
  std::vector<char> is_piv(cols, 0);
  for (auto c : piv) is_piv[c] = 1;
  Mat basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    Row v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = subm(0, m[i][f], l);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial via Hessenberg reduction; coefficients low to high, monic.
inline Row charpoly(Mat a, std::uint64_t l) {
  std::size_t n = a.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && a[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(a[i], a[m]);
      for (auto& row : a) std::swap(row[i], row[m]);
    }
    std::uint64_t inv = invmod(a[m][m - 1], l);
    for (std::size_t j = m + 1; j < n; ++j) {
      std::uint64_t u = mulm(a[j][m - 1], inv, l);
      if (u == 0) continue;
      for (std::size_t k = 0; k < n; ++k) a[j][k] = subm(a[j][k], mulm(u, a[m][k], l), l);
      for (std::size_t k = 0; k < n; ++k) a[k][m] = addm(a[k][m], mulm(u, a[k][j], l), l);
    }
  }
  // p[k] is the char poly of the leading k x k block.
  std::vector<Row> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    Row next(k + 1, 0);
    // (x - a[k-1][k-1]) * p[k-1]
    for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
      next[d + 1] = addm(next[d + 1], p[k - 1][d], l);
      next[d] = subm(next[d], mulm(a[k - 1][k - 1], p[k - 1][d], l), l);
    }
    std::uint64_t prod = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      prod = mulm(prod, a[i + 1][i], l);
      std::uint64_t coef = mulm(prod, a[i][k - 1], l);
      for (std::size_t d = 0; d < p[i].size(); ++d) next[d] = subm(next[d], mulm(coef, p[i][d], l), l);
    }
    p[k] = std::move(next);
  }
  return p[n];
}

inline std::uint64_t eval_poly(const Row& p, std::uint64_t x, std::uint64_t l) {
  std::uint64_t r = 0;
  for (std::size_t i = p.size(); i-- > 0;) r = addm(mulm(r, x, l), p[i], l);
  return r;
}

}  // namespace sgc::detail
