#pragma once

// Hermite and Smith normal forms over an exact integer type.
//
// Int may be any signed integer type with truncating division
// (std::int64_t, boost::multiprecision::cpp_int, ...).

#include <cstddef>
#include <utility>
#include <vector>

namespace reflekta::nf {

template <class Int>
using Matrix = std::vector<std::vector<Int>>;

template <class Int>
Int abs_value(const Int& a) {
  return a < 0 ? Int(-a) : a;
}

/// floor(a / b) for b != 0.
template <class Int>
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
  return q;
}

template <class Int>
Matrix<Int> identity(std::size_t n) {
  Matrix<Int> m(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

namespace detail {

template <class Int>
void axpy_row(std::vector<Int>& dst, const Int& q, const std::vector<Int>& src) {
  if (q == 0) return;
  for (std::size_t j = 0; j < dst.size(); ++j)
    if (src[j] != 0) dst[j] -= q * src[j];
}

}  // namespace detail

/// Row-style Hermite normal form of the row lattice spanned by `rows`.
///
/// Returns only the nonzero rows. Pivots are positive and strictly increase in
/// column; entries above a pivot are reduced into [0, pivot). The result
/// depends only on the lattice, not on the generating rows.
template <class Int>
Matrix<Int> hermite_normal_form(Matrix<Int> a, std::size_t cols) {
  std::size_t r = 0;
  const std::size_t m = a.size();
  for (std::size_t c = 0; c < cols && r < m; ++c) {
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (a[i][c] != 0 && (best == m || abs_value(a[i][c]) < abs_value(a[best][c]))) best = i;
      if (best == m) break;
      std::swap(a[r], a[best]);
      bool clear = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (a[i][c] == 0) continue;
        detail::axpy_row(a[i], floor_div(a[i][c], a[r][c]), a[r]);
        if (a[i][c] != 0) clear = false;
      }
      if (clear) break;
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (auto& x : a[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) detail::axpy_row(a[i], floor_div(a[i][c], a[r][c]), a[r]);
    ++r;
  }
  a.resize(r);
  return a;
}

/// Pivot column of each HNF row.
template <class Int>
std::vector<std::size_t> pivot_columns(const Matrix<Int>& hnf) {
  std::vector<std::size_t> piv;
  piv.reserve(hnf.size());
  for (const auto& row : hnf) {
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    piv.push_back(c);
  }
  return piv;
}

/// Integer coefficients c with x = Σ c_i hnf_i, or false when x is outside
/// the lattice. Back-substitution along the pivots.
template <class Int>
bool solve_in_hnf(const Matrix<Int>& hnf, std::vector<Int> x, std::vector<Int>* coeffs) {
  const auto piv = pivot_columns(hnf);
  std::vector<Int> c(hnf.size(), Int(0));
  std::size_t next = 0;
  for (std::size_t col = 0; col < x.size(); ++col) {
    if (next < hnf.size() && piv[next] == col) {
      const Int& p = hnf[next][col];
      if (x[col] % p != 0) return false;
      c[next] = x[col] / p;
      detail::axpy_row(x, c[next], hnf[next]);
      ++next;
    } else if (x[col] != 0) {
      return false;
    }
  }
  if (coeffs) *coeffs = std::move(c);
  return true;
}

/// Reduce x modulo the lattice: every pivot coordinate lands in [0, pivot).
/// The result is a canonical coset representative.
template <class Int>
std::vector<Int> reduce_mod_hnf(const Matrix<Int>& hnf, std::vector<Int> x) {
  const auto piv = pivot_columns(hnf);
  for (std::size_t i = 0; i < hnf.size(); ++i)
    detail::axpy_row(x, floor_div(x[piv[i]], hnf[i][piv[i]]), hnf[i]);
  return x;
}

template <class Int>
struct SmithForm {
  /// Nonzero diagonal entries d_0 | d_1 | ... , all positive.
  std::vector<Int> diagonal;
  /// Unimodular column transform V with U·A·V = diag.
  Matrix<Int> col_transform;
};

/// Smith normal form of an m×n matrix, tracking the column transform only.
template <class Int>
SmithForm<Int> smith_normal_form(Matrix<Int> a, std::size_t n) {
  const std::size_t m = a.size();
  Matrix<Int> v = identity<Int>(n);
  auto col_axpy = [&](std::size_t dst, const Int& q, std::size_t src) {
    if (q == 0) return;
    for (std::size_t i = 0; i < m; ++i) a[i][dst] -= q * a[i][src];
    for (std::size_t i = 0; i < n; ++i) v[i][dst] -= q * v[i][src];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < m; ++i) std::swap(a[i][x], a[i][y]);
    for (std::size_t i = 0; i < n; ++i) std::swap(v[i][x], v[i][y]);
  };
  std::vector<Int> diag;
  for (std::size_t t = 0; t < m && t < n; ++t) {
    std::size_t bi = m, bj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a[i][j] != 0 && (bi == m || abs_value(a[i][j]) < abs_value(a[bi][bj]))) bi = i, bj = j;
    if (bi == m) break;
    std::swap(a[t], a[bi]);
    col_swap(t, bj);
    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        detail::axpy_row(a[i], floor_div(a[i][t], a[t][t]), a[t]);
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        col_axpy(j, floor_div(a[t][j], a[t][t]), t);
        if (a[t][j] != 0) {
          col_swap(t, j);
          dirty = true;
        }
      }
      if (dirty) continue;
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = 0; k < n; ++k) a[t][k] += a[i][k];
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (a[t][t] < 0)
      for (auto& x : a[t]) x = -x;
    diag.push_back(a[t][t]);
  }
  return {std::move(diag), std::move(v)};
}

}  // namespace reflekta::nf
