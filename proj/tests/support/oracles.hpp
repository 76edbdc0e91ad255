#pragma once

// Reference computations that share no code with the library: cofactor
// determinants, gcd of maximal minors, explicit root lists and a naive
// fixpoint closure over std::set.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using Row = std::vector<std::int64_t>;
using Mat = std::vector<Row>;

/// Bareiss fraction-free determinant.
inline Big determinant(const Mat& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  std::vector<std::vector<Big>> m(n, std::vector<Big>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
  Big prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Rank over Q via the largest nonvanishing minor.
inline std::size_t rank(const Mat& g) {
  if (g.empty()) return 0;
  const std::size_t m = g.size(), n = g[0].size();
  for (std::size_t r = std::min(m, n); r > 0; --r) {
    bool found = false;
    for_each_subset(m, r, [&](const std::vector<std::size_t>& rows) {
      if (found) return;
      for_each_subset(n, r, [&](const std::vector<std::size_t>& cols) {
        if (found) return;
        Mat sub(r, Row(r));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) sub[i][j] = g[rows[i]][cols[j]];
        if (determinant(sub) != 0) found = true;
      });
    });
    if (found) return r;
  }
  return 0;
}

/// gcd of all r×r minors, r = rank: the covolume of span(g) in its own span.
inline Big minor_gcd(const Mat& g) {
  const std::size_t r = rank(g);
  if (r == 0) return 1;
  const std::size_t m = g.size(), n = g[0].size();
  Big d = 0;
  for_each_subset(m, r, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(n, r, [&](const std::vector<std::size_t>& cols) {
      Mat sub(r, Row(r));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) sub[i][j] = g[rows[i]][cols[j]];
      d = boost::multiprecision::gcd(d, abs(determinant(sub)));
    });
  });
  return d;
}

/// x ∈ span_Z(g): adding x keeps both the rank and the covolume.
inline bool member(const Mat& g, const Row& x) {
  if (std::all_of(x.begin(), x.end(), [](std::int64_t c) { return c == 0; })) return true;
  if (g.empty()) return false;
  Mat h = g;
  h.push_back(x);
  return rank(h) == rank(g) && minor_gcd(h) == minor_gcd(g);
}

/// span(g) == span(h) as lattices.
inline bool same_lattice(const Mat& g, const Mat& h) {
  for (const auto& x : h)
    if (!member(g, x)) return false;
  for (const auto& x : g)
    if (!member(h, x)) return false;
  return true;
}

/// [span(outer) : span(inner)] for equal-rank lattices.
inline Big index(const Mat& outer, const Mat& inner) { return minor_gcd(inner) / minor_gcd(outer); }

/// Rank over GF(p) by enumerating the span of the rows.
inline std::size_t gf_rank_bruteforce(unsigned p, const Mat& rows) {
  if (rows.empty()) return 0;
  std::set<Row> span{Row(rows[0].size(), 0)};
  for (const auto& r : rows) {
    std::set<Row> next;
    for (const auto& s : span)
      for (unsigned c = 0; c < p; ++c) {
        Row t(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) t[i] = ((s[i] + c * r[i]) % p + p) % p;
        next.insert(t);
      }
    span = std::move(next);
  }
  std::size_t k = 0;
  for (std::size_t sz = span.size(); sz > 1; sz /= p) ++k;
  return k;
}

/// Roots as ε-coefficients doubled (so the F4 half-roots are integral).
struct RootList {
  std::vector<Row> shorts, longs, extra;
  std::vector<Row> all() const {
    std::vector<Row> out = shorts;
    out.insert(out.end(), longs.begin(), longs.end());
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
  }
};

inline Row unit(std::size_t n, std::size_t i, std::int64_t c) {
  Row r(n, 0);
  r[i] = 2 * c;
  return r;
}
inline Row add(Row a, const Row& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

/// Explicit root lists for A (n indices), B, C, D, BC, F4, G2.
inline RootList roots(char type, std::size_t n) {
  RootList out;
  auto pm_pairs = [&](std::vector<Row>& dst, bool same_sign_too) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        dst.push_back(add(unit(n, i, 1), unit(n, j, -1)));
        if (same_sign_too && i < j) {
          dst.push_back(add(unit(n, i, 1), unit(n, j, 1)));
          dst.push_back(add(unit(n, i, -1), unit(n, j, -1)));
        }
      }
  };
  switch (type) {
    case 'A': pm_pairs(out.shorts, false); break;
    case 'D': pm_pairs(out.shorts, true); break;
    case 'B':
      for (std::size_t i = 0; i < n; ++i) {
        out.shorts.push_back(unit(n, i, 1));
        out.shorts.push_back(unit(n, i, -1));
      }
      pm_pairs(out.longs, true);
      break;
    case 'C':
      pm_pairs(out.shorts, true);
      for (std::size_t i = 0; i < n; ++i) {
        out.longs.push_back(unit(n, i, 2));
        out.longs.push_back(unit(n, i, -2));
      }
      break;
    case 'X':  // BC
      for (std::size_t i = 0; i < n; ++i) {
        out.shorts.push_back(unit(n, i, 1));
        out.shorts.push_back(unit(n, i, -1));
        out.extra.push_back(unit(n, i, 2));
        out.extra.push_back(unit(n, i, -2));
      }
      pm_pairs(out.longs, true);
      break;
    case 'F':
      for (std::size_t i = 0; i < 4; ++i) {
        out.shorts.push_back(unit(4, i, 1));
        out.shorts.push_back(unit(4, i, -1));
      }
      for (int s = 0; s < 16; ++s) {
        Row r(4);
        for (int i = 0; i < 4; ++i) r[i] = (s >> i) & 1 ? 1 : -1;
        out.shorts.push_back(r);
      }
      n = 4;
      pm_pairs(out.longs, true);
      break;
    case 'G':
      n = 3;
      pm_pairs(out.shorts, false);
      for (std::size_t i = 0; i < 3; ++i) {
        Row r(3, -2);
        r[i] = 4;
        out.longs.push_back(r);
        for (auto& c : r) c = -c;
        out.longs.push_back(r);
      }
      break;
  }
  return out;
}

inline std::int64_t dot(const Row& a, const Row& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// w_a(b) on doubled coordinates.
inline Row reflect(const Row& a, const Row& b) {
  const std::int64_t c = 2 * dot(b, a) / dot(a, a);
  Row r = b;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= c * a[i];
  return r;
}

/// Naive fixpoint W_Π Π.
inline std::set<Row> closure(const std::vector<Row>& pi) {
  std::set<Row> cur(pi.begin(), pi.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<Row> next = cur;
    for (const auto& a : pi)
      for (const auto& b : cur) next.insert(reflect(a, b));
    if (next.size() != cur.size()) {
      grew = true;
      cur = std::move(next);
    }
  }
  return cur;
}

inline bool is_set(const std::vector<Row>& pi, std::size_t total) { return !pi.empty() && closure(pi).size() == total; }

/// Closure is everything and no single deletion keeps that.
inline bool is_base(std::vector<Row> pi, std::size_t total) {
  std::sort(pi.begin(), pi.end());
  pi.erase(std::unique(pi.begin(), pi.end()), pi.end());
  if (!is_set(pi, total)) return false;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    std::vector<Row> rest = pi;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (is_set(rest, total)) return false;
  }
  return true;
}

}  // namespace oracle
