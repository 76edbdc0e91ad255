#pragma once

// Dense row elimination over GF(2) and GF(3).

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "reflekta/errors.hpp"

namespace reflekta {

using GfRow = std::vector<std::uint8_t>;

template <unsigned P>
std::size_t gf_rank(std::vector<GfRow> rows) {
  static_assert(P == 2 || P == 3, "only GF(2) and GF(3) are supported");
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (auto& r : rows)
    for (auto& x : r) x %= P;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    if constexpr (P == 3) {
      if (rows[rank][c] == 2)
        for (auto& x : rows[rank]) x = static_cast<std::uint8_t>((2 * x) % 3);
    }
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      const unsigned f = rows[i][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        rows[i][j] = static_cast<std::uint8_t>((rows[i][j] + (P - f) * rows[rank][j]) % P);
    }
    ++rank;
  }
  return rank;
}

inline std::size_t gf_rank(unsigned p, std::vector<GfRow> rows) {
  if (p == 2) return gf_rank<2>(std::move(rows));
  if (p == 3) return gf_rank<3>(std::move(rows));
  throw Error(ErrorKind::BadPrimeStructure, "GF(" + std::to_string(p) + ") is not supported");
}

}  // namespace reflekta
