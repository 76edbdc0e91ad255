#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "reflekta/root_system.hpp"
#include "support/oracles.hpp"

namespace fixture {

using namespace reflekta;

/// Library roots as doubled ε rows, for comparison with the oracle model.
inline std::vector<oracle::Row> rows(const std::vector<Vector>& vs) {
  std::vector<oracle::Row> out;
  for (const auto& v : vs) out.push_back(v.fin);
  return out;
}

inline std::set<oracle::Row> row_set(const std::vector<Vector>& vs) {
  auto r = rows(vs);
  return {r.begin(), r.end()};
}

inline Vector from_row(const oracle::Row& r, std::size_t nu = 0) { return Vector(r, std::vector<std::int64_t>(nu, 0)); }

/// Finite root with coefficients given on ε (integers).
inline Vector eps(std::vector<std::int64_t> c, std::size_t nu = 0) {
  for (auto& x : c) x *= 2;
  return Vector(std::move(c), std::vector<std::int64_t>(nu, 0));
}

/// Uniform random subset of the given size, without repetition.
inline std::vector<Vector> sample(const std::vector<Vector>& pool, std::size_t k, std::mt19937& rng) {
  std::vector<std::size_t> idx(pool.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  std::vector<Vector> out;
  for (std::size_t i = 0; i < k && i < idx.size(); ++i) out.push_back(pool[idx[i]]);
  return out;
}

}  // namespace fixture
