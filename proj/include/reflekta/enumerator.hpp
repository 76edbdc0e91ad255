#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "reflekta/affine_system.hpp"
#include "reflekta/coset_set.hpp"
#include "reflekta/deciders.hpp"
#include "reflekta/errors.hpp"
#include "reflekta/gf.hpp"
#include "reflekta/root_system.hpp"
#include "reflekta/weyl.hpp"

namespace reflekta {

struct BaseCatalog {
  std::string system;
  std::vector<std::vector<Vector>> bases;
  std::vector<std::size_t> orbit_partition;
  std::size_t orbit_count = 0;
  std::size_t generator_bound = 0;
  /// False for affine catalogs, which only cover a window of R×.
  bool complete = true;
  /// True when the orbit partition may be finer than the true one.
  bool orbits_are_refinement = false;
};

struct EnumerationLimits {
  std::size_t max_size = 0;            // 0: no size filter beyond the characterization
  std::uint64_t max_candidates = 5'000'000;
  std::int64_t window_radius = 1;      // affine search window
};

namespace detail {

/// Visits every k-subset of [0, n) in lexicographic order.
inline void for_each_combination(std::size_t n, std::size_t k,
                                 const std::function<void(const std::vector<std::size_t>&)>& f) {
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

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (1ull << 52)) return r;
  }
  return r;
}

/// Image of each root in outer/inner modulo p.
inline std::vector<GfRow> residues(const std::vector<Vector>& roots, const Lattice& outer, const Lattice& inner,
                                   unsigned p) {
  const auto q = smith_quotient(outer, inner);
  std::vector<GfRow> out;
  for (const auto& r : roots) {
    GfRow row;
    for (const auto& c : q.project(r)) {
      BigInt m = c % p;
      if (m < 0) m += p;
      row.push_back(static_cast<std::uint8_t>(m.convert_to<int>()));
    }
    out.push_back(std::move(row));
  }
  return out;
}

/// All subsets of `roots` whose images form a GF(p) basis of outer/inner.
inline std::vector<std::vector<Vector>> coset_bases(const std::vector<Vector>& roots, const Lattice& outer,
                                                    const Lattice& inner, unsigned p, std::uint64_t cap) {
  const auto q = smith_quotient(outer, inner);
  const std::size_t dim = q.divisors().size();
  if (binomial(roots.size(), dim) > cap)
    throw Error(ErrorKind::SearchSpaceTooLarge, "too many coset basis candidates");
  const auto res = residues(roots, outer, inner, p);
  std::vector<std::vector<Vector>> out;
  for_each_combination(roots.size(), dim, [&](const std::vector<std::size_t>& idx) {
    std::vector<GfRow> rows;
    for (auto i : idx) rows.push_back(res[i]);
    if (gf_rank(p, rows) != dim) return;
    std::vector<Vector> b;
    for (auto i : idx) b.push_back(roots[i]);
    out.push_back(std::move(b));
  });
  return out;
}

inline std::vector<std::vector<Vector>> singletons(const std::vector<Vector>& roots) {
  std::vector<std::vector<Vector>> out;
  for (const auto& r : roots) out.push_back({r});
  return out;
}

inline std::vector<std::vector<Vector>> product(const std::vector<std::vector<Vector>>& a,
                                                const std::vector<std::vector<Vector>>& b, std::uint64_t cap) {
  if (static_cast<std::uint64_t>(a.size()) * b.size() > cap)
    throw Error(ErrorKind::SearchSpaceTooLarge, "too many base candidates");
  std::vector<std::vector<Vector>> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      std::vector<Vector> c = x;
      c.insert(c.end(), y.begin(), y.end());
      out.push_back(std::move(c));
    }
  return out;
}

}  // namespace detail

/// Candidates follow the shape of the characterization (a short root times
/// long coset bases for B, coset-basis pairs for F4, and so on); every
/// candidate is certified by the decider before it is listed.
inline BaseCatalog enumerate_reflectable_bases(const FiniteRootSystem& R, EnumerationLimits lim = {}) {
  const RootSystemType& t = R.type();
  const LocallyFiniteDecider dec(R);
  if (!dec.supported()) throw Error(ErrorKind::Unsupported, "no decider for " + t.str());
  const auto sh = R.roots_of(LengthClass::Short);
  const auto lg = R.roots_of(LengthClass::Long);
  auto span = [](const std::vector<Vector>& v) { return lattice_span(v); };
  std::vector<std::vector<Vector>> cand;
  const std::uint64_t cap = lim.max_candidates;
  if (t.is_rank_one()) {
    cand = detail::singletons(R.nonzero());
  } else if (R.simply_laced()) {
    const Lattice all = span(R.nonzero());
    cand = detail::coset_bases(R.nonzero(), all, all.scaled(2), 2, cap);
  } else if ((t.tag == RootType::B || t.tag == RootType::C) && t.index_size == 2) {
    cand = detail::product(detail::singletons(sh), detail::singletons(lg), cap);
  } else if (t.tag == RootType::B) {
    cand = detail::product(detail::singletons(sh), detail::coset_bases(lg, span(lg), span(sh).scaled(2), 2, cap), cap);
  } else if (t.tag == RootType::C) {
    cand = detail::product(detail::singletons(lg), detail::coset_bases(sh, span(sh), span(lg), 2, cap), cap);
  } else {
    const unsigned p = static_cast<unsigned>(R.rho());
    cand = detail::product(detail::coset_bases(sh, span(sh), span(lg), p, cap),
                           detail::coset_bases(lg, span(lg), span(sh).scaled(p), p, cap), cap);
    cand.erase(std::remove_if(cand.begin(), cand.end(), [](const auto& c) { return !is_connected(c); }), cand.end());
  }
  BaseCatalog cat;
  cat.system = t.str();
  for (auto& c : cand) {
    std::sort(c.begin(), c.end());
    if (lim.max_size && c.size() > lim.max_size) continue;
    if (!dec.decide(c).is_base())
      throw Error(ErrorKind::ConditionViolated, "candidate " + c.front().str() + "... failed certification");
    cat.bases.push_back(std::move(c));
  }
  std::sort(cat.bases.begin(), cat.bases.end());
  cat.bases.erase(std::unique(cat.bases.begin(), cat.bases.end()), cat.bases.end());
  return cat;
}

/// Bases of an affine system whose roots lie in the window |iso| ≤ radius,
/// up to max_size elements (default rank + nullity + 2).
inline BaseCatalog enumerate_reflectable_bases(const AffineReflectionSystem& R, EnumerationLimits lim = {}) {
  const AffineDecider dec(R);
  if (!dec.supported()) throw Error(ErrorKind::Unsupported, "no decider for " + dec.system_name());
  const auto win = R.window(lim.window_radius);
  const std::size_t kmax = lim.max_size ? lim.max_size : R.base().rank() + R.nullity() + 2;
  std::uint64_t total = 0;
  for (std::size_t k = 1; k <= kmax; ++k) total += detail::binomial(win.size(), k);
  if (total > lim.max_candidates)
    throw Error(ErrorKind::SearchSpaceTooLarge,
                std::to_string(total) + " candidate subsets exceed the cap of " + std::to_string(lim.max_candidates));
  const Lattice target = R.span();
  BaseCatalog cat;
  cat.system = dec.system_name();
  cat.complete = false;
  for (std::size_t k = 1; k <= kmax; ++k)
    detail::for_each_combination(win.size(), k, [&](const std::vector<std::size_t>& idx) {
      std::vector<Vector> c;
      for (auto i : idx) c.push_back(win[i]);
      // Cheap necessary condition before the full decision.
      if (lattice_span(c, R.finite_dim(), R.nullity()) != target) return;
      if (dec.decide(c).is_base()) cat.bases.push_back(std::move(c));
    });
  std::sort(cat.bases.begin(), cat.bases.end());
  return cat;
}

namespace detail {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

inline std::vector<Vector> act(const Vector& alpha, const std::vector<Vector>& base) {
  std::vector<Vector> img;
  for (const auto& b : base) img.push_back(reflect(alpha, b));
  std::sort(img.begin(), img.end());
  return img;
}

inline void label_orbits(BaseCatalog& cat, UnionFind& uf) {
  std::map<std::size_t, std::size_t> id;
  cat.orbit_partition.assign(cat.bases.size(), 0);
  for (std::size_t i = 0; i < cat.bases.size(); ++i) {
    const auto root = uf.find(i);
    auto it = id.try_emplace(root, id.size()).first;
    cat.orbit_partition[i] = it->second;
  }
  cat.orbit_count = id.size();
}

}  // namespace detail

/// Orbits of the Weyl group on a complete finite catalog. Reflections in all
/// roots generate W, so the components of the one-step graph are the orbits.
/// Throws ConditionViolated if an image falls outside the catalog.
inline void weyl_orbits(BaseCatalog& cat, const FiniteRootSystem& R) {
  std::map<std::vector<Vector>, std::size_t> index;
  for (std::size_t i = 0; i < cat.bases.size(); ++i) index.emplace(cat.bases[i], i);
  detail::UnionFind uf(cat.bases.size());
  for (std::size_t i = 0; i < cat.bases.size(); ++i)
    for (const auto& a : R.nonzero()) {
      auto it = index.find(detail::act(a, cat.bases[i]));
      if (it == index.end())
        throw Error(ErrorKind::ConditionViolated, "Weyl image of a cataloged base is missing from the catalog");
      uf.unite(i, it->second);
    }
  cat.generator_bound = 1;
  cat.orbits_are_refinement = false;
  detail::label_orbits(cat, uf);
}

/// Orbits on a window catalog. Words of length ≤ bound in the reflections
/// of the window roots are applied; intermediate images may leave the
/// catalog. The result refines the true partition.
inline void weyl_orbits(BaseCatalog& cat, const AffineReflectionSystem& R, std::size_t bound = 6,
                        std::int64_t radius = 1, std::size_t max_states = 200'000) {
  std::map<std::vector<Vector>, std::size_t> index;
  for (std::size_t i = 0; i < cat.bases.size(); ++i) index.emplace(cat.bases[i], i);
  const auto gens = R.window(radius);
  detail::UnionFind uf(cat.bases.size());
  for (std::size_t i = 0; i < cat.bases.size(); ++i) {
    std::map<std::vector<Vector>, std::size_t> seen{{cat.bases[i], 0}};
    std::vector<std::vector<Vector>> frontier{cat.bases[i]};
    for (std::size_t depth = 1; depth <= bound && !frontier.empty() && seen.size() < max_states; ++depth) {
      std::vector<std::vector<Vector>> next;
      for (const auto& b : frontier)
        for (const auto& a : gens) {
          auto img = detail::act(a, b);
          if (!seen.emplace(img, depth).second) continue;
          auto it = index.find(img);
          if (it != index.end()) uf.unite(i, it->second);
          next.push_back(std::move(img));
          if (seen.size() >= max_states) break;
        }
      frontier = std::move(next);
    }
  }
  cat.generator_bound = bound;
  cat.orbits_are_refinement = true;
  detail::label_orbits(cat, uf);
}

/// Input of the reflectable-set construction. Iso vectors live in Z^ν.
///
/// Two classes of roots: short_points[j] + strong_set[j] and
/// long_points[k] + spanning_set[k], where strong_set is strong coset
/// spanning for S in ⟨L⟩ (containing 0). For rank two spanning_set is
/// strong coset spanning for L in 2⟨S⟩ (containing 0); for B with |I| ≥ 3 it
/// is coset spanning for L in 2⟨S⟩ and finite_long is a coset spanning set
/// for Ṙ_lg in 2⟨Ṙ_sh⟩. In both cases ⟨strong_set⟩ + ⟨spanning_set⟩ = ⟨S⟩.
struct ReflectableData {
  std::vector<Vector> short_points;
  std::vector<Vector> strong_set;
  std::vector<Vector> long_points;
  std::vector<Vector> spanning_set;
  std::vector<Vector> finite_long;
};

namespace detail {

inline void hypothesis(bool ok, const std::string& which, const std::string& what) {
  if (!ok) throw Error(ErrorKind::HypothesisViolated, what, which);
}

}  // namespace detail

/// Builds Π from the data after validating every hypothesis, then certifies
/// it with the affine decider.
inline std::vector<Vector> construct_reflectable_set(const AffineReflectionSystem& R, const ReflectableData& d) {
  using detail::hypothesis;
  const RootSystemType& t = R.base().type();
  const std::size_t n = R.finite_dim(), nu = R.nullity();
  const bool rank_two = (t.tag == RootType::B || t.tag == RootType::C) && t.index_size == 2;
  hypothesis(rank_two || (t.tag == RootType::B && t.index_size >= 3), "type",
             "construction covers B and rank-two C systems, got " + t.str());
  const CosetSet& S = R.S();
  const CosetSet& L = *R.L();
  hypothesis(d.short_points.size() == d.strong_set.size(), "short_points", "one short root per strong set element");
  hypothesis(d.long_points.size() == d.spanning_set.size(), "long_points", "one long root per spanning set element");
  for (const auto& v : d.strong_set) hypothesis(v.finite_dim() == 0 && v.nullity() == nu, "strong_set", "shape");
  for (const auto& v : d.spanning_set) hypothesis(v.finite_dim() == 0 && v.nullity() == nu, "spanning_set", "shape");
  for (const auto& a : d.short_points)
    hypothesis(a.nullity() == 0 && R.base().class_of(a) == LengthClass::Short, "short_points", a.str() + " is not short");
  for (const auto& b : d.long_points)
    hypothesis(b.nullity() == 0 && R.base().class_of(b) == LengthClass::Long, "long_points", b.str() + " is not long");
  for (const auto& b : d.finite_long)
    hypothesis(b.nullity() == 0 && R.base().class_of(b) == LengthClass::Long, "finite_long", b.str() + " is not long");
  const Vector zero(0, nu);
  hypothesis(std::find(d.strong_set.begin(), d.strong_set.end(), zero) != d.strong_set.end(), "strong_set",
             "0 must be in the strong set");
  for (const auto& s : d.strong_set) hypothesis(S.contains(s), "strong_set", s.str() + " is not in S");
  for (const auto& s : d.spanning_set) hypothesis(L.contains(s), "spanning_set", s.str() + " is not in L");
  hypothesis(is_strong_coset_spanning(d.strong_set, S, L.span()), "strong_set",
             "not strong coset spanning for S in the span of L");
  const Lattice twoS = S.span().scaled(2);
  if (rank_two) {
    hypothesis(std::find(d.spanning_set.begin(), d.spanning_set.end(), zero) != d.spanning_set.end(),
               "spanning_set", "0 must be in the spanning set");
    hypothesis(is_strong_coset_spanning(d.spanning_set, L, twoS), "spanning_set",
               "not strong coset spanning for L in twice the span of S");
    hypothesis(d.finite_long.empty(), "finite_long", "unused in rank two");
  } else {
    if (nu > 0)
      hypothesis(is_coset_spanning(d.spanning_set, L.span(), twoS), "spanning_set",
                 "not coset spanning for L in twice the span of S");
    const auto sh = R.base().roots_of(LengthClass::Short), lg = R.base().roots_of(LengthClass::Long);
    hypothesis(is_coset_spanning(d.finite_long, lattice_span(lg), lattice_span(sh).scaled(2)), "finite_long",
               "not coset spanning for the long roots in twice the short span");
  }
  std::vector<Vector> gens = d.strong_set;
  gens.insert(gens.end(), d.spanning_set.begin(), d.spanning_set.end());
  hypothesis(lattice_span(gens, 0, nu) == S.span(), "span", "strong and spanning sets do not generate the span of S");

  std::vector<Vector> pi;
  for (std::size_t j = 0; j < d.short_points.size(); ++j) pi.push_back(Vector(d.short_points[j].fin, d.strong_set[j].iso));
  for (std::size_t k = 0; k < d.long_points.size(); ++k) pi.push_back(Vector(d.long_points[k].fin, d.spanning_set[k].iso));
  for (const auto& b : d.finite_long) pi.push_back(b.embedded(n, nu));
  std::sort(pi.begin(), pi.end());
  pi.erase(std::unique(pi.begin(), pi.end()), pi.end());
  if (!decide_affine(R, pi).is_set())
    throw Error(ErrorKind::ConditionViolated, "constructed set was not certified reflectable");
  return pi;
}

}  // namespace reflekta
