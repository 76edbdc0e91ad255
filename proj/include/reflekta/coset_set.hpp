#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "reflekta/errors.hpp"
#include "reflekta/gf.hpp"
#include "reflekta/lattice.hpp"
#include "reflekta/vector.hpp"

namespace reflekta {

/// Finite union of cosets r + modulus.
///
/// All reps share one ambient shape (finite_dim, nullity) and the modulus
/// lives in the matching grid. For the S, L, E data of an affine system the
/// finite dimension is 0.
struct CosetSet {
  std::size_t finite_dim = 0;
  std::size_t nullity = 0;
  Lattice modulus;
  std::vector<Vector> reps;
  bool pointed = false;
  bool symmetric = false;

  CosetSet() = default;
  CosetSet(std::size_t n, std::size_t nu, Lattice mod, std::vector<Vector> r, bool is_pointed = false,
           bool is_symmetric = false)
      : finite_dim(n), nullity(nu), modulus(std::move(mod)), reps(std::move(r)), pointed(is_pointed),
        symmetric(is_symmetric) {
    if (modulus.ambient_dim() != n + nu)
      throw Error(ErrorKind::DimensionMismatch, "coset modulus does not match the ambient shape");
    for (const auto& v : reps)
      if (v.finite_dim() != n || v.nullity() != nu)
        throw Error(ErrorKind::DimensionMismatch, "coset representative " + v.str() + " has wrong shape");
  }

  /// The whole group Z^ν as a pointed set.
  static CosetSet whole(std::size_t nu) {
    return CosetSet(0, nu, Lattice::standard(nu), {Vector(0, nu)}, true, true);
  }
  /// {0} ⊆ Z^ν.
  static CosetSet zero(std::size_t nu) {
    return CosetSet(0, nu, Lattice(nu), {Vector(0, nu)}, true, true);
  }
  /// k·Z^ν.
  static CosetSet multiples(std::size_t nu, std::int64_t k) {
    return CosetSet(0, nu, Lattice::standard(nu).scaled(k), {Vector(0, nu)}, true, true);
  }

  bool empty() const noexcept { return reps.empty(); }

  bool contains(const Vector& x) const {
    if (x.finite_dim() != finite_dim || x.nullity() != nullity)
      throw Error(ErrorKind::DimensionMismatch, "membership test with vector " + x.str());
    for (const auto& r : reps)
      if (modulus.contains(to_big((x - r).grid()))) return true;
    return false;
  }

  /// ⟨X⟩ = span(reps) + modulus.
  Lattice span() const {
    Lattice l = lattice_span(reps, finite_dim, nullity);
    return l + modulus;
  }

  friend bool operator==(const CosetSet& a, const CosetSet& b) {
    return a.finite_dim == b.finite_dim && a.nullity == b.nullity && a.modulus == b.modulus &&
           a.reps == b.reps && a.pointed == b.pointed && a.symmetric == b.symmetric;
  }
};

/// A finite quotient outer/inner with elements encoded as mixed-radix codes.
class FiniteQuotient {
 public:
  static constexpr std::uint64_t kMaxCosets = 1'000'000;

  FiniteQuotient(const Lattice& outer, const Lattice& inner) : q_(smith_quotient(outer, inner)) {
    if (!q_.is_finite())
      throw Error(ErrorKind::InfiniteQuotient, "sublattice has infinite index in its span");
    std::uint64_t order = 1;
    for (const auto& d : q_.divisors()) {
      if (d > BigInt(kMaxCosets) || order * d.convert_to<std::uint64_t>() > kMaxCosets)
        throw Error(ErrorKind::SearchSpaceTooLarge, "quotient has more than 10^6 cosets");
      radix_.push_back(d.convert_to<std::int64_t>());
      order *= d.convert_to<std::uint64_t>();
    }
    order_ = order;
  }

  std::uint64_t order() const noexcept { return order_; }
  const QuotientDescription& description() const noexcept { return q_; }
  const std::vector<std::int64_t>& radix() const noexcept { return radix_; }

  std::vector<std::int64_t> residues(const std::vector<BigInt>& grid) const { return to_small(q_.project(grid)); }

  std::uint64_t encode(const std::vector<std::int64_t>& res) const {
    std::uint64_t code = 0, mul = 1;
    for (std::size_t k = 0; k < radix_.size(); ++k) {
      std::int64_t r = res[k] % radix_[k];
      if (r < 0) r += radix_[k];
      code += static_cast<std::uint64_t>(r) * mul;
      mul *= static_cast<std::uint64_t>(radix_[k]);
    }
    return code;
  }
  std::vector<std::int64_t> decode(std::uint64_t code) const {
    std::vector<std::int64_t> res(radix_.size());
    for (std::size_t k = 0; k < radix_.size(); ++k) {
      res[k] = static_cast<std::int64_t>(code % static_cast<std::uint64_t>(radix_[k]));
      code /= static_cast<std::uint64_t>(radix_[k]);
    }
    return res;
  }
  std::uint64_t code_of(const std::vector<BigInt>& grid) const { return encode(residues(grid)); }
  std::uint64_t code_of(const Vector& v) const { return code_of(to_big(v.grid())); }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    auto x = decode(a), y = decode(b);
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += y[k];
    return encode(x);
  }

  /// Subgroup generated by the images of `gens`, with one lift per element.
  std::unordered_map<std::uint64_t, std::vector<BigInt>> subgroup(const BigMatrix& gens) const {
    const std::size_t dim = q_.outer().ambient_dim();
    std::unordered_map<std::uint64_t, std::vector<BigInt>> seen;
    std::vector<std::uint64_t> queue{0};
    seen.emplace(0, std::vector<BigInt>(dim, BigInt(0)));
    std::vector<std::uint64_t> gcodes;
    for (const auto& g : gens) gcodes.push_back(code_of(g));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint64_t cur = queue[head];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::uint64_t nxt = add(cur, gcodes[i]);
        if (seen.count(nxt)) continue;
        std::vector<BigInt> lift = seen.at(cur);
        for (std::size_t j = 0; j < dim; ++j) lift[j] += gens[i][j];
        seen.emplace(nxt, std::move(lift));
        queue.push_back(nxt);
      }
    }
    return seen;
  }

 private:
  QuotientDescription q_;
  std::vector<std::int64_t> radix_;
  std::uint64_t order_ = 1;
};

/// Canonical form: reps reduced modulo the HNF modulus, deduplicated and
/// sorted. When the modulus has finite index the modulus is first enlarged to
/// the full translation stabilizer of the set, so equal sets get equal forms.
inline CosetSet canonicalize(const CosetSet& x) {
  const std::size_t n = x.finite_dim, nu = x.nullity, dim = n + nu;
  Lattice mod = x.modulus;
  if (mod.full_rank() && !x.reps.empty()) {
    FiniteQuotient fq(Lattice::standard(dim), mod);
    std::vector<std::uint64_t> codes;
    for (const auto& r : x.reps) codes.push_back(fq.code_of(r));
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    const auto all = fq.subgroup(Lattice::standard(dim).basis());
    BigMatrix extra;
    for (const auto& [code, lift] : all) {
      if (code == 0) continue;
      bool stable = true;
      for (auto c : codes)
        if (!std::binary_search(codes.begin(), codes.end(), fq.add(c, code))) {
          stable = false;
          break;
        }
      if (stable) extra.push_back(lift);
    }
    if (!extra.empty()) {
      BigMatrix rows = mod.basis();
      rows.insert(rows.end(), extra.begin(), extra.end());
      mod = Lattice::from_rows(dim, std::move(rows));
    }
  }
  std::vector<Vector> reps;
  for (const auto& r : x.reps) reps.push_back(from_grid(mod.reduce(to_big(r.grid())), n, nu));
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return CosetSet(n, nu, std::move(mod), std::move(reps), x.pointed, x.symmetric);
}

struct CosetRank {
  std::size_t rank = 0;       // GF(p)-rank of the images
  std::size_t dimension = 0;  // dimension of K_span/H
  unsigned prime = 0;         // 0 when the quotient is trivial
};

namespace detail {

inline void check_shape(const std::vector<Vector>& S, const Lattice& L) {
  for (const auto& s : S)
    if (s.grid_dim() != L.ambient_dim())
      throw Error(ErrorKind::DimensionMismatch, "vector " + s.str() + " against lattice of dimension " +
                                                    std::to_string(L.ambient_dim()));
}

}  // namespace detail

/// GF(p)-rank of the images of S in K_span/H, where pK_span ⊆ H ⊆ K_span.
inline CosetRank coset_rank(const std::vector<Vector>& S, const Lattice& K_span, const Lattice& H) {
  detail::check_shape(S, K_span);
  if (H.ambient_dim() != K_span.ambient_dim() || !H.is_sublattice_of(K_span))
    throw Error(ErrorKind::BadPrimeStructure, "H is not contained in the span of K");
  const QuotientDescription q = smith_quotient(K_span, H);
  if (!q.is_finite()) throw Error(ErrorKind::BadPrimeStructure, "K_span/H is infinite");
  CosetRank out;
  out.dimension = q.divisors().size();
  if (out.dimension == 0) return out;
  const BigInt p = q.divisors().front();
  for (const auto& d : q.divisors())
    if (d != p) throw Error(ErrorKind::BadPrimeStructure, "K_span/H is not elementary abelian");
  if (p != 2 && p != 3)
    throw Error(ErrorKind::BadPrimeStructure, "quotient exponent " + p.str() + " is not 2 or 3");
  out.prime = p.convert_to<unsigned>();
  std::vector<GfRow> rows;
  for (const auto& s : S) {
    if (!K_span.contains(to_big(s.grid())))
      throw Error(ErrorKind::NotMember, s.str() + " is not in the span of K");
    const auto res = q.project(s);
    GfRow row;
    for (const auto& r : res) row.push_back(static_cast<std::uint8_t>(r.convert_to<unsigned>()));
    rows.push_back(std::move(row));
  }
  out.rank = gf_rank(out.prime, std::move(rows));
  return out;
}

inline bool is_coset_spanning(const std::vector<Vector>& S, const Lattice& K_span, const Lattice& H) {
  const CosetRank r = coset_rank(S, K_span, H);
  return r.rank == r.dimension;
}

inline bool is_coset_basis(const std::vector<Vector>& S, const Lattice& K_span, const Lattice& H) {
  const CosetRank r = coset_rank(S, K_span, H);
  return r.rank == r.dimension && S.size() == r.dimension;
}

struct StrongCoverage {
  bool holds = false;
  std::size_t cosets_meeting_K = 0;
  /// One element of K from each H-coset that meets K but misses Rset.
  std::vector<Vector> uncovered;
};

/// Which cosets x + H meeting K contain an element of Rset.
inline StrongCoverage strong_coverage(const std::vector<Vector>& Rset, const CosetSet& K, const Lattice& H) {
  const std::size_t n = K.finite_dim, nu = K.nullity, dim = n + nu;
  if (H.ambient_dim() != dim) throw Error(ErrorKind::DimensionMismatch, "H does not match K's ambient");
  for (const auto& r : Rset)
    if (!K.contains(r)) throw Error(ErrorKind::NotMember, r.str() + " is not in K");
  BigMatrix rows = H.basis();
  for (const auto& b : K.modulus.basis()) rows.push_back(b);
  for (const auto& r : K.reps) rows.push_back(to_big(r.grid()));
  const Lattice join = Lattice::from_rows(dim, std::move(rows));
  const FiniteQuotient fq(join, H);
  const auto sub = fq.subgroup(K.modulus.basis());
  std::unordered_map<std::uint64_t, std::vector<BigInt>> image;
  for (const auto& rep : K.reps) {
    const std::uint64_t base = fq.code_of(rep);
    const auto rg = to_big(rep.grid());
    for (const auto& [code, lift] : sub) {
      const std::uint64_t c = fq.add(base, code);
      if (image.count(c)) continue;
      std::vector<BigInt> w = rg;
      for (std::size_t j = 0; j < dim; ++j) w[j] += lift[j];
      image.emplace(c, std::move(w));
    }
  }
  std::vector<std::uint64_t> hit;
  for (const auto& r : Rset) hit.push_back(fq.code_of(r));
  std::sort(hit.begin(), hit.end());
  StrongCoverage out;
  out.cosets_meeting_K = image.size();
  for (const auto& [code, witness] : image)
    if (!std::binary_search(hit.begin(), hit.end(), code)) out.uncovered.push_back(from_grid(witness, n, nu));
  std::sort(out.uncovered.begin(), out.uncovered.end());
  out.holds = out.uncovered.empty();
  return out;
}

inline bool is_strong_coset_spanning(const std::vector<Vector>& Rset, const CosetSet& K, const Lattice& H) {
  return strong_coverage(Rset, K, H).holds;
}

/// Strong, and deleting any single element uncovers some coset.
inline bool is_minimal_strong_coset_spanning(const std::vector<Vector>& Rset, const CosetSet& K,
                                             const Lattice& H) {
  if (!is_strong_coset_spanning(Rset, K, H)) return false;
  for (std::size_t i = 0; i < Rset.size(); ++i) {
    std::vector<Vector> rest = Rset;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (is_strong_coset_spanning(rest, K, H)) return false;
  }
  return true;
}

/// Checks the flagged closure conditions on representatives. X is a union of
/// modulus-cosets, so x − 2y ranges over whole cosets r − 2r′ + modulus and
/// the checks on reps are exact.
inline bool validate_reflection_subspace(const CosetSet& X) {
  const Vector zero(X.finite_dim, X.nullity);
  if (X.pointed && !X.contains(zero)) return false;
  if (X.pointed || X.symmetric) {
    for (const auto& r : X.reps) {
      if (!X.contains(-r)) return false;
      for (const auto& s : X.reps)
        if (!X.contains(r - 2 * s)) return false;
    }
  }
  return true;
}

}  // namespace reflekta
