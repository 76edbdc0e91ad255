#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "reflekta/coset_set.hpp"
#include "reflekta/errors.hpp"
#include "reflekta/lattice.hpp"
#include "reflekta/root_system.hpp"
#include "reflekta/vector.hpp"
#include "reflekta/weyl.hpp"

namespace reflekta {

// Set arithmetic on coset unions of Z^ν. Each test is exact: the sets are
// finite unions of cosets, so every inclusion reduces to finitely many
// coset-membership checks.
namespace coset_ops {

inline CosetSet scaled(const CosetSet& X, std::int64_t k) {
  std::vector<Vector> reps;
  for (const auto& r : X.reps) reps.push_back(k * r);
  return CosetSet(X.finite_dim, X.nullity, X.modulus.scaled(k), std::move(reps), X.pointed, X.symmetric);
}

inline CosetSet negated(const CosetSet& X) { return scaled(X, -1); }

/// X + Y ⊆ Z.
inline bool sum_contained(const CosetSet& X, const CosetSet& Y, const CosetSet& Z) {
  if (X.empty() || Y.empty()) return true;
  if (Z.empty()) return false;
  const Lattice mxy = X.modulus + Y.modulus;
  const Lattice join = mxy + Z.modulus;
  if (!smith_quotient(join, Z.modulus).is_finite()) return false;
  const FiniteQuotient fq(join, Z.modulus);
  const auto sub = fq.subgroup(mxy.basis());
  for (const auto& r : X.reps)
    for (const auto& s : Y.reps)
      for (const auto& [code, lift] : sub) {
        (void)code;
        if (!Z.contains(r + s + from_grid(lift, X.finite_dim, X.nullity))) return false;
      }
  return true;
}

/// X ⊆ Z.
inline bool contained(const CosetSet& X, const CosetSet& Z) {
  return sum_contained(X, CosetSet::zero(X.nullity), Z);
}

inline bool is_subgroup(const CosetSet& X) {
  const Vector zero(X.finite_dim, X.nullity);
  return X.contains(zero) && sum_contained(X, X, X) && contained(negated(X), X);
}

}  // namespace coset_ops

/// Z^ν modulo D·Z^ν with residues packed into one index.
class ModGrid {
 public:
  static constexpr std::uint64_t kMaxPoints = 1'000'000;

  ModGrid() = default;
  ModGrid(std::int64_t D, std::size_t nu) : D_(D), nu_(nu) {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < nu; ++i) {
      s *= static_cast<std::uint64_t>(D);
      if (s > kMaxPoints) throw Error(ErrorKind::SearchSpaceTooLarge, "isotropic residue grid exceeds 10^6 points");
    }
    size_ = s;
  }

  std::int64_t modulus() const noexcept { return D_; }
  std::uint64_t size() const noexcept { return size_; }

  std::uint64_t code(const std::vector<std::int64_t>& g) const {
    std::uint64_t c = 0, mul = 1;
    for (std::size_t i = 0; i < nu_; ++i) {
      std::int64_t r = g[i] % D_;
      if (r < 0) r += D_;
      c += static_cast<std::uint64_t>(r) * mul;
      mul *= static_cast<std::uint64_t>(D_);
    }
    return c;
  }
  std::vector<std::int64_t> point(std::uint64_t c) const {
    std::vector<std::int64_t> g(nu_);
    for (std::size_t i = 0; i < nu_; ++i) {
      g[i] = static_cast<std::int64_t>(c % static_cast<std::uint64_t>(D_));
      c /= static_cast<std::uint64_t>(D_);
    }
    return g;
  }

  std::vector<char> indicator(const CosetSet& X) const {
    std::vector<char> bits(size_, 0);
    for (std::uint64_t c = 0; c < size_; ++c) bits[c] = X.contains(Vector({}, point(c))) ? 1 : 0;
    return bits;
  }

 private:
  std::int64_t D_ = 1;
  std::size_t nu_ = 0;
  std::uint64_t size_ = 1;
};

/// Largest elementary divisor of Z^ν / M (M of full rank).
inline std::int64_t exponent_of(const Lattice& M) {
  const auto q = smith_quotient(Lattice::standard(M.ambient_dim()), M);
  if (!q.is_finite()) throw Error(ErrorKind::ConditionViolated, "coset modulus is not of full rank", "★");
  std::int64_t e = 1;
  for (const auto& d : q.divisors()) e = std::lcm(e, to_i64(d));
  return e;
}

/// Tame irreducible affine reflection system R = (S+S) ∪ (Ṙ_sh+S) ∪
/// (Ṙ_lg+L) ∪ (Ṙ_ex+E) in A = Ȧ ⊕ Z^ν. Nullity 0 gives the finite system.
class AffineReflectionSystem {
 public:
  AffineReflectionSystem() = default;

  const FiniteRootSystem& base() const noexcept { return base_; }
  std::size_t nullity() const noexcept { return nu_; }
  std::size_t finite_dim() const noexcept { return base_.dim(); }
  std::size_t grid_dim() const noexcept { return base_.dim() + nu_; }
  const CosetSet& S() const noexcept { return S_; }
  const std::optional<CosetSet>& L() const noexcept { return L_; }
  const std::optional<CosetSet>& E() const noexcept { return E_; }
  const ModGrid& grid() const noexcept { return grid_; }

  /// Isotropic shifts attached to a length class.
  const CosetSet& shifts(LengthClass c) const {
    switch (c) {
      case LengthClass::Short: return S_;
      case LengthClass::Long:
        if (L_) return *L_;
        break;
      case LengthClass::ExtraLong:
        if (E_) return *E_;
        break;
      default: break;
    }
    throw Error(ErrorKind::NotMember, std::string("system has no ") + class_name(c) + " roots");
  }

  /// Finite root with zero iso part embedded in A.
  Vector lift(const Vector& finite_root) const { return finite_root.embedded(base_.dim(), nu_); }

  bool contains(const Vector& x) const {
    if (x.finite_dim() != base_.dim() || x.nullity() != nu_) return false;
    const std::uint64_t c = grid_.code(x.iso);
    if (x.finite_is_zero()) return zero_[c] != 0;
    const auto cls = base_.class_of(Vector(x.fin, {}));
    if (!cls) return false;
    switch (*cls) {
      case LengthClass::Short: return s_[c] != 0;
      case LengthClass::Long: return l_[c] != 0;
      case LengthClass::ExtraLong: return e_[c] != 0;
      default: return false;
    }
  }
  bool contains_nonisotropic(const Vector& x) const { return !x.finite_is_zero() && contains(x); }

  /// Length class of a non-isotropic root.
  LengthClass class_of(const Vector& x) const {
    if (!contains_nonisotropic(x)) throw Error(ErrorKind::NotMember, x.str() + " is not a non-isotropic root");
    return *base_.class_of(Vector(x.fin, {}));
  }

  /// R_c = Ṙ_c + X_c as a coset set in A with the embedded modulus.
  CosetSet class_cosets(LengthClass c) const {
    const CosetSet& X = shifts(c);
    std::vector<Vector> reps;
    for (const auto& a : base_.roots_of(c))
      for (const auto& r : X.reps) reps.push_back(Vector(a.fin, r.iso));
    return CosetSet(base_.dim(), nu_, embed(X.modulus), std::move(reps));
  }

  /// R× as one coset set (modulus D·Z^ν).
  CosetSet nonisotropic_cosets() const {
    std::vector<Vector> reps;
    for (std::size_t i = 1; i < base_.size(); ++i) {
      const auto cls = base_.class_of(i);
      const auto& bits = cls == LengthClass::Short ? s_ : cls == LengthClass::Long ? l_ : e_;
      for (std::uint64_t c = 0; c < grid_.size(); ++c)
        if (bits[c]) reps.push_back(Vector(base_.roots()[i].fin, grid_.point(c)));
    }
    return CosetSet(base_.dim(), nu_, embed(Lattice::standard(nu_).scaled(grid_.modulus())), std::move(reps));
  }

  Lattice span_of(LengthClass c) const {
    const CosetSet K = class_cosets(c);
    if (K.empty()) return Lattice(grid_dim());
    return K.span();
  }
  /// ⟨R⟩.
  Lattice span() const {
    Lattice l = span_of(LengthClass::Short);
    if (!base_.partition().lg.empty()) l = l + span_of(LengthClass::Long);
    if (!base_.partition().ex.empty()) l = l + span_of(LengthClass::ExtraLong);
    return l;
  }

  /// R× with |iso| ≤ radius, sorted.
  std::vector<Vector> window(std::int64_t radius) const {
    std::vector<Vector> out;
    const auto box = box_points(radius);
    for (std::size_t i = 1; i < base_.size(); ++i)
      for (const auto& g : box) {
        Vector v(base_.roots()[i].fin, g);
        if (contains(v)) out.push_back(std::move(v));
      }
    std::sort(out.begin(), out.end());
    return out;
  }
  /// R_c with |iso| ≤ radius.
  std::vector<Vector> window(LengthClass c, std::int64_t radius) const {
    std::vector<Vector> out;
    for (auto& v : window(radius))
      if (base_.class_of(Vector(v.fin, {})) == c) out.push_back(v);
    return out;
  }
  /// R⁰ with |iso| ≤ radius.
  std::vector<Vector> isotropic_window(std::int64_t radius) const {
    std::vector<Vector> out;
    for (const auto& g : box_points(radius)) {
      Vector v(std::vector<std::int64_t>(base_.dim(), 0), g);
      if (contains(v)) out.push_back(std::move(v));
    }
    return out;
  }

  std::vector<std::vector<std::int64_t>> box_points(std::int64_t radius) const {
    std::vector<std::vector<std::int64_t>> pts{{}};
    for (std::size_t j = 0; j < nu_; ++j) {
      std::vector<std::vector<std::int64_t>> next;
      for (const auto& p : pts)
        for (std::int64_t k = -radius; k <= radius; ++k) {
          auto q = p;
          q.push_back(k);
          next.push_back(std::move(q));
        }
      pts = std::move(next);
    }
    return pts;
  }

  RootSetView view() const {
    RootSetView v;
    v.finite_dim = base_.dim();
    v.nullity = nu_;
    v.contains = [this](const Vector& x) { return contains(x); };
    v.window = [this](std::int64_t r) { return window(r); };
    return v;
  }

  /// Lattice of Z^ν embedded in the isotropic coordinates of A.
  Lattice embed(const Lattice& M) const {
    BigMatrix rows;
    for (const auto& b : M.basis()) {
      std::vector<BigInt> row(base_.dim(), BigInt(0));
      row.insert(row.end(), b.begin(), b.end());
      rows.push_back(std::move(row));
    }
    return Lattice::from_rows(grid_dim(), std::move(rows));
  }

  friend AffineReflectionSystem build_affine(const FiniteRootSystem&, std::size_t, const CosetSet&,
                                             const std::optional<CosetSet>&, const std::optional<CosetSet>&);

 private:
  FiniteRootSystem base_;
  std::size_t nu_ = 0;
  CosetSet S_;
  std::optional<CosetSet> L_, E_;
  ModGrid grid_;
  std::vector<char> s_, l_, e_, zero_;
};

namespace detail {

inline void require(bool ok, const char* clause, const std::string& what) {
  if (!ok) throw Error(ErrorKind::ConditionViolated, what, clause);
}

inline void check_shape(const CosetSet& X, std::size_t nu, const char* name) {
  if (X.finite_dim != 0 || X.nullity != nu)
    throw Error(ErrorKind::RankMismatch, std::string(name) + " does not live in Z^" + std::to_string(nu));
}

inline CosetSet with_flags(const CosetSet& X, bool pointed, bool symmetric) {
  CosetSet c = canonicalize(X);
  c.pointed = pointed;
  c.symmetric = symmetric;
  return c;
}

}  // namespace detail

/// Whether S may be a proper subset of G for this type.
inline bool allows_proper_S(const RootSystemType& t) {
  return t.rank() == 1 || t.tag == RootType::B || t.tag == RootType::BC ||
         (t.tag == RootType::C && t.index_size == 2);
}

/// Whether L must be a subgroup for this type.
inline bool requires_subgroup_L(const RootSystemType& t) {
  return (t.tag == RootType::B && t.index_size >= 3) || t.tag == RootType::F4 || t.tag == RootType::G2 ||
         (t.tag == RootType::BC && t.index_size >= 3);
}

/// Validates the structure-theorem clauses and materializes the system.
/// For ν = 0 missing data defaults to {0}.
inline AffineReflectionSystem build_affine(const FiniteRootSystem& base, std::size_t nu, const CosetSet& S_in,
                                           const std::optional<CosetSet>& L_in,
                                           const std::optional<CosetSet>& E_in) {
  using namespace coset_ops;
  const RootSystemType& t = base.type();
  if (t.tag == RootType::D && t.index_size == 2)
    throw Error(ErrorKind::InadmissibleRank, "D_2 is reducible");
  const bool has_lg = !base.partition().lg.empty();
  const bool has_ex = !base.partition().ex.empty();

  detail::check_shape(S_in, nu, "S");
  std::optional<CosetSet> L_raw = L_in, E_raw = E_in;
  if (has_lg && !L_raw) {
    if (nu != 0) throw Error(ErrorKind::ConditionViolated, "L is required when there are long roots", "★");
    L_raw = CosetSet::zero(0);
  }
  if (has_ex && !E_raw) {
    if (nu != 0) throw Error(ErrorKind::ConditionViolated, "E is required when there are extra-long roots", "★");
    E_raw = CosetSet::zero(0);
  }
  detail::require(has_lg || !L_raw, "★", "L is given but the base has no long roots");
  detail::require(has_ex || !E_raw, "★", "E is given but the base has no extra-long roots");
  if (L_raw) detail::check_shape(*L_raw, nu, "L");
  if (E_raw) detail::check_shape(*E_raw, nu, "E");

  const CosetSet S = detail::with_flags(S_in, true, true);
  std::optional<CosetSet> L, E;
  if (L_raw) L = detail::with_flags(*L_raw, true, true);
  if (E_raw) E = detail::with_flags(*E_raw, false, true);

  detail::require(validate_reflection_subspace(S), "★", "S is not a pointed reflection subspace");
  if (L) detail::require(validate_reflection_subspace(*L), "★", "L is not a pointed reflection subspace");
  if (E) {
    detail::require(!E->empty(), "★", "E is empty");
    detail::require(validate_reflection_subspace(*E), "★", "E is not a symmetric reflection subspace");
  }

  detail::require(S.span() == Lattice::standard(nu), "i", "S does not generate Z^" + std::to_string(nu));

  const std::int64_t rho = base.rho();
  if (has_lg) {
    detail::require(sum_contained(S, *L, S), "ii", "S + L is not contained in S");
    detail::require(sum_contained(*L, scaled(S, rho), *L), "ii",
                    "L + " + std::to_string(rho) + "S is not contained in L");
  }
  if (has_ex && !has_lg) {
    detail::require(sum_contained(S, *E, S), "ii", "S + E is not contained in S");
    detail::require(sum_contained(*E, scaled(S, 4), *E), "ii", "E + 4S is not contained in E");
  }
  if (has_ex && has_lg) {
    detail::require(sum_contained(*L, *E, *L), "ii", "L + E is not contained in L");
    detail::require(sum_contained(*E, scaled(*L, 2), *E), "ii", "E + 2L is not contained in E");
  }

  if (!allows_proper_S(t))
    detail::require(contained(CosetSet::whole(nu), S), "iii", "S must be all of Z^" + std::to_string(nu));
  if (requires_subgroup_L(t) && L) detail::require(is_subgroup(*L), "iv", "L must be a subgroup");

  std::int64_t D = exponent_of(S.modulus);
  if (L) D = std::lcm(D, exponent_of(L->modulus));
  if (E) D = std::lcm(D, exponent_of(E->modulus));

  AffineReflectionSystem R;
  R.base_ = base;
  R.nu_ = nu;
  R.S_ = S;
  R.L_ = L;
  R.E_ = E;
  R.grid_ = ModGrid(D, nu);
  R.s_ = R.grid_.indicator(S);
  if (L) R.l_ = R.grid_.indicator(*L);
  if (E) R.e_ = R.grid_.indicator(*E);
  R.zero_.assign(R.grid_.size(), 0);
  for (std::uint64_t a = 0; a < R.grid_.size(); ++a) {
    if (!R.s_[a]) continue;
    const auto pa = R.grid_.point(a);
    for (std::uint64_t b = 0; b < R.grid_.size(); ++b) {
      if (!R.s_[b]) continue;
      auto pb = R.grid_.point(b);
      for (std::size_t j = 0; j < nu; ++j) pb[j] += pa[j];
      R.zero_[R.grid_.code(pb)] = 1;
    }
  }
  return R;
}

/// The finite system as a nullity-0 affine system.
inline AffineReflectionSystem as_affine(const FiniteRootSystem& base) {
  return build_affine(base, 0, CosetSet::zero(0), std::nullopt, std::nullopt);
}

struct StructureData {
  FiniteRootSystem base;
  std::size_t nullity = 0;
  CosetSet S;
  std::optional<CosetSet> L, E;
};

/// Recomputes S, L, E as {g : α̇ + g ∈ R} for one root α̇ of each class.
inline StructureData extract_data(const AffineReflectionSystem& R) {
  const FiniteRootSystem& base = R.base();
  const ModGrid& grid = R.grid();
  const std::size_t nu = R.nullity();
  const Lattice period = Lattice::standard(nu).scaled(grid.modulus());
  auto fibre = [&](std::size_t idx, bool pointed) {
    std::vector<Vector> reps;
    const Vector& a = base.roots()[idx];
    for (std::uint64_t c = 0; c < grid.size(); ++c) {
      const auto g = grid.point(c);
      if (R.contains(Vector(a.fin, g))) reps.push_back(Vector({}, g));
    }
    CosetSet X(0, nu, period, std::move(reps), pointed, true);
    return canonicalize(X);
  };
  StructureData d;
  d.base = base;
  d.nullity = nu;
  d.S = fibre(base.partition().sh.front(), true);
  if (!base.partition().lg.empty()) d.L = fibre(base.partition().lg.front(), true);
  if (!base.partition().ex.empty()) d.E = fibre(base.partition().ex.front(), false);
  return d;
}

/// T = S× ∪ ((S× − S×) ∩ A⁰) for S = ⟨C⟩ ∩ R, in coset form.
struct TameClosure {
  Lattice span;                              // ⟨C⟩
  Lattice radical;                           // ⟨C⟩ ∩ A⁰, in Z^ν
  std::optional<RootSystemType> type;        // isomorphism type of the finite part
  std::vector<Vector> finite_roots;          // nonzero finite parts that occur (nullity 0)
  std::vector<CosetSet> fibres;              // iso shifts per finite root
  CosetSet isotropic;                        // T⁰ shifts
  std::size_t finite_dim = 0, nullity = 0;

  bool contains(const Vector& x) const {
    if (x.finite_dim() != finite_dim || x.nullity() != nullity) return false;
    if (x.finite_is_zero()) return isotropic.contains(Vector({}, x.iso));
    const Vector f(x.fin, {});
    auto it = std::lower_bound(finite_roots.begin(), finite_roots.end(), f);
    if (it == finite_roots.end() || *it != f) return false;
    return fibres[static_cast<std::size_t>(it - finite_roots.begin())].contains(Vector({}, x.iso));
  }

  std::vector<Vector> window(std::int64_t radius) const {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < finite_roots.size(); ++i) {
      std::vector<std::vector<std::int64_t>> pts{{}};
      for (std::size_t j = 0; j < nullity; ++j) {
        std::vector<std::vector<std::int64_t>> next;
        for (const auto& p : pts)
          for (std::int64_t k = -radius; k <= radius; ++k) {
            auto q = p;
            q.push_back(k);
            next.push_back(std::move(q));
          }
        pts = std::move(next);
      }
      for (const auto& g : pts)
        if (fibres[i].contains(Vector({}, g))) out.push_back(Vector(finite_roots[i].fin, g));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  RootSetView view() const {
    RootSetView v;
    v.finite_dim = finite_dim;
    v.nullity = nullity;
    v.contains = [this](const Vector& x) { return contains(x); };
    v.window = [this](std::int64_t r) { return window(r); };
    return v;
  }
};

inline TameClosure tame_closure(const std::vector<Vector>& C, const AffineReflectionSystem& R) {
  if (C.empty()) throw Error(ErrorKind::EmptyInput, "tame closure of the empty set");
  for (const auto& c : C)
    if (!R.contains_nonisotropic(c)) throw Error(ErrorKind::NotMember, c.str() + " is not a non-isotropic root");
  if (!is_connected(C)) throw Error(ErrorKind::Disconnected, "the generating set is not connected");
  const std::size_t n = R.finite_dim(), nu = R.nullity();
  TameClosure T;
  T.finite_dim = n;
  T.nullity = nu;
  T.span = lattice_span(C, n, nu);

  // HNF rows pivoting in the finite block project onto the finite span; the
  // remaining rows have zero finite part and span the radical.
  BigMatrix fin_rows, rad_rows;
  for (const auto& row : T.span.basis()) {
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    if (c < n)
      fin_rows.push_back(row);
    else
      rad_rows.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
  }
  T.radical = Lattice::from_rows(nu, rad_rows);
  const std::int64_t D = R.grid().modulus();
  const Lattice fibre_mod = T.radical.scaled(D);
  const auto& rad_basis = T.radical.basis();

  // h ranges over radical / D·radical.
  std::vector<std::vector<std::int64_t>> shifts{std::vector<std::int64_t>(nu, 0)};
  for (const auto& b : rad_basis) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& s : shifts)
      for (std::int64_t a = 0; a < D; ++a) {
        auto t = s;
        for (std::size_t j = 0; j < nu; ++j) t[j] += a * to_i64(b[j]);
        next.push_back(std::move(t));
      }
    shifts = std::move(next);
    if (shifts.size() > ModGrid::kMaxPoints)
      throw Error(ErrorKind::SearchSpaceTooLarge, "radical residue enumeration exceeds 10^6 points");
  }

  std::vector<Vector> diffs;
  for (std::size_t i = 1; i < R.base().size(); ++i) {
    const Vector& a = R.base().roots()[i];
    // Solve for g0 with a + g0 ∈ ⟨C⟩ along the finite pivots.
    std::vector<BigInt> x = to_big(Vector(a.fin, std::vector<std::int64_t>(nu, 0)).grid());
    bool ok = true;
    auto piv = nf::pivot_columns(fin_rows);
    std::size_t next = 0;
    for (std::size_t col = 0; col < n && ok; ++col) {
      if (next < fin_rows.size() && piv[next] == col) {
        const BigInt& p = fin_rows[next][col];
        if (x[col] % p != 0) {
          ok = false;
          break;
        }
        const BigInt q = x[col] / p;
        for (std::size_t j = 0; j < x.size(); ++j) x[j] -= q * fin_rows[next][j];
        ++next;
      } else if (x[col] != 0) {
        ok = false;
      }
    }
    if (!ok) continue;
    std::vector<std::int64_t> g0(nu);
    for (std::size_t j = 0; j < nu; ++j) g0[j] = -to_i64(x[n + j]);
    std::vector<Vector> reps;
    for (const auto& h : shifts) {
      std::vector<std::int64_t> g(nu);
      for (std::size_t j = 0; j < nu; ++j) g[j] = g0[j] + h[j];
      if (R.contains(Vector(a.fin, g))) reps.push_back(Vector({}, g));
    }
    if (reps.empty()) continue;
    for (const auto& r1 : reps)
      for (const auto& r2 : reps) diffs.push_back(r1 - r2);
    T.finite_roots.push_back(Vector(a.fin, {}));
    T.fibres.push_back(canonicalize(CosetSet(0, nu, fibre_mod, std::move(reps), false, true)));
  }
  T.isotropic = canonicalize(CosetSet(0, nu, fibre_mod, std::move(diffs), true, true));
  std::vector<Vector> fin_parts;
  for (const auto& f : T.finite_roots) fin_parts.push_back(f);
  T.type = classify_root_system(fin_parts);
  return T;
}

struct AuditReport {
  std::size_t pairs_checked = 0;
  std::size_t string_violations = 0;
  std::size_t reflection_violations = 0;
  std::size_t negation_violations = 0;
  std::size_t tameness_violations = 0;
  bool clean() const {
    return string_violations == 0 && reflection_violations == 0 && negation_violations == 0 &&
           tameness_violations == 0;
  }
};

/// Axiom spot checks on the window |iso| ≤ radius: closure under negation,
/// reflections staying in R, unbroken root strings with d − u = (β, α∨) and
/// tameness of the isotropic roots. `stride` thins the pair loop.
inline AuditReport audit_axioms(const RootSetView& R, std::int64_t radius, std::size_t stride = 1) {
  AuditReport rep;
  const auto rx = R.window(radius);
  std::vector<Vector> all = rx;
  for (const auto& g : [&] {
         std::vector<Vector> iso;
         std::vector<std::vector<std::int64_t>> pts{{}};
         for (std::size_t j = 0; j < R.nullity; ++j) {
           std::vector<std::vector<std::int64_t>> next;
           for (const auto& p : pts)
             for (std::int64_t k = -radius; k <= radius; ++k) {
               auto q = p;
               q.push_back(k);
               next.push_back(std::move(q));
             }
           pts = std::move(next);
         }
         for (const auto& p : pts) {
           Vector v(std::vector<std::int64_t>(R.finite_dim, 0), p);
           if (R.contains(v)) iso.push_back(std::move(v));
         }
         return iso;
       }()) {
    all.push_back(g);
    bool tame = g.is_zero();
    for (std::size_t i = 0; i < rx.size() && !tame; ++i)
      if (R.contains(rx[i] + g) && !is_isotropic(rx[i] + g)) tame = true;
    if (!tame) ++rep.tameness_violations;
  }
  std::size_t k = 0;
  for (const auto& a : rx) {
    if (!R.contains(-a)) ++rep.negation_violations;
    for (const auto& b : all) {
      if (stride > 1 && (k++ % stride) != 0) continue;
      ++rep.pairs_checked;
      if (!R.contains(reflect(a, b))) ++rep.reflection_violations;
      try {
        root_string(a, b, R);
      } catch (const Error&) {
        ++rep.string_violations;
      }
    }
  }
  return rep;
}

}  // namespace reflekta
