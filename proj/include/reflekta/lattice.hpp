#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "reflekta/errors.hpp"
#include "reflekta/normal_form.hpp"
#include "reflekta/vector.hpp"

namespace reflekta {

using BigInt = boost::multiprecision::cpp_int;
using BigMatrix = nf::Matrix<BigInt>;

inline std::vector<BigInt> to_big(const std::vector<std::int64_t>& v) {
  return std::vector<BigInt>(v.begin(), v.end());
}

inline std::int64_t to_i64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorKind::DimensionMismatch, "coordinate exceeds 64-bit range");
  return x.convert_to<std::int64_t>();
}

inline std::vector<std::int64_t> to_small(const std::vector<BigInt>& v) {
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_i64(x));
  return out;
}

/// Sublattice of Z^ambient_dim stored as its canonical row HNF.
///
/// Vectors enter through their grid coordinates (finite numerators followed by
/// iso coefficients), so equality of lattices is equality of bases.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(std::size_t ambient_dim) : dim_(ambient_dim) {}

  static Lattice from_rows(std::size_t ambient_dim, BigMatrix rows) {
    for (const auto& r : rows)
      if (r.size() != ambient_dim)
        throw Error(ErrorKind::DimensionMismatch, "generator row of wrong length");
    Lattice l(ambient_dim);
    l.basis_ = nf::hermite_normal_form(std::move(rows), ambient_dim);
    return l;
  }

  static Lattice from_rows(std::size_t ambient_dim, const std::vector<std::vector<std::int64_t>>& rows) {
    BigMatrix m;
    m.reserve(rows.size());
    for (const auto& r : rows) m.push_back(to_big(r));
    return from_rows(ambient_dim, std::move(m));
  }

  /// Z^n.
  static Lattice standard(std::size_t n) { return from_rows(n, nf::identity<BigInt>(n)); }

  std::size_t ambient_dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  bool is_zero() const noexcept { return basis_.empty(); }
  bool full_rank() const noexcept { return basis_.size() == dim_; }
  const BigMatrix& basis() const noexcept { return basis_; }

  bool contains(const std::vector<BigInt>& x) const {
    check_dim(x.size());
    return nf::solve_in_hnf<BigInt>(basis_, x, nullptr);
  }
  bool contains(const std::vector<std::int64_t>& x) const { return contains(to_big(x)); }

  /// Coordinates of x in the HNF basis; throws NotMember when outside.
  std::vector<BigInt> coordinates(const std::vector<BigInt>& x) const {
    check_dim(x.size());
    std::vector<BigInt> c;
    if (!nf::solve_in_hnf<BigInt>(basis_, x, &c))
      throw Error(ErrorKind::NotMember, "vector is not in the lattice");
    return c;
  }

  /// Canonical representative of x modulo this lattice.
  std::vector<BigInt> reduce(const std::vector<BigInt>& x) const {
    check_dim(x.size());
    return nf::reduce_mod_hnf(basis_, x);
  }
  std::vector<std::int64_t> reduce(const std::vector<std::int64_t>& x) const {
    return to_small(reduce(to_big(x)));
  }

  bool is_sublattice_of(const Lattice& o) const {
    if (dim_ != o.dim_) return false;
    for (const auto& row : basis_)
      if (!o.contains(row)) return false;
    return true;
  }

  Lattice scaled(const BigInt& k) const {
    BigMatrix rows = basis_;
    for (auto& r : rows)
      for (auto& x : r) x *= k;
    return from_rows(dim_, std::move(rows));
  }

  friend Lattice operator+(const Lattice& a, const Lattice& b) {
    if (a.dim_ != b.dim_) throw Error(ErrorKind::DimensionMismatch, "lattice sum");
    BigMatrix rows = a.basis_;
    rows.insert(rows.end(), b.basis_.begin(), b.basis_.end());
    return from_rows(a.dim_, std::move(rows));
  }

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.dim_ == b.dim_ && a.basis_ == b.basis_;
  }

  /// Index [Z^n : L]; only for full-rank lattices.
  BigInt index_in_standard() const {
    if (!full_rank()) throw Error(ErrorKind::InfiniteQuotient, "lattice is not of full rank");
    BigInt d = 1;
    for (std::size_t i = 0; i < basis_.size(); ++i) d *= basis_[i][i];
    return d;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (i) s += ";";
      for (std::size_t j = 0; j < dim_; ++j) {
        if (j) s += ",";
        s += basis_[i][j].str();
      }
    }
    return s + "]";
  }

 private:
  void check_dim(std::size_t n) const {
    if (n != dim_)
      throw Error(ErrorKind::DimensionMismatch,
                  "vector of length " + std::to_string(n) + " against lattice in Z^" +
                      std::to_string(dim_));
  }

  std::size_t dim_ = 0;
  BigMatrix basis_;
};

/// ⟨generators⟩ as a lattice in the grid of the given ambient shape.
inline Lattice lattice_span(const std::vector<Vector>& generators, std::size_t finite_dim,
                            std::size_t nullity) {
  BigMatrix rows;
  rows.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.finite_dim() != finite_dim || g.nullity() != nullity)
      throw Error(ErrorKind::DimensionMismatch, "generator " + g.str() + " has wrong shape");
    rows.push_back(to_big(g.grid()));
  }
  return Lattice::from_rows(finite_dim + nullity, std::move(rows));
}

/// ⟨generators⟩; the ambient shape is taken from the first generator (the
/// empty span is the zero lattice of dimension 0).
inline Lattice lattice_span(const std::vector<Vector>& generators) {
  if (generators.empty()) return Lattice(0);
  return lattice_span(generators, generators.front().finite_dim(), generators.front().nullity());
}

inline bool lattice_member(const Vector& x, const Lattice& L) {
  if (L.ambient_dim() == 0 && L.is_zero()) return x.is_zero();
  return L.contains(x.grid());
}

/// Vector with the given ambient shape from grid coordinates.
inline Vector from_grid(const std::vector<BigInt>& g, std::size_t finite_dim, std::size_t nullity) {
  if (g.size() != finite_dim + nullity)
    throw Error(ErrorKind::DimensionMismatch, "grid coordinates of wrong length");
  Vector v(finite_dim, nullity);
  for (std::size_t i = 0; i < finite_dim; ++i) v.fin[i] = to_i64(g[i]);
  for (std::size_t j = 0; j < nullity; ++j) v.iso[j] = to_i64(g[finite_dim + j]);
  return v;
}

/// a ∩ b: rows of HNF([[a, a], [b, 0]]) with vanishing first block.
inline Lattice lattice_intersection(const Lattice& a, const Lattice& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "lattice intersection");
  const std::size_t n = a.ambient_dim();
  BigMatrix rows;
  for (const auto& r : a.basis()) {
    std::vector<BigInt> row(r);
    row.insert(row.end(), r.begin(), r.end());
    rows.push_back(std::move(row));
  }
  for (const auto& r : b.basis()) {
    std::vector<BigInt> row(r);
    row.resize(2 * n, BigInt(0));
    rows.push_back(std::move(row));
  }
  BigMatrix h = nf::hermite_normal_form(std::move(rows), 2 * n);
  BigMatrix out;
  for (const auto& r : h) {
    bool head_zero = std::all_of(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n),
                                 [](const BigInt& x) { return x == 0; });
    if (head_zero) out.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(n), r.end());
  }
  return Lattice::from_rows(n, std::move(out));
}

/// Structure of outer/inner with a projection to Z_{d_1} ⊕ ... ⊕ Z_{d_k} ⊕ Z^f.
class QuotientDescription {
 public:
  QuotientDescription() = default;

  /// Elementary divisors ≥ 2 of the finite part.
  const std::vector<BigInt>& divisors() const noexcept { return divisors_; }
  /// Number of infinite cyclic factors.
  std::size_t free_rank() const noexcept { return free_rank_; }
  bool is_finite() const noexcept { return free_rank_ == 0; }
  /// Number of elementary factors (finite and free).
  std::size_t length() const noexcept { return divisors_.size() + free_rank_; }

  BigInt order() const {
    if (!is_finite()) throw Error(ErrorKind::InfiniteQuotient, "quotient has a free part");
    BigInt o = 1;
    for (const auto& d : divisors_) o *= d;
    return o;
  }

  /// Coset id of an outer element: residues in [0, d_k), then free coordinates.
  std::vector<BigInt> project(const std::vector<BigInt>& x) const {
    const std::vector<BigInt> c = outer_.coordinates(x);
    std::vector<BigInt> out;
    out.reserve(length());
    for (std::size_t t = skip_; t < v_.size(); ++t) {
      BigInt y = 0;
      for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0 && v_[i][t] != 0) y += c[i] * v_[i][t];
      if (t < skip_ + divisors_.size()) {
        const BigInt& d = divisors_[t - skip_];
        y %= d;
        if (y < 0) y += d;
      }
      out.push_back(std::move(y));
    }
    return out;
  }
  std::vector<BigInt> project(const Vector& x) const { return project(to_big(x.grid())); }

  /// Residue tuple with small entries (finite quotients only).
  std::vector<std::int64_t> project_small(const Vector& x) const { return to_small(project(x)); }

  const Lattice& outer() const noexcept { return outer_; }
  const Lattice& inner() const noexcept { return inner_; }

  friend QuotientDescription smith_quotient(const Lattice& outer, const Lattice& inner);

 private:
  Lattice outer_, inner_;
  std::vector<BigInt> divisors_;
  std::size_t free_rank_ = 0;
  std::size_t skip_ = 0;
  BigMatrix v_;
};

/// outer / inner via the Smith form of inner's coordinates in outer's basis.
inline QuotientDescription smith_quotient(const Lattice& outer, const Lattice& inner) {
  if (outer.ambient_dim() != inner.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "quotient of lattices in different ambients");
  if (!inner.is_sublattice_of(outer))
    throw Error(ErrorKind::NotSublattice, "inner " + inner.str() + " is not inside outer " + outer.str());
  BigMatrix coords;
  for (const auto& row : inner.basis()) coords.push_back(outer.coordinates(row));
  const std::size_t r = outer.rank();
  auto snf = nf::smith_normal_form(std::move(coords), r);
  QuotientDescription q;
  q.outer_ = outer;
  q.inner_ = inner;
  q.v_ = std::move(snf.col_transform);
  std::size_t units = 0;
  for (const auto& d : snf.diagonal) {
    if (d == 1)
      ++units;
    else
      q.divisors_.push_back(d);
  }
  q.skip_ = units;
  q.free_rank_ = r - snf.diagonal.size();
  return q;
}

}  // namespace reflekta
