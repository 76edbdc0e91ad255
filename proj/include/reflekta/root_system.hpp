#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "reflekta/errors.hpp"
#include "reflekta/lattice.hpp"
#include "reflekta/vector.hpp"

namespace reflekta {

enum class RootType { A, B, C, D, BC, F4, G2 };

inline const char* type_name(RootType t) {
  switch (t) {
    case RootType::A: return "A";
    case RootType::B: return "B";
    case RootType::C: return "C";
    case RootType::D: return "D";
    case RootType::BC: return "BC";
    case RootType::F4: return "F4";
    case RootType::G2: return "G2";
  }
  return "?";
}

inline std::optional<RootType> parse_type_name(const std::string& s) {
  if (s == "A") return RootType::A;
  if (s == "B") return RootType::B;
  if (s == "C") return RootType::C;
  if (s == "D") return RootType::D;
  if (s == "BC") return RootType::BC;
  if (s == "F4" || s == "F") return RootType::F4;
  if (s == "G2" || s == "G") return RootType::G2;
  return std::nullopt;
}

struct RootSystemType {
  RootType tag = RootType::A;
  std::size_t index_size = 2;

  friend bool operator==(const RootSystemType&, const RootSystemType&) = default;

  /// Rank of the root lattice.
  std::size_t rank() const {
    switch (tag) {
      case RootType::A: return index_size - 1;
      case RootType::G2: return 2;
      default: return index_size;
    }
  }
  /// Coordinates used by the model (G2 sits in a plane of Z^3).
  std::size_t coordinate_dim() const { return tag == RootType::G2 ? 3 : index_size; }

  /// Rank-one systems all behave as A_1.
  bool is_rank_one() const { return rank() == 1 && tag != RootType::BC; }

  std::string str() const {
    if (tag == RootType::F4 || tag == RootType::G2) return type_name(tag);
    return std::string(type_name(tag)) + "_" + std::to_string(rank());
  }
};

enum class LengthClass { Zero, Short, Long, ExtraLong };

inline const char* class_name(LengthClass c) {
  switch (c) {
    case LengthClass::Zero: return "zero";
    case LengthClass::Short: return "short";
    case LengthClass::Long: return "long";
    case LengthClass::ExtraLong: return "extra_long";
  }
  return "?";
}

struct LengthPartition {
  std::vector<std::size_t> sh, lg, ex;
  std::int64_t rho = 1;
};

/// Explicit coordinate model of a finite irreducible root system.
///
/// Index 0 always holds the zero root; nonzero roots follow in sorted order.
class FiniteRootSystem {
 public:
  FiniteRootSystem() = default;

  const RootSystemType& type() const noexcept { return type_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return type_.rank(); }
  std::int64_t rho() const noexcept { return part_.rho; }
  bool simply_laced() const noexcept { return part_.lg.empty() && part_.ex.empty(); }

  /// All roots including 0 (index 0).
  const std::vector<Vector>& roots() const noexcept { return roots_; }
  std::size_t size() const noexcept { return roots_.size(); }
  /// Nonzero roots.
  std::vector<Vector> nonzero() const { return {roots_.begin() + 1, roots_.end()}; }

  const LengthPartition& partition() const noexcept { return part_; }
  LengthClass class_of(std::size_t idx) const noexcept { return classes_[idx]; }

  std::optional<std::size_t> index_of(const Vector& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const Vector& v) const { return index_.count(v) != 0; }

  std::optional<LengthClass> class_of(const Vector& v) const {
    auto i = index_of(v);
    if (!i) return std::nullopt;
    return classes_[*i];
  }

  std::vector<Vector> roots_of(LengthClass c) const {
    std::vector<Vector> out;
    for (std::size_t i = 1; i < roots_.size(); ++i)
      if (classes_[i] == c) out.push_back(roots_[i]);
    return out;
  }

  /// reflection_index(a, b) = index of w_{root a}(root b), for a != 0.
  std::size_t reflection_index(std::size_t a, std::size_t b) const { return table_[a * roots_.size() + b]; }

  friend FiniteRootSystem build_finite(const RootSystemType& rst);

 private:
  RootSystemType type_;
  std::size_t dim_ = 0;
  std::vector<Vector> roots_;
  std::vector<LengthClass> classes_;
  LengthPartition part_;
  std::unordered_map<Vector, std::size_t, VectorHash> index_;
  std::vector<std::size_t> table_;
};

inline void check_admissible(const RootSystemType& t) {
  const std::size_t n = t.index_size;
  bool ok = false;
  switch (t.tag) {
    case RootType::A: ok = n >= 2; break;
    case RootType::B:
    case RootType::C:
    case RootType::BC: ok = n >= 1; break;
    case RootType::D: ok = n >= 2; break;
    case RootType::F4: ok = n == 4; break;
    case RootType::G2: ok = n == 2; break;
  }
  if (!ok)
    throw Error(ErrorKind::InadmissibleRank,
                std::string("index size ") + std::to_string(n) + " is not admissible for type " + type_name(t.tag));
}

inline FiniteRootSystem build_finite(const RootSystemType& rst) {
  check_admissible(rst);
  const std::size_t n = rst.index_size;
  const std::size_t dim = rst.coordinate_dim();
  std::set<Vector> roots;
  auto eps = [&](std::size_t i, std::int64_t c) { return Vector::epsilon(dim, 0, i, c); };
  auto add_A = [&] {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) roots.insert(eps(i, 1) - eps(j, 1));
  };
  auto add_D = [&] {
    add_A();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        roots.insert(eps(i, 1) + eps(j, 1));
        roots.insert(-(eps(i, 1) + eps(j, 1)));
      }
  };
  auto add_short = [&](std::int64_t c) {
    for (std::size_t i = 0; i < n; ++i) {
      roots.insert(eps(i, c));
      roots.insert(eps(i, -c));
    }
  };
  switch (rst.tag) {
    case RootType::A: add_A(); break;
    case RootType::D: add_D(); break;
    case RootType::B: add_D(); add_short(1); break;
    case RootType::C: add_D(); add_short(2); break;
    case RootType::BC: add_D(); add_short(1); add_short(2); break;
    case RootType::F4:
      add_D();
      add_short(1);
      for (int mask = 0; mask < 16; ++mask) {
        Vector v(dim, 0);
        for (std::size_t i = 0; i < 4; ++i) v.fin[i] = (mask >> i) & 1 ? 1 : -1;
        roots.insert(v);
      }
      break;
    case RootType::G2:
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
          if (i == j) continue;
          roots.insert(eps(i, 1) - eps(j, 1));
          const std::size_t k = 3 - i - j;
          const Vector lg = eps(i, 2) - eps(j, 1) - eps(k, 1);
          roots.insert(lg);
          roots.insert(-lg);
        }
      break;
  }
  FiniteRootSystem R;
  R.type_ = rst;
  R.dim_ = dim;
  R.roots_.push_back(Vector(dim, 0));
  for (const auto& r : roots)
    if (!r.is_zero()) R.roots_.push_back(r);
  for (std::size_t i = 0; i < R.roots_.size(); ++i) R.index_.emplace(R.roots_[i], i);

  std::int64_t min_len = 0;
  for (std::size_t i = 1; i < R.roots_.size(); ++i) {
    const auto l = form_numerator(R.roots_[i], R.roots_[i]);
    if (min_len == 0 || l < min_len) min_len = l;
  }
  R.classes_.assign(R.roots_.size(), LengthClass::Zero);
  std::int64_t long_len = 0;
  for (std::size_t i = 1; i < R.roots_.size(); ++i) {
    const Vector& r = R.roots_[i];
    const auto l = form_numerator(r, r);
    if (l == min_len) {
      R.classes_[i] = LengthClass::Short;
      R.part_.sh.push_back(i);
      continue;
    }
    bool twice_short = true;
    Vector half(dim, 0);
    for (std::size_t k = 0; k < dim; ++k) {
      if (r.fin[k] % 2 != 0) twice_short = false;
      half.fin[k] = r.fin[k] / 2;
    }
    if (twice_short && R.index_.count(half) && form_numerator(half, half) == min_len) {
      R.classes_[i] = LengthClass::ExtraLong;
      R.part_.ex.push_back(i);
    } else {
      R.classes_[i] = LengthClass::Long;
      R.part_.lg.push_back(i);
      long_len = l;
    }
  }
  R.part_.rho = R.part_.lg.empty() ? 1 : long_len / min_len;

  const std::size_t N = R.roots_.size();
  R.table_.assign(N * N, 0);
  for (std::size_t a = 1; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      auto idx = R.index_of(reflect(R.roots_[a], R.roots_[b]));
      if (!idx) throw Error(ErrorKind::ConditionViolated, "model is not closed under reflections", "R2");
      R.table_[a * N + b] = *idx;
    }
  return R;
}

inline LengthPartition length_partition(const FiniteRootSystem& R) { return R.partition(); }

/// Indices with nonzero finite coefficient; isotropic coordinates are ignored.
inline std::vector<std::size_t> supp(const Vector& a) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.fin.size(); ++i)
    if (a.fin[i] != 0) out.push_back(i);
  return out;
}

/// Connectivity of the graph with an edge wherever the form is nonzero.
inline bool is_connected(const std::vector<Vector>& P) {
  if (P.empty()) return true;
  std::vector<std::size_t> parent(P.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t comps = P.size();
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = i + 1; j < P.size(); ++j)
      if (form_numerator(P[i], P[j]) != 0) {
        auto a = find(i), b = find(j);
        if (a != b) {
          parent[a] = b;
          --comps;
        }
      }
  return comps == 1;
}

/// Identify the isomorphism type of an irreducible finite root set from its
/// size, rank and length classes.
inline std::optional<RootSystemType> classify_root_system(const std::vector<Vector>& nonzero_roots) {
  if (nonzero_roots.empty()) return std::nullopt;
  std::vector<Vector> fin;
  for (const auto& r : nonzero_roots) fin.push_back(r.finite_projection().embedded(r.finite_dim(), 0));
  const std::size_t N = fin.size();
  const std::size_t r = lattice_span(fin).rank();
  std::vector<std::int64_t> lens;
  for (const auto& v : fin) lens.push_back(form_numerator(v, v));
  std::vector<std::int64_t> distinct = lens;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  auto count_len = [&](std::int64_t l) {
    return static_cast<std::size_t>(std::count(lens.begin(), lens.end(), l));
  };
  if (distinct.size() == 1) {
    if (N == r * (r + 1)) return RootSystemType{RootType::A, r + 1};
    if (r >= 4 && N == 2 * r * (r - 1)) return RootSystemType{RootType::D, r};
    return std::nullopt;
  }
  if (distinct.size() == 2) {
    const std::int64_t ratio = distinct[1] / distinct[0];
    const std::size_t n_sh = count_len(distinct[0]), n_lg = count_len(distinct[1]);
    if (distinct[1] % distinct[0] != 0) return std::nullopt;
    if (ratio == 4 && r == 1 && N == 4) return RootSystemType{RootType::BC, 1};
    if (ratio == 3 && r == 2 && N == 12) return RootSystemType{RootType::G2, 2};
    if (ratio != 2) return std::nullopt;
    if (r == 4 && N == 48) return RootSystemType{RootType::F4, 4};
    if (N != 2 * r * r) return std::nullopt;
    if (n_sh == 2 * r) return RootSystemType{RootType::B, r};
    if (n_lg == 2 * r) return RootSystemType{RootType::C, r};
    return std::nullopt;
  }
  if (distinct.size() == 3 && N == 2 * r * (r + 1)) return RootSystemType{RootType::BC, r};
  return std::nullopt;
}

}  // namespace reflekta
