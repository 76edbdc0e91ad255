#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <unordered_set>
#include <vector>

#include "reflekta/errors.hpp"
#include "reflekta/root_system.hpp"
#include "reflekta/vector.hpp"

namespace reflekta {

/// Truncation of the isotropic coordinates: |iso_j| ≤ iso_bound.
struct Box {
  std::int64_t iso_bound = 8;
};

inline std::int64_t iso_norm(const Vector& v) {
  std::int64_t m = 0;
  for (auto c : v.iso) m = std::max(m, c < 0 ? -c : c);
  return m;
}

/// Read-only access to a root set R, finite or affine.
struct RootSetView {
  std::size_t finite_dim = 0;
  std::size_t nullity = 0;
  /// x ∈ R (isotropic roots included).
  std::function<bool(const Vector&)> contains;
  /// R× restricted to |iso| ≤ radius; all of R× when the nullity is 0.
  std::function<std::vector<Vector>(std::int64_t)> window;

  bool contains_nonisotropic(const Vector& x) const { return !is_isotropic(x) && contains(x); }
};

inline RootSetView view_of(const FiniteRootSystem& R) {
  RootSetView v;
  v.finite_dim = R.dim();
  v.nullity = 0;
  v.contains = [&R](const Vector& x) { return x.nullity() == 0 && R.contains(x); };
  v.window = [&R](std::int64_t) { return R.nonzero(); };
  return v;
}

struct OrbitClosureResult {
  std::vector<Vector> elements;
  bool saturated = true;
  std::size_t iterations = 0;
};

/// W_Π Π by a work queue; images leaving the box are dropped and clear
/// `saturated`.
inline OrbitClosureResult orbit_closure(const std::vector<Vector>& pi,
                                        const std::function<bool(const Vector&)>& in_rx, Box box) {
  if (pi.empty()) throw Error(ErrorKind::EmptyInput, "orbit closure of the empty set");
  for (const auto& p : pi) {
    if (!in_rx(p)) throw Error(ErrorKind::NotMember, p.str() + " is not a non-isotropic root");
    if (iso_norm(p) > box.iso_bound)
      throw Error(ErrorKind::HypothesisViolated, "box is smaller than the generators", "box");
  }
  std::unordered_set<Vector, VectorHash> seen(pi.begin(), pi.end());
  std::vector<Vector> queue(seen.begin(), seen.end());
  std::sort(queue.begin(), queue.end());
  OrbitClosureResult out;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    ++out.iterations;
    const Vector x = queue[head];
    for (const auto& p : pi) {
      Vector y = reflect(p, x);
      if (iso_norm(y) > box.iso_bound) {
        out.saturated = false;
        continue;
      }
      if (seen.count(y)) continue;
      if (!in_rx(y))
        throw Error(ErrorKind::ConditionViolated, "reflection left the root set at " + y.str(), "R2");
      seen.insert(y);
      queue.push_back(std::move(y));
    }
  }
  out.elements = std::move(queue);
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

inline OrbitClosureResult orbit_closure(const std::vector<Vector>& pi, const RootSetView& R, Box box) {
  return orbit_closure(pi, [&R](const Vector& x) { return R.contains_nonisotropic(x); }, box);
}

enum class BruteVerdict { Yes, No, Inconclusive };

inline const char* brute_name(BruteVerdict v) {
  switch (v) {
    case BruteVerdict::Yes: return "Yes";
    case BruteVerdict::No: return "No";
    case BruteVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

struct BruteOptions {
  Box box{8};
  /// Inner window radius is box.iso_bound − margin.
  std::int64_t margin = 8;
};

/// Index-based closure for a finite system; returns the closure as a mask.
inline std::vector<char> finite_closure_mask(const FiniteRootSystem& R, const std::vector<std::size_t>& idx) {
  std::vector<char> mask(R.size(), 0);
  std::vector<std::size_t> queue;
  for (auto i : idx)
    if (!mask[i]) {
      mask[i] = 1;
      queue.push_back(i);
    }
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (auto p : idx) {
      const auto y = R.reflection_index(p, queue[head]);
      if (!mask[y]) {
        mask[y] = 1;
        queue.push_back(y);
      }
    }
  return mask;
}

inline bool finite_closure_is_full(const FiniteRootSystem& R, const std::vector<std::size_t>& idx) {
  if (idx.empty()) return false;
  const auto mask = finite_closure_mask(R, idx);
  for (std::size_t i = 1; i < mask.size(); ++i)
    if (!mask[i]) return false;
  return true;
}

namespace detail {

inline std::vector<std::size_t> finite_indices(const std::vector<Vector>& pi, const FiniteRootSystem& R) {
  std::vector<std::size_t> idx;
  for (const auto& p : pi) {
    auto i = R.index_of(p);
    if (!i || *i == 0) throw Error(ErrorKind::NotMember, p.str() + " is not a nonzero root");
    idx.push_back(*i);
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

inline bool covers_window(const std::vector<Vector>& elements, const std::vector<Vector>& window) {
  std::unordered_set<Vector, VectorHash> have(elements.begin(), elements.end());
  for (const auto& w : window)
    if (!have.count(w)) return false;
  return true;
}

inline std::vector<Vector> restrict_to(const std::vector<Vector>& elements, std::int64_t radius) {
  std::vector<Vector> out;
  for (const auto& e : elements)
    if (iso_norm(e) <= radius) out.push_back(e);
  return out;
}

}  // namespace detail

inline BruteVerdict is_reflectable_set_bruteforce(const std::vector<Vector>& pi, const FiniteRootSystem& R) {
  return finite_closure_is_full(R, detail::finite_indices(pi, R)) ? BruteVerdict::Yes : BruteVerdict::No;
}

/// Closure against R×. Nullity 0 is exact. Otherwise the closure inside the
/// box is compared with R× on the inner window; a miss is a No when the
/// closure saturated, or when enlarging the box by the margin adds nothing
/// to the inner window, and Inconclusive otherwise.
inline BruteVerdict is_reflectable_set_bruteforce(const std::vector<Vector>& pi, const RootSetView& R,
                                                  BruteOptions opt = {}) {
  if (pi.empty()) return BruteVerdict::No;
  if (R.nullity == 0) {
    const auto c = orbit_closure(pi, R, opt.box);
    return detail::covers_window(c.elements, R.window(0)) ? BruteVerdict::Yes : BruteVerdict::No;
  }
  const std::int64_t inner = opt.box.iso_bound - opt.margin;
  if (inner < 0) throw Error(ErrorKind::HypothesisViolated, "margin exceeds the box", "box");
  const auto target = R.window(inner);
  const auto c = orbit_closure(pi, R, opt.box);
  if (detail::covers_window(c.elements, target)) return BruteVerdict::Yes;
  if (c.saturated) return BruteVerdict::No;
  const auto wider = orbit_closure(pi, R, Box{opt.box.iso_bound + opt.margin});
  if (detail::restrict_to(wider.elements, inner) == detail::restrict_to(c.elements, inner)) return BruteVerdict::No;
  return BruteVerdict::Inconclusive;
}

namespace detail {

template <class SetTest>
BruteVerdict base_from_set_test(const std::vector<Vector>& pi, SetTest&& test) {
  const BruteVerdict whole = test(pi);
  if (whole != BruteVerdict::Yes) return whole;
  bool unknown = false;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    std::vector<Vector> rest = pi;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    const BruteVerdict v = test(rest);
    if (v == BruteVerdict::Yes) return BruteVerdict::No;
    if (v == BruteVerdict::Inconclusive) unknown = true;
  }
  return unknown ? BruteVerdict::Inconclusive : BruteVerdict::Yes;
}

}  // namespace detail

/// Reflectable set from which no single element can be deleted. The input
/// is read as a set.
inline BruteVerdict is_reflectable_base_bruteforce(const std::vector<Vector>& pi, const FiniteRootSystem& R) {
  std::vector<Vector> dedup = pi;
  std::sort(dedup.begin(), dedup.end());
  dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
  return detail::base_from_set_test(dedup, [&R](const std::vector<Vector>& p) {
    return is_reflectable_set_bruteforce(p, R);
  });
}

inline BruteVerdict is_reflectable_base_bruteforce(const std::vector<Vector>& pi, const RootSetView& R,
                                                   BruteOptions opt = {}) {
  std::vector<Vector> dedup = pi;
  std::sort(dedup.begin(), dedup.end());
  dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
  return detail::base_from_set_test(dedup, [&R, opt](const std::vector<Vector>& p) {
    return is_reflectable_set_bruteforce(p, R, opt);
  });
}

struct RootString {
  std::int64_t d = 0;  // β − kα ∈ R for 0 ≤ k ≤ d
  std::int64_t u = 0;  // β + kα ∈ R for 0 ≤ k ≤ u
};

/// The α-string through β, checked to be unbroken with d − u = (β, α∨).
inline RootString root_string(const Vector& alpha, const Vector& beta,
                              const std::function<bool(const Vector&)>& in_R, std::int64_t scan = 8) {
  if (is_isotropic(alpha)) throw Error(ErrorKind::IsotropicReflection, "root string along an isotropic root");
  if (!in_R(beta)) throw Error(ErrorKind::NotMember, beta.str() + " is not a root");
  RootString s;
  while (s.d < scan && in_R(beta - (s.d + 1) * alpha)) ++s.d;
  while (s.u < scan && in_R(beta + (s.u + 1) * alpha)) ++s.u;
  for (std::int64_t k = s.d + 2; k <= scan; ++k)
    if (in_R(beta - k * alpha))
      throw Error(ErrorKind::BrokenString, "string of " + alpha.str() + " through " + beta.str() + " is broken");
  for (std::int64_t k = s.u + 2; k <= scan; ++k)
    if (in_R(beta + k * alpha))
      throw Error(ErrorKind::BrokenString, "string of " + alpha.str() + " through " + beta.str() + " is broken");
  if (s.d - s.u != cartan_integer(beta, alpha))
    throw Error(ErrorKind::BrokenString, "d - u differs from the Cartan integer for " + alpha.str() + ", " + beta.str());
  return s;
}

inline RootString root_string(const Vector& alpha, const Vector& beta, const RootSetView& R, std::int64_t scan = 8) {
  return root_string(alpha, beta, R.contains, scan);
}

}  // namespace reflekta
