#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "reflekta/errors.hpp"

namespace reflekta {

using Rational = boost::rational<long long>;

/// Element of A = finite part ⊕ Z^ν.
///
/// The finite part holds numerators over the fixed denominator 2, so ε_i is
/// stored as 2 and the F4 half-roots as ±1. The isotropic part holds plain
/// integer coefficients of σ_1..σ_ν.
class Vector {
 public:
  std::vector<std::int64_t> fin;
  std::vector<std::int64_t> iso;

  Vector() = default;
  Vector(std::size_t finite_dim, std::size_t nullity) : fin(finite_dim, 0), iso(nullity, 0) {}
  Vector(std::vector<std::int64_t> numerators, std::vector<std::int64_t> iso_part)
      : fin(std::move(numerators)), iso(std::move(iso_part)) {}

  /// coeff·ε_i (integral coefficient).
  static Vector epsilon(std::size_t finite_dim, std::size_t nullity, std::size_t i,
                        std::int64_t coeff = 1) {
    Vector v(finite_dim, nullity);
    v.fin.at(i) = 2 * coeff;
    return v;
  }

  /// coeff·σ_j.
  static Vector sigma(std::size_t finite_dim, std::size_t nullity, std::size_t j,
                      std::int64_t coeff = 1) {
    Vector v(finite_dim, nullity);
    v.iso.at(j) = coeff;
    return v;
  }

  /// Pure isotropic vector from integer coordinates.
  static Vector isotropic(std::size_t finite_dim, std::vector<std::int64_t> coords) {
    return Vector(std::vector<std::int64_t>(finite_dim, 0), std::move(coords));
  }

  std::size_t finite_dim() const noexcept { return fin.size(); }
  std::size_t nullity() const noexcept { return iso.size(); }
  std::size_t grid_dim() const noexcept { return fin.size() + iso.size(); }

  bool finite_is_zero() const noexcept {
    for (auto c : fin)
      if (c != 0) return false;
    return true;
  }
  bool is_zero() const noexcept {
    if (!finite_is_zero()) return false;
    for (auto c : iso)
      if (c != 0) return false;
    return true;
  }

  /// Finite projection (iso part dropped, nullity kept).
  Vector finite_projection() const { return Vector(fin, std::vector<std::int64_t>(iso.size(), 0)); }
  /// Isotropic projection as a nullity-only vector (no finite coordinates).
  Vector iso_projection() const { return Vector({}, iso); }

  /// Same vector re-embedded with different ambient dimensions; extra coordinates are zero.
  Vector embedded(std::size_t finite_dim, std::size_t nullity) const {
    Vector v(finite_dim, nullity);
    for (std::size_t i = 0; i < fin.size() && i < finite_dim; ++i) v.fin[i] = fin[i];
    for (std::size_t j = 0; j < iso.size() && j < nullity; ++j) v.iso[j] = iso[j];
    return v;
  }

  /// Concatenated grid coordinates (numerators then iso).
  std::vector<std::int64_t> grid() const {
    std::vector<std::int64_t> g(fin);
    g.insert(g.end(), iso.begin(), iso.end());
    return g;
  }

  Vector& operator+=(const Vector& o) {
    check_same(o);
    for (std::size_t i = 0; i < fin.size(); ++i) fin[i] += o.fin[i];
    for (std::size_t j = 0; j < iso.size(); ++j) iso[j] += o.iso[j];
    return *this;
  }
  Vector& operator-=(const Vector& o) {
    check_same(o);
    for (std::size_t i = 0; i < fin.size(); ++i) fin[i] -= o.fin[i];
    for (std::size_t j = 0; j < iso.size(); ++j) iso[j] -= o.iso[j];
    return *this;
  }
  Vector& operator*=(std::int64_t k) {
    for (auto& c : fin) c *= k;
    for (auto& c : iso) c *= k;
    return *this;
  }
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(std::int64_t k, Vector a) { return a *= k; }
  friend Vector operator-(Vector a) { return a *= -1; }

  friend bool operator==(const Vector&, const Vector&) = default;
  friend auto operator<=>(const Vector&, const Vector&) = default;

  void check_same(const Vector& o) const {
    if (fin.size() != o.fin.size() || iso.size() != o.iso.size())
      throw Error(ErrorKind::DimensionMismatch,
                  "vectors of shapes (" + std::to_string(fin.size()) + "," +
                      std::to_string(iso.size()) + ") and (" + std::to_string(o.fin.size()) +
                      "," + std::to_string(o.iso.size()) + ")");
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < fin.size(); ++i) {
      if (i) s += ",";
      if (fin[i] % 2 == 0)
        s += std::to_string(fin[i] / 2);
      else
        s += std::to_string(fin[i]) + "/2";
    }
    s += "|";
    for (std::size_t j = 0; j < iso.size(); ++j) {
      if (j) s += ",";
      s += std::to_string(iso[j]);
    }
    return s + ")";
  }
};

struct VectorHash {
  std::size_t operator()(const Vector& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ (v.fin.size() * 31 + v.iso.size());
    auto mix = [&h](std::int64_t c) {
      h ^= std::hash<std::int64_t>{}(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (auto c : v.fin) mix(c);
    for (auto c : v.iso) mix(c);
    return h;
  }
};

/// 4·(x, y): the form on numerators, kept integral.
inline std::int64_t form_numerator(const Vector& x, const Vector& y) {
  x.check_same(y);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.fin.size(); ++i) s += x.fin[i] * y.fin[i];
  return s;
}

/// The positive semidefinite form; isotropic parts pair to zero.
inline Rational form_eval(const Vector& x, const Vector& y) {
  return Rational(form_numerator(x, y), 4);
}

inline bool is_isotropic(const Vector& x) { return x.finite_is_zero(); }

/// 2(β, α)/(α, α), or 0 when α is isotropic.
inline std::int64_t cartan_integer(const Vector& beta, const Vector& alpha) {
  const std::int64_t aa = form_numerator(alpha, alpha);
  const std::int64_t ba = form_numerator(beta, alpha);
  if (aa == 0) return 0;
  if ((2 * ba) % aa != 0)
    throw Error(ErrorKind::NonIntegral,
                "2(b,a)/(a,a) is not an integer for b=" + beta.str() + ", a=" + alpha.str());
  return 2 * ba / aa;
}

/// w_α(β) = β − (β, α∨)α.
inline Vector reflect(const Vector& alpha, const Vector& beta) {
  if (is_isotropic(alpha))
    throw Error(ErrorKind::IsotropicReflection, "reflection in isotropic vector " + alpha.str());
  const std::int64_t c = cartan_integer(beta, alpha);
  Vector r = beta;
  if (c != 0) r -= c * alpha;
  return r;
}

}  // namespace reflekta
