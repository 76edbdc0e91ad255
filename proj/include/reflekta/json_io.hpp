#pragma once

// JSON encoding of vectors, lattices, coset sets, systems, verdicts and
// catalogs. Finite coordinates are numerators over 2 on the ε grid,
// isotropic coordinates plain integers.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "reflekta/affine_system.hpp"
#include "reflekta/deciders.hpp"
#include "reflekta/enumerator.hpp"
#include "reflekta/errors.hpp"
#include "reflekta/lattice.hpp"
#include "reflekta/root_system.hpp"
#include "reflekta/vector.hpp"
#include "reflekta/weyl.hpp"

namespace reflekta::json_io {

using nlohmann::json;

inline Error parse_error(const std::string& field, const std::string& what) {
  return Error(ErrorKind::ParseError, what, field);
}

/// {"finite": {"i": numerator over 2, ...}, "iso": [...]} with 0-based keys
/// and only nonzero numerators listed.
inline json to_json(const Vector& v) {
  json fin = json::object();
  for (std::size_t i = 0; i < v.fin.size(); ++i)
    if (v.fin[i] != 0) fin[std::to_string(i)] = v.fin[i];
  return {{"finite", fin}, {"iso", v.iso}};
}

inline std::vector<std::int64_t> int_list(const json& j, const std::string& field) {
  if (!j.is_array()) throw parse_error(field, "expected an array of integers");
  std::vector<std::int64_t> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw parse_error(field, "expected integers");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

/// ε-coefficient given as an integer, a half-integer number or "p/2".
inline std::int64_t numerator_of(const json& j, const std::string& field) {
  if (j.is_number_integer()) return 2 * j.get<std::int64_t>();
  if (j.is_number_float()) {
    const double x = 2.0 * j.get<double>();
    if (std::abs(x - std::round(x)) > 1e-9) throw parse_error(field, "coefficient is not a multiple of 1/2");
    return static_cast<std::int64_t>(std::llround(x));
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return 2 * std::stoll(s);
      const std::int64_t num = std::stoll(s.substr(0, slash)), den = std::stoll(s.substr(slash + 1));
      if (den == 1) return 2 * num;
      if (den == 2) return num;
    } catch (const std::exception&) {
    }
    throw parse_error(field, "bad coefficient '" + s + "'");
  }
  throw parse_error(field, "coefficient must be a number");
}

/// Accepts the serialized form {"finite": {...}, "iso": [...]}, the dense
/// form {"fin": [ε-coefficients], "iso": [...]}, or a flat array of n + ν
/// coordinates (ε-coefficients first).
inline Vector vector_from_json(const json& j, std::size_t n, std::size_t nu, const std::string& field) {
  Vector v(n, nu);
  if (j.is_object()) {
    const json iso = j.value("iso", json::array());
    if (!iso.is_array() || iso.size() != nu)
      throw parse_error(field, "expected " + std::to_string(nu) + " isotropic coordinates");
    v.iso = int_list(iso, field);
    if (j.contains("finite")) {
      if (!j["finite"].is_object()) throw parse_error(field, "'finite' must map indices to numerators");
      for (const auto& [key, val] : j["finite"].items()) {
        std::size_t i = 0;
        try {
          std::size_t pos = 0;
          i = std::stoul(key, &pos);
          if (pos != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
          throw parse_error(field, "bad finite index '" + key + "'");
        }
        if (i >= n) throw parse_error(field, "finite index " + key + " out of range");
        if (!val.is_number_integer()) throw parse_error(field, "numerators must be integers");
        v.fin[i] = val.get<std::int64_t>();
      }
      return v;
    }
    const json fin = j.value("fin", json::array());
    if (!fin.is_array() || fin.size() != n)
      throw parse_error(field, "expected " + std::to_string(n) + " finite coordinates");
    for (std::size_t i = 0; i < n; ++i) v.fin[i] = numerator_of(fin[i], field);
    return v;
  }
  if (j.is_array()) {
    if (j.size() != n + nu) throw parse_error(field, "expected " + std::to_string(n + nu) + " coordinates");
    for (std::size_t i = 0; i < n; ++i) v.fin[i] = numerator_of(j[i], field);
    for (std::size_t i = 0; i < nu; ++i) {
      if (!j[n + i].is_number_integer()) throw parse_error(field, "isotropic coordinates must be integers");
      v.iso[i] = j[n + i].get<std::int64_t>();
    }
    return v;
  }
  throw parse_error(field, "expected a vector");
}

inline json to_json(const std::vector<Vector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

inline std::vector<Vector> vectors_from_json(const json& j, std::size_t n, std::size_t nu, const std::string& field) {
  if (!j.is_array()) throw parse_error(field, "expected an array of vectors");
  std::vector<Vector> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(vector_from_json(j[i], n, nu, field + "[" + std::to_string(i) + "]"));
  return out;
}

inline json to_json(const Lattice& L) {
  json rows = json::array();
  for (const auto& r : L.basis()) {
    json row = json::array();
    for (const auto& x : r) row.push_back(to_i64(x));
    rows.push_back(row);
  }
  return {{"dim", L.ambient_dim()}, {"basis", rows}};
}

inline json to_json(const CosetSet& X) {
  return {{"modulus", to_json(X.modulus)["basis"]}, {"reps", to_json(X.reps)},
          {"pointed", X.pointed}, {"symmetric", X.symmetric}};
}

/// A coset set in Z^ν: "Z", "kZ", "0", or {"modulus": rows, "reps": [...]}.
/// With ν ≥ 2 the strings mean the whole group, k·Z^ν and {0}.
inline CosetSet coset_set_from_json(const json& j, std::size_t nu, const std::string& field) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "0") return CosetSet::zero(nu);
    if (s == "Z") return CosetSet::whole(nu);
    if (s.size() >= 2 && s.back() == 'Z') {
      try {
        const std::int64_t k = std::stoll(s.substr(0, s.size() - 1));
        if (k > 0) return CosetSet::multiples(nu, k);
      } catch (const std::exception&) {
      }
    }
    throw parse_error(field, "unknown coset set shorthand '" + s + "'");
  }
  if (!j.is_object()) throw parse_error(field, "expected a coset set");
  if (!j.contains("reps")) throw parse_error(field, "missing 'reps'");
  BigMatrix rows;
  if (j.contains("modulus")) {
    if (!j["modulus"].is_array()) throw parse_error(field + ".modulus", "expected rows");
    for (const auto& r : j["modulus"]) {
      const auto row = int_list(r, field + ".modulus");
      if (row.size() != nu) throw parse_error(field + ".modulus", "row length differs from the nullity");
      rows.push_back(to_big(row));
    }
  }
  if (!j["reps"].is_array()) throw parse_error(field + ".reps", "expected an array");
  std::vector<Vector> reps;
  for (const auto& r : j["reps"]) {
    if (r.is_number_integer() && nu == 1) {
      reps.push_back(Vector(std::vector<std::int64_t>{}, {r.get<std::int64_t>()}));
      continue;
    }
    reps.push_back(vector_from_json(r, 0, nu, field + ".reps"));
  }
  const bool pointed = j.value("pointed", false), symmetric = j.value("symmetric", false);
  return CosetSet(0, nu, Lattice::from_rows(nu, std::move(rows)), std::move(reps), pointed, symmetric);
}

/// A parsed system: finite when the nullity is 0 and no data is given.
struct SystemSpec {
  RootSystemType type;
  std::size_t nullity = 0;
  FiniteRootSystem finite;
  AffineReflectionSystem affine;
};

inline RootSystemType type_from_json(const json& j) {
  if (!j.contains("type") || !j["type"].is_string()) throw parse_error("type", "missing type");
  const std::string name = j["type"].get<std::string>();
  const auto tag = parse_type_name(name);
  if (!tag) throw Error(ErrorKind::Unsupported, "type '" + name + "' is not supported", "type");
  std::size_t rank = 0;
  if (j.contains("rank")) {
    if (!j["rank"].is_number_integer() || j["rank"].get<std::int64_t>() < 1)
      throw parse_error("rank", "rank must be a positive integer");
    rank = j["rank"].get<std::size_t>();
  } else if (*tag == RootType::F4) {
    rank = 4;
  } else if (*tag == RootType::G2) {
    rank = 2;
  } else {
    throw parse_error("rank", "missing rank");
  }
  RootSystemType t{*tag, rank};
  check_admissible(t);
  return t;
}

inline SystemSpec system_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("", "system spec must be an object");
  SystemSpec s;
  s.type = type_from_json(j);
  if (j.contains("nullity")) {
    if (!j["nullity"].is_number_integer() || j["nullity"].get<std::int64_t>() < 0)
      throw parse_error("nullity", "nullity must be a non-negative integer");
    s.nullity = j["nullity"].get<std::size_t>();
  }
  s.finite = build_finite(s.type);
  auto opt = [&](const char* key) -> std::optional<CosetSet> {
    if (!j.contains(key) || j[key].is_null()) return std::nullopt;
    return coset_set_from_json(j[key], s.nullity, key);
  };
  std::optional<CosetSet> S = opt("S");
  if (!S) {
    if (s.nullity != 0) throw parse_error("S", "S is required for positive nullity");
    S = CosetSet::zero(0);
  }
  s.affine = build_affine(s.finite, s.nullity, *S, opt("L"), opt("E"));
  return s;
}

inline SystemSpec parse_system_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what(), "byte " + std::to_string(e.byte));
  }
  return system_from_json(j);
}

inline json to_json(const SystemSpec& s) {
  json j{{"type", type_name(s.type.tag)}, {"rank", s.type.index_size}, {"nullity", s.nullity},
         {"name", s.type.str()}, {"S", to_json(s.affine.S())}};
  j["L"] = s.affine.L() ? to_json(*s.affine.L()) : json(nullptr);
  j["E"] = s.affine.E() ? to_json(*s.affine.E()) : json(nullptr);
  return j;
}

/// {"roots": [...]} or a bare array.
inline std::vector<Vector> root_set_from_json(const json& j, std::size_t n, std::size_t nu) {
  if (j.is_object() && j.contains("roots")) return vectors_from_json(j["roots"], n, nu, "roots");
  return vectors_from_json(j, n, nu, "roots");
}

inline json to_json(const ConditionRecord& r) {
  json j{{"kind", condition_name(r.kind)}, {"label", r.label}, {"holds", r.holds}, {"subset", to_json(r.subset)}};
  if (r.kind == ConditionKind::Generation || r.kind == ConditionKind::CosetSpanning ||
      r.kind == ConditionKind::StrongCosetSpanning) {
    j["rank"] = r.rank;
    j["dimension"] = r.dimension;
  }
  if (!r.partner.empty()) j["partner"] = to_json(r.partner);
  if (r.target) j["target"] = to_json(*r.target);
  if (r.modulus) j["modulus"] = to_json(*r.modulus);
  if (r.cosets) j["cosets"] = to_json(*r.cosets);
  if (!r.uncovered.empty()) j["uncovered"] = to_json(r.uncovered);
  return j;
}

inline json to_json(const Verdict& v) {
  const Certificate& c = v.certificate;
  json conds = json::array(), dels = json::array();
  for (const auto& r : c.conditions) conds.push_back(to_json(r));
  for (const auto& d : c.deletions) {
    json dj{{"removed", to_json(d.removed)}, {"conditions", json::array()}};
    for (const auto& r : d.conditions) dj["conditions"].push_back(to_json(r));
    dels.push_back(dj);
  }
  json cert{{"system", c.system}, {"rule", c.rule}, {"input", to_json(c.input)}, {"conditions", conds},
            {"deletions", dels}};
  if (c.sub_base) cert["sub_base"] = to_json(*c.sub_base);
  if (!c.note.empty()) cert["note"] = c.note;
  return {{"outcome", outcome_name(v.outcome)}, {"certificate", cert}};
}

inline json to_json(const BaseCatalog& c) {
  json bases = json::array();
  for (const auto& b : c.bases) bases.push_back(to_json(b));
  json j{{"system", c.system}, {"count", c.bases.size()}, {"complete", c.complete}, {"bases", bases}};
  if (!c.orbit_partition.empty()) {
    j["orbit_partition"] = c.orbit_partition;
    j["orbit_count"] = c.orbit_count;
    j["generator_bound"] = c.generator_bound;
    j["orbits_are_refinement"] = c.orbits_are_refinement;
  }
  return j;
}

inline ReflectableData data_from_json(const json& j, const AffineReflectionSystem& R) {
  const std::size_t n = R.finite_dim(), nu = R.nullity();
  ReflectableData d;
  auto iso_list = [&](const char* key) {
    std::vector<Vector> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array()) throw parse_error(key, "expected an array");
    for (const auto& x : j[key]) {
      std::vector<std::int64_t> g = x.is_array() ? int_list(x, key) : std::vector<std::int64_t>{};
      if (!x.is_array()) {
        if (nu != 1 || !x.is_number_integer()) throw parse_error(key, "expected isotropic vectors");
        g = {x.get<std::int64_t>()};
      }
      if (g.size() != nu) throw parse_error(key, "isotropic vector length differs from the nullity");
      out.push_back(Vector(std::vector<std::int64_t>{}, g));
    }
    return out;
  };
  auto fin_list = [&](const char* key) {
    if (!j.contains(key)) return std::vector<Vector>{};
    return vectors_from_json(j[key], n, 0, key);
  };
  d.short_points = fin_list("short_points");
  d.strong_set = iso_list("strong_set");
  d.long_points = fin_list("long_points");
  d.spanning_set = iso_list("spanning_set");
  d.finite_long = fin_list("finite_long");
  return d;
}

}  // namespace reflekta::json_io
