#pragma once

// Command dispatch for the reflekta tool. Every command writes one JSON
// report and returns the process exit code.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "reflekta/affine_system.hpp"
#include "reflekta/deciders.hpp"
#include "reflekta/enumerator.hpp"
#include "reflekta/errors.hpp"
#include "reflekta/json_io.hpp"
#include "reflekta/parallel.hpp"
#include "reflekta/weyl.hpp"

namespace reflekta::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kFails = 1, kInvalid = 2, kInconclusive = 3 };

struct CommandRequest {
  std::string command;
  std::string system_path;
  std::string set_path;
  std::string data_path;
  std::string output = "-";
  bool base = false;
  bool integral = false;
  bool oracle = false;
  bool recheck = false;
  bool orbits = false;
  std::int64_t box = 8;
  std::int64_t margin = 8;
  std::size_t bound = 6;
  std::size_t max_size = 0;
  std::int64_t radius = 1;
  std::size_t selftest_samples = 200;
};

using nlohmann::json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path, path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what(), path + " byte " + std::to_string(e.byte));
  }
}

inline json_io::SystemSpec load_system(const std::string& path) {
  if (path.empty()) throw Error(ErrorKind::ParseError, "--system is required", "system");
  return json_io::system_from_json(read_json(path));
}

inline std::vector<Vector> load_set(const std::string& path, const json_io::SystemSpec& s) {
  if (path.empty()) throw Error(ErrorKind::ParseError, "--set is required", "set");
  return json_io::root_set_from_json(read_json(path), s.finite.dim(), s.nullity);
}

inline BruteOptions brute_options(const CommandRequest& r) { return BruteOptions{Box{r.box}, r.margin}; }

/// Decider verdict with the finite fast path when the nullity is 0.
inline Verdict decide(const json_io::SystemSpec& s, const std::vector<Vector>& pi) {
  if (s.nullity == 0) {
    std::vector<Vector> fin;
    for (const auto& p : pi) fin.push_back(Vector(p.fin, {}));
    return decide_locally_finite(s.finite, fin);
  }
  return decide_affine(s.affine, pi);
}

inline BruteVerdict brute(const json_io::SystemSpec& s, const std::vector<Vector>& pi, bool base,
                          const BruteOptions& opt) {
  if (s.nullity == 0) {
    std::vector<Vector> fin;
    for (const auto& p : pi) fin.push_back(Vector(p.fin, {}));
    return base ? is_reflectable_base_bruteforce(fin, s.finite) : is_reflectable_set_bruteforce(fin, s.finite);
  }
  const RootSetView v = s.affine.view();
  return base ? is_reflectable_base_bruteforce(pi, v, opt) : is_reflectable_set_bruteforce(pi, v, opt);
}

inline json header(const std::string& command) { return {{"tool", "reflekta"}, {"version", kVersion}, {"command", command}}; }

inline int cmd_construct(const CommandRequest& r, json& rep) {
  const auto s = load_system(r.system_path);
  rep["system"] = json_io::to_json(s);
  const auto win = s.affine.window(r.radius);
  const auto audit = audit_axioms(s.affine.view(), r.radius);
  rep["window"] = {{"radius", r.radius},
                   {"nonisotropic", win.size()},
                   {"isotropic", s.affine.isotropic_window(r.radius).size()}};
  rep["audit"] = {{"pairs_checked", audit.pairs_checked},
                  {"string_violations", audit.string_violations},
                  {"reflection_violations", audit.reflection_violations},
                  {"negation_violations", audit.negation_violations},
                  {"tameness_violations", audit.tameness_violations}};
  return audit.clean() ? kOk : kFails;
}

inline int cmd_check(const CommandRequest& r, json& rep) {
  const auto s = load_system(r.system_path);
  const auto pi = load_set(r.set_path, s);
  const Verdict v = decide(s, pi);
  rep["system"] = s.type.str();
  rep["verdict"] = json_io::to_json(v);
  if (v.outcome == Outcome::Unsupported) {
    rep["property"] = {{"holds", false}, {"reason", v.certificate.note}};
    return kInvalid;
  }
  bool holds = r.base ? v.is_base() : v.is_set();
  std::string requested = r.base ? "reflectable base" : "reflectable set";
  if (r.integral) {
    const Lattice span = s.nullity == 0 ? lattice_span(s.finite.nonzero()) : s.affine.span();
    std::vector<Vector> pts = v.certificate.input;
    if (pts.empty()) pts = pi;
    const bool integral = is_integral_base(pts, span);
    rep["integral_base"] = integral;
    holds = r.base ? (holds && integral) : integral;
    requested = r.base ? "integral reflectable base" : "integral base";
  }
  rep["property"] = {{"requested", requested}, {"holds", holds}};
  int code = holds ? kOk : kFails;
  if (r.recheck) {
    const auto rc = recheck_certificate(v);
    rep["recheck"] = {{"consistent", rc.consistent}, {"records_checked", rc.records_checked},
                      {"mismatches", rc.mismatches}};
    if (!rc.consistent) code = kFails;
  }
  if (r.oracle) {
    const BruteVerdict b = brute(s, pi, r.base, brute_options(r));
    const bool decider = r.base ? v.is_base() : v.is_set();
    rep["oracle"] = {{"verdict", brute_name(b)}, {"box", r.box}, {"margin", r.margin}};
    if (b == BruteVerdict::Inconclusive) {
      rep["oracle"]["agrees"] = nullptr;
      return code == kOk ? kInconclusive : code;
    }
    const bool agrees = (b == BruteVerdict::Yes) == decider;
    rep["oracle"]["agrees"] = agrees;
    if (!agrees) code = kFails;
  }
  return code;
}

inline int cmd_oracle(const CommandRequest& r, json& rep) {
  const auto s = load_system(r.system_path);
  const auto pi = load_set(r.set_path, s);
  const BruteVerdict set = brute(s, pi, false, brute_options(r));
  const BruteVerdict base = brute(s, pi, true, brute_options(r));
  rep["system"] = s.type.str();
  rep["oracle"] = {{"set", brute_name(set)}, {"base", brute_name(base)}, {"box", r.box}, {"margin", r.margin}};
  const BruteVerdict asked = r.base ? base : set;
  if (asked == BruteVerdict::Inconclusive) return kInconclusive;
  return asked == BruteVerdict::Yes ? kOk : kFails;
}

inline int cmd_orbit(const CommandRequest& r, json& rep) {
  const auto s = load_system(r.system_path);
  const auto pi = load_set(r.set_path, s);
  rep["system"] = s.type.str();
  const RootSetView view = s.affine.view();
  const auto c = orbit_closure(pi, view, Box{r.box});
  const auto all = s.affine.window(r.box);
  rep["orbit"] = {{"size", c.elements.size()},      {"saturated", c.saturated},
                  {"iterations", c.iterations},     {"box", r.box},
                  {"roots_in_box", all.size()},     {"covers_box", c.elements.size() == all.size()},
                  {"elements", json_io::to_json(c.elements)}};
  return kOk;
}

inline int cmd_enumerate(const CommandRequest& r, json& rep) {
  const auto s = load_system(r.system_path);
  EnumerationLimits lim;
  lim.max_size = r.max_size;
  lim.window_radius = r.radius;
  BaseCatalog cat;
  if (s.nullity == 0) {
    cat = enumerate_reflectable_bases(s.finite, lim);
    if (r.orbits) weyl_orbits(cat, s.finite);
  } else {
    cat = enumerate_reflectable_bases(s.affine, lim);
    if (r.orbits) weyl_orbits(cat, s.affine, r.bound, r.radius);
  }
  rep["catalog"] = json_io::to_json(cat);
  if (s.nullity > 0) rep["catalog"]["window_radius"] = r.radius;
  return kOk;
}

inline int cmd_generate(const CommandRequest& r, json& rep) {
  if (r.data_path.empty()) throw Error(ErrorKind::ParseError, "--data is required", "data");
  const json d = read_json(r.data_path);
  if (!d.contains("system")) throw Error(ErrorKind::ParseError, "data file needs a 'system' object", "system");
  const auto s = json_io::system_from_json(d["system"]);
  const ReflectableData data = json_io::data_from_json(d, s.affine);
  const auto pi = construct_reflectable_set(s.affine, data);
  rep["system"] = s.type.str();
  rep["set"] = json_io::to_json(pi);
  rep["verdict"] = json_io::to_json(decide_affine(s.affine, pi));
  return kOk;
}

/// Oracle equivalence at reduced scale.
inline int cmd_selftest(const CommandRequest& r, json& rep) {
  json cases = json::array();
  std::size_t disagreements = 0, total = 0;
  auto finite_case = [&](RootSystemType t, std::size_t max_k) {
    const auto R = build_finite(t);
    const LocallyFiniteDecider dec(R);
    const auto roots = R.nonzero();
    std::size_t n = 0, bad = 0;
    for (std::size_t k = 1; k <= max_k; ++k)
      detail::for_each_combination(roots.size(), k, [&](const std::vector<std::size_t>& idx) {
        std::vector<Vector> pi;
        for (auto i : idx) pi.push_back(roots[i]);
        const Verdict v = dec.decide(pi);
        const BruteVerdict base = is_reflectable_base_bruteforce(pi, R);
        const BruteVerdict set = is_reflectable_set_bruteforce(pi, R);
        ++n;
        if (v.is_set() != (set == BruteVerdict::Yes) || v.is_base() != (base == BruteVerdict::Yes)) ++bad;
      });
    cases.push_back({{"system", t.str()}, {"subsets", n}, {"disagreements", bad}});
    total += n;
    disagreements += bad;
  };
  finite_case({RootType::A, 3}, 4);
  finite_case({RootType::B, 2}, 4);
  finite_case({RootType::G2, 2}, 4);
  finite_case({RootType::B, 3}, 3);
  finite_case({RootType::C, 3}, 3);

  std::size_t inconclusive = 0;
  auto affine_case = [&](RootSystemType t, std::int64_t Lk) {
    const auto base = build_finite(t);
    std::optional<CosetSet> L;
    if (Lk) L = CosetSet::multiples(1, Lk);
    const auto A = build_affine(base, 1, CosetSet::whole(1), L, std::nullopt);
    const AffineDecider dec(A);
    const auto win = A.window(2);
    const auto view = A.view();
    std::mt19937_64 rng(12345);
    std::size_t bad = 0, inc = 0;
    for (std::size_t it = 0; it < r.selftest_samples; ++it) {
      const std::size_t k = 1 + rng() % (base.rank() + 3);
      std::vector<Vector> pi;
      for (std::size_t i = 0; i < k; ++i) pi.push_back(win[rng() % win.size()]);
      const Verdict v = dec.decide(pi);
      const BruteVerdict b = is_reflectable_set_bruteforce(pi, view, BruteOptions{Box{10}, 8});
      if (b == BruteVerdict::Inconclusive)
        ++inc;
      else if ((b == BruteVerdict::Yes) != v.is_set())
        ++bad;
    }
    cases.push_back({{"system", t.str() + " nullity 1"}, {"subsets", r.selftest_samples}, {"disagreements", bad},
                     {"inconclusive", inc}});
    total += r.selftest_samples;
    disagreements += bad;
    inconclusive += inc;
  };
  affine_case({RootType::A, 2}, 0);
  affine_case({RootType::B, 2}, 2);
  affine_case({RootType::B, 3}, 1);
  rep["selftest"] = {{"cases", cases}, {"checked", total}, {"disagreements", disagreements},
                     {"inconclusive", inconclusive}, {"passed", disagreements == 0}};
  return disagreements == 0 ? kOk : kFails;
}

inline void write_report(const json& rep, const std::string& output, std::ostream& out) {
  const std::string text = rep.dump(2) + "\n";
  if (output.empty() || output == "-") {
    out << text;
    return;
  }
  std::ofstream f(output);
  if (!f) throw Error(ErrorKind::ParseError, "cannot write " + output, "output");
  f << text;
}

/// Runs one command; errors become a report with exit code 2.
inline int run(const CommandRequest& r, std::ostream& out = std::cout) {
  json rep = header(r.command);
  int code = kInvalid;
  try {
    if (r.command == "construct")
      code = cmd_construct(r, rep);
    else if (r.command == "check")
      code = cmd_check(r, rep);
    else if (r.command == "orbit")
      code = cmd_orbit(r, rep);
    else if (r.command == "enumerate")
      code = cmd_enumerate(r, rep);
    else if (r.command == "generate")
      code = cmd_generate(r, rep);
    else if (r.command == "oracle")
      code = cmd_oracle(r, rep);
    else if (r.command == "selftest")
      code = cmd_selftest(r, rep);
    else
      throw Error(ErrorKind::ParseError, "unknown command '" + r.command + "'", "command");
  } catch (const Error& e) {
    rep["error"] = {{"kind", kind_name(e.kind())}, {"message", e.what()}, {"detail", e.detail()}};
    code = kInvalid;
  }
  rep["exit_code"] = code;
  try {
    write_report(rep, r.output, out);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kInvalid;
  }
  return code;
}

}  // namespace reflekta::cli
