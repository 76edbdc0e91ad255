#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "reflekta/affine_system.hpp"
#include "reflekta/coset_set.hpp"
#include "reflekta/errors.hpp"
#include "reflekta/gf.hpp"
#include "reflekta/lattice.hpp"
#include "reflekta/root_system.hpp"
#include "reflekta/vector.hpp"

namespace reflekta {

enum class Outcome { ReflectableBase, ReflectableSetNotBase, NotReflectableSet, Unsupported };

inline const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::ReflectableBase: return "ReflectableBase";
    case Outcome::ReflectableSetNotBase: return "ReflectableSetNotBase";
    case Outcome::NotReflectableSet: return "NotReflectableSet";
    case Outcome::Unsupported: return "Unsupported";
  }
  return "?";
}

enum class ConditionKind { Generation, CosetSpanning, StrongCosetSpanning, Nonempty, Connected, NonorthogonalPair };

inline const char* condition_name(ConditionKind k) {
  switch (k) {
    case ConditionKind::Generation: return "generation";
    case ConditionKind::CosetSpanning: return "coset_spanning";
    case ConditionKind::StrongCosetSpanning: return "strong_coset_spanning";
    case ConditionKind::Nonempty: return "nonempty";
    case ConditionKind::Connected: return "connected";
    case ConditionKind::NonorthogonalPair: return "nonorthogonal_pair";
  }
  return "?";
}

/// One checked condition with the data needed to re-check it.
///
/// Generation: span(subset) == target. CosetSpanning: the image of subset
/// spans target/modulus (rank == dimension). StrongCosetSpanning: subset
/// meets every modulus-coset that meets `cosets`. Nonempty, Connected and
/// NonorthogonalPair (one short, one long root with nonzero pairing) read
/// only the subset, with NonorthogonalPair using `partner` for the long part.
struct ConditionRecord {
  ConditionKind kind = ConditionKind::Nonempty;
  std::string label;
  std::vector<Vector> subset;
  std::vector<Vector> partner;
  std::optional<Lattice> target;
  std::optional<Lattice> modulus;
  std::optional<CosetSet> cosets;
  bool holds = false;
  std::size_t rank = 0;
  std::size_t dimension = 0;
  std::vector<Vector> uncovered;
};

struct DeletionRecord {
  Vector removed;
  std::vector<ConditionRecord> conditions;
  bool set_criterion_holds() const {
    return std::all_of(conditions.begin(), conditions.end(), [](const auto& c) { return c.holds; });
  }
};

struct Certificate {
  std::string system;
  std::string rule;
  /// The deduplicated input set.
  std::vector<Vector> input;
  std::vector<ConditionRecord> conditions;
  /// Base: one failing record per element. Set but not base: one deletion
  /// whose conditions all hold.
  std::vector<DeletionRecord> deletions;
  std::optional<std::vector<Vector>> sub_base;
  std::string note;
};

struct Verdict {
  Outcome outcome = Outcome::NotReflectableSet;
  Certificate certificate;
  bool is_set() const { return outcome == Outcome::ReflectableBase || outcome == Outcome::ReflectableSetNotBase; }
  bool is_base() const { return outcome == Outcome::ReflectableBase; }
};

namespace detail {

inline std::vector<Vector> dedup(std::vector<Vector> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline bool all_hold(const std::vector<ConditionRecord>& c) {
  return std::all_of(c.begin(), c.end(), [](const auto& r) { return r.holds; });
}

inline ConditionRecord nonempty_record(std::string label, std::vector<Vector> subset) {
  ConditionRecord r;
  r.kind = ConditionKind::Nonempty;
  r.label = std::move(label);
  r.holds = !subset.empty();
  r.subset = std::move(subset);
  return r;
}

inline ConditionRecord connected_record(std::vector<Vector> subset) {
  ConditionRecord r;
  r.kind = ConditionKind::Connected;
  r.label = "connected";
  r.holds = !subset.empty() && is_connected(subset);
  r.subset = std::move(subset);
  return r;
}

inline bool has_nonorthogonal_pair(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  for (const auto& x : a)
    for (const auto& y : b)
      if (form_numerator(x, y) != 0) return true;
  return false;
}

inline ConditionRecord generation_record(std::vector<Vector> subset, const Lattice& target, std::size_t n,
                                         std::size_t nu) {
  ConditionRecord r;
  r.kind = ConditionKind::Generation;
  r.label = "span equals root lattice";
  const Lattice got = lattice_span(subset, n, nu);
  r.holds = got == target;
  r.rank = got.rank();
  r.dimension = target.rank();
  r.subset = std::move(subset);
  r.target = target;
  return r;
}

inline ConditionRecord spanning_record(std::string label, std::vector<Vector> subset, const Lattice& K,
                                       const Lattice& H) {
  ConditionRecord r;
  r.kind = ConditionKind::CosetSpanning;
  r.label = std::move(label);
  const CosetRank cr = coset_rank(subset, K, H);
  r.rank = cr.rank;
  r.dimension = cr.dimension;
  r.holds = cr.rank == cr.dimension;
  r.subset = std::move(subset);
  r.target = K;
  r.modulus = H;
  return r;
}

inline ConditionRecord strong_record(std::string label, std::vector<Vector> subset, const CosetSet& K,
                                     const Lattice& H) {
  ConditionRecord r;
  r.kind = ConditionKind::StrongCosetSpanning;
  r.label = std::move(label);
  StrongCoverage cov = strong_coverage(subset, K, H);
  r.holds = cov.holds;
  r.dimension = cov.cosets_meeting_K;
  r.rank = cov.cosets_meeting_K - cov.uncovered.size();
  r.uncovered = std::move(cov.uncovered);
  r.subset = std::move(subset);
  r.cosets = K;
  r.modulus = H;
  return r;
}

/// Drives the base test from a set criterion: Π is a base iff the criterion
/// holds and fails after deleting any single element.
template <class Criterion>
Verdict decide_by_deletion(std::vector<Vector> pi, Certificate cert, Criterion&& criterion) {
  Verdict v;
  cert.input = pi;
  cert.conditions = criterion(pi);
  if (!all_hold(cert.conditions)) {
    v.outcome = Outcome::NotReflectableSet;
    v.certificate = std::move(cert);
    return v;
  }
  std::vector<DeletionRecord> dels;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    std::vector<Vector> rest = pi;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    DeletionRecord d{pi[i], criterion(rest)};
    if (d.set_criterion_holds()) {
      v.outcome = Outcome::ReflectableSetNotBase;
      cert.deletions = {std::move(d)};
      bool progress = true;
      while (progress) {
        progress = false;
        for (std::size_t j = 0; j < rest.size() && !progress; ++j) {
          std::vector<Vector> smaller = rest;
          smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(j));
          if (all_hold(criterion(smaller))) {
            rest = std::move(smaller);
            progress = true;
          }
        }
      }
      cert.sub_base = std::move(rest);
      v.certificate = std::move(cert);
      return v;
    }
    // Keep only the first failing record; it is enough to re-check.
    auto failed = std::find_if(d.conditions.begin(), d.conditions.end(), [](const auto& c) { return !c.holds; });
    ConditionRecord keep = std::move(*failed);
    d.conditions.clear();
    d.conditions.push_back(std::move(keep));
    dels.push_back(std::move(d));
  }
  v.outcome = Outcome::ReflectableBase;
  cert.deletions = std::move(dels);
  v.certificate = std::move(cert);
  return v;
}

inline Verdict unsupported(const std::string& system, const std::string& why) {
  Verdict v;
  v.outcome = Outcome::Unsupported;
  v.certificate.system = system;
  v.certificate.note = why;
  return v;
}

}  // namespace detail

/// Number of nontrivial elementary divisors of outer/inner, all equal to p.
inline std::size_t quotient_dimension(const Lattice& outer, const Lattice& inner, std::int64_t p) {
  const auto q = smith_quotient(outer, inner);
  if (!q.is_finite()) throw Error(ErrorKind::InfiniteQuotient, "quotient is infinite");
  for (const auto& d : q.divisors())
    if (d != p) throw Error(ErrorKind::BadPrimeStructure, "quotient is not elementary of exponent " + std::to_string(p));
  return q.divisors().size();
}

/// dim(⟨Ṙ_sh⟩/⟨Ṙ_lg⟩) + dim(⟨Ṙ_lg⟩/ρ⟨Ṙ_sh⟩), checked against the rank.
inline std::size_t expected_base_cardinality(const FiniteRootSystem& R) {
  if (R.simply_laced()) throw Error(ErrorKind::SimplyLaced, R.type().str() + " is simply laced");
  if (!R.partition().ex.empty()) throw Error(ErrorKind::Unsupported, "non-reduced type " + R.type().str());
  const Lattice sh = lattice_span(R.roots_of(LengthClass::Short));
  const Lattice lg = lattice_span(R.roots_of(LengthClass::Long));
  const std::int64_t rho = R.rho();
  const std::size_t total = quotient_dimension(sh, lg, rho) + quotient_dimension(lg, sh.scaled(rho), rho);
  if (total != R.rank())
    throw Error(ErrorKind::ConditionViolated, "two-quotient count " + std::to_string(total) + " differs from rank");
  return total;
}

/// |Π| = rank(A) and Π spans A.
inline bool is_integral_base(const std::vector<Vector>& pi, const Lattice& A_span) {
  if (pi.size() != A_span.rank()) return false;
  if (detail::dedup(pi).size() != pi.size()) return false;
  if (pi.empty()) return A_span.is_zero();
  for (const auto& p : pi)
    if (p.grid_dim() != A_span.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "vector and lattice differ in dimension");
  return lattice_span(pi, pi.front().finite_dim(), pi.front().nullity()) == A_span;
}

/// Decider for one finite system. Quotient residues of every root are
/// precomputed so that coset ranks reduce to GF(p) elimination.
class LocallyFiniteDecider {
 public:
  explicit LocallyFiniteDecider(const FiniteRootSystem& R) : R_(R) {
    const RootSystemType& t = R.type();
    const std::size_t n = t.index_size;
    const Lattice all = lattice_span(R.nonzero());
    auto sh = [&] { return lattice_span(R.roots_of(LengthClass::Short)); };
    auto lg = [&] { return lattice_span(R.roots_of(LengthClass::Long)); };
    switch (t.tag) {
      case RootType::BC: rule_ = Rule::Unsupported; why_ = "non-reduced type"; return;
      case RootType::D:
        if (n == 2) {
          rule_ = Rule::Unsupported;
          why_ = "D_2 is reducible";
          return;
        }
        break;
      default: break;
    }
    if (t.is_rank_one()) {
      rule_ = Rule::RankOne;
    } else if (R.simply_laced()) {
      rule_ = Rule::SimplyLaced;
      q1_ = make_quotient("span mod twice span", all, all.scaled(2), 2, std::nullopt);
    } else if ((t.tag == RootType::B || t.tag == RootType::C) && n == 2) {
      rule_ = Rule::TwoClasses;
    } else if (t.tag == RootType::B) {
      rule_ = Rule::ShortPlusLongSpanning;
      q2_ = make_quotient("long span mod twice short span", lg(), sh().scaled(2), 2, LengthClass::Long);
    } else if (t.tag == RootType::C) {
      rule_ = Rule::LongPlusShortSpanning;
      q1_ = make_quotient("short span mod long span", sh(), lg(), 2, LengthClass::Short);
    } else if (t.tag == RootType::G2) {
      rule_ = Rule::NonorthogonalPair;
    } else {
      rule_ = Rule::TwoSpanningConnected;
      q1_ = make_quotient("short span mod long span", sh(), lg(), 2, LengthClass::Short);
      q2_ = make_quotient("long span mod twice short span", lg(), sh().scaled(2), 2, LengthClass::Long);
    }
  }

  const FiniteRootSystem& system() const noexcept { return R_; }
  bool supported() const noexcept { return rule_ != Rule::Unsupported; }

  /// Evaluates the reflectable-set criterion on a deduplicated subset.
  std::vector<ConditionRecord> set_conditions(const std::vector<Vector>& pi) const {
    std::vector<Vector> sh, lg;
    for (const auto& p : pi) (R_.class_of(p) == LengthClass::Short ? sh : lg).push_back(p);
    std::vector<ConditionRecord> out;
    switch (rule_) {
      case Rule::RankOne: out.push_back(detail::nonempty_record("nonempty", pi)); break;
      case Rule::SimplyLaced: out.push_back(spanning(*q1_, pi)); break;
      case Rule::TwoClasses:
        out.push_back(detail::nonempty_record("short part nonempty", sh));
        out.push_back(detail::nonempty_record("long part nonempty", lg));
        break;
      case Rule::ShortPlusLongSpanning:
        out.push_back(detail::nonempty_record("short part nonempty", sh));
        out.push_back(spanning(*q2_, lg));
        break;
      case Rule::LongPlusShortSpanning:
        out.push_back(detail::nonempty_record("long part nonempty", lg));
        out.push_back(spanning(*q1_, sh));
        break;
      case Rule::NonorthogonalPair: {
        ConditionRecord r;
        r.kind = ConditionKind::NonorthogonalPair;
        r.label = "short and long root with nonzero pairing";
        r.holds = detail::has_nonorthogonal_pair(sh, lg);
        r.subset = sh;
        r.partner = lg;
        out.push_back(std::move(r));
        break;
      }
      case Rule::TwoSpanningConnected:
        out.push_back(spanning(*q1_, sh));
        out.push_back(spanning(*q2_, lg));
        out.push_back(detail::connected_record(pi));
        break;
      case Rule::Unsupported: break;
    }
    return out;
  }

  bool is_set(const std::vector<Vector>& pi) const { return detail::all_hold(set_conditions(detail::dedup(pi))); }

  Verdict decide(const std::vector<Vector>& pi_in) const {
    if (!supported()) return detail::unsupported(R_.type().str(), why_);
    for (const auto& p : pi_in) check_member(p);
    Certificate cert;
    cert.system = R_.type().str();
    cert.rule = rule_name();
    return detail::decide_by_deletion(detail::dedup(pi_in), std::move(cert),
                                      [this](const std::vector<Vector>& p) { return set_conditions(p); });
  }

  /// Greedy deletion down to a base.
  std::vector<Vector> refine(const std::vector<Vector>& pi_in) const {
    if (!supported()) throw Error(ErrorKind::Unsupported, R_.type().str() + ": " + why_);
    for (const auto& p : pi_in) check_member(p);
    std::vector<Vector> pi = detail::dedup(pi_in);
    if (!is_set(pi)) throw Error(ErrorKind::NotReflectable, "input is not a reflectable set");
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t i = 0; i < pi.size(); ++i) {
        std::vector<Vector> rest = pi;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        if (is_set(rest)) {
          pi = std::move(rest);
          progress = true;
          break;
        }
      }
    }
    return pi;
  }

  std::string rule_name() const {
    switch (rule_) {
      case Rule::RankOne: return "rank one: nonempty";
      case Rule::SimplyLaced: return "simply laced: coset spanning in twice the root lattice";
      case Rule::TwoClasses: return "rank two, two lengths: one short and one long root";
      case Rule::ShortPlusLongSpanning: return "short root plus long coset spanning set";
      case Rule::LongPlusShortSpanning: return "long root plus short coset spanning set";
      case Rule::NonorthogonalPair: return "nonorthogonal short-long pair";
      case Rule::TwoSpanningConnected: return "two coset spanning sets, connected";
      case Rule::Unsupported: return "unsupported";
    }
    return "?";
  }

 private:
  enum class Rule {
    Unsupported,
    RankOne,
    SimplyLaced,
    TwoClasses,
    ShortPlusLongSpanning,
    LongPlusShortSpanning,
    NonorthogonalPair,
    TwoSpanningConnected
  };

  struct Quotient {
    std::string label;
    Lattice K, H;
    unsigned p = 2;
    std::size_t dim = 0;
    std::vector<GfRow> residue;  // by root index
  };

  Quotient make_quotient(std::string label, const Lattice& K, const Lattice& H, unsigned p,
                         std::optional<LengthClass> cls) const {
    Quotient q;
    q.label = std::move(label);
    q.K = K;
    q.H = H;
    q.p = p;
    const auto desc = smith_quotient(K, H);
    q.dim = desc.divisors().size();
    q.residue.resize(R_.size());
    for (std::size_t i = 1; i < R_.size(); ++i) {
      if (cls && R_.class_of(i) != *cls) continue;
      const auto proj = desc.project(R_.roots()[i]);
      GfRow row;
      for (const auto& c : proj) {
        BigInt m = c % q.p;
        if (m < 0) m += q.p;
        row.push_back(static_cast<std::uint8_t>(m.convert_to<int>()));
      }
      q.residue[i] = std::move(row);
    }
    return q;
  }

  ConditionRecord spanning(const Quotient& q, const std::vector<Vector>& subset) const {
    ConditionRecord r;
    r.kind = ConditionKind::CosetSpanning;
    r.label = q.label;
    std::vector<GfRow> rows;
    for (const auto& s : subset) rows.push_back(q.residue[*R_.index_of(s)]);
    r.rank = rows.empty() ? 0 : gf_rank(q.p, rows);
    r.dimension = q.dim;
    r.holds = r.rank == r.dimension;
    r.subset = subset;
    r.target = q.K;
    r.modulus = q.H;
    return r;
  }

  void check_member(const Vector& p) const {
    auto i = R_.index_of(p);
    if (!i || *i == 0) throw Error(ErrorKind::NotMember, p.str() + " is not a nonzero root of " + R_.type().str());
  }

  const FiniteRootSystem& R_;
  Rule rule_ = Rule::Unsupported;
  std::string why_;
  std::optional<Quotient> q1_, q2_;
};

inline Verdict decide_locally_finite(const FiniteRootSystem& R, const std::vector<Vector>& pi) {
  return LocallyFiniteDecider(R).decide(pi);
}

inline std::vector<Vector> refine_to_base(const std::vector<Vector>& pi, const FiniteRootSystem& R) {
  return LocallyFiniteDecider(R).refine(pi);
}

/// Decider for one affine system; the lattices ⟨R⟩, ⟨R_sh⟩, ⟨R_lg⟩ and the
/// class coset sets are computed once.
class AffineDecider {
 public:
  explicit AffineDecider(const AffineReflectionSystem& R) : R_(R) {
    const RootSystemType& t = R.base().type();
    n_ = R.finite_dim();
    nu_ = R.nullity();
    if (t.tag == RootType::BC) {
      why_ = "non-reduced type";
      return;
    }
    if (t.tag == RootType::D && t.index_size == 2) {
      why_ = "D_2 is reducible";
      return;
    }
    supported_ = true;
    span_ = R.span();
    sh_span_ = R.span_of(LengthClass::Short);
    if (!R.base().partition().lg.empty()) {
      lg_span_ = R.span_of(LengthClass::Long);
      sh_cosets_ = R.class_cosets(LengthClass::Short);
      lg_cosets_ = R.class_cosets(LengthClass::Long);
    }
    if (t.is_rank_one()) {
      rule_ = "rank one: strong coset spanning in twice the root lattice";
      all_cosets_ = R.nonisotropic_cosets();
    } else if (R.base().simply_laced()) {
      rule_ = "simply laced: generating set";
    } else if ((t.tag == RootType::B || t.tag == RootType::C) && t.index_size == 2) {
      rule_ = "rank two, two lengths: two strong coset spanning sets";
    } else if (t.tag == RootType::B) {
      rule_ = "short strong coset spanning, long coset spanning";
    } else if (t.tag == RootType::C) {
      rule_ = "long strong coset spanning, short coset spanning, dual generation";
      std::vector<Vector> dual;
      for (const auto& r : lg_cosets_->reps) dual.push_back(r);
      for (const auto& r : sh_cosets_->reps) dual.push_back(2 * r);
      dual_span_ = lattice_span(dual, n_, nu_) + lg_cosets_->modulus + sh_cosets_->modulus.scaled(2);
    } else {
      rule_ = "two coset spanning sets, connected";
    }
  }

  const AffineReflectionSystem& system() const noexcept { return R_; }
  bool supported() const noexcept { return supported_; }

  std::vector<ConditionRecord> set_conditions(const std::vector<Vector>& pi) const {
    const RootSystemType& t = R_.base().type();
    std::vector<ConditionRecord> out;
    out.push_back(detail::generation_record(pi, span_, n_, nu_));
    std::vector<Vector> sh, lg;
    for (const auto& p : pi) (R_.class_of(p) == LengthClass::Short ? sh : lg).push_back(p);
    const std::int64_t rho = R_.base().rho();
    if (t.is_rank_one()) {
      out.push_back(detail::strong_record("roots in twice the root lattice", pi, *all_cosets_, span_.scaled(2)));
    } else if (R_.base().simply_laced()) {
    } else if ((t.tag == RootType::B || t.tag == RootType::C) && t.index_size == 2) {
      out.push_back(detail::strong_record("short roots in long span", sh, *sh_cosets_, *lg_span_));
      out.push_back(detail::strong_record("long roots in twice short span", lg, *lg_cosets_, sh_span_.scaled(2)));
    } else if (t.tag == RootType::B) {
      out.push_back(detail::strong_record("short roots in long span", sh, *sh_cosets_, *lg_span_));
      out.push_back(detail::spanning_record("long span mod twice short span", lg, *lg_span_, sh_span_.scaled(2)));
    } else if (t.tag == RootType::C) {
      out.push_back(detail::strong_record("long roots in twice short span", lg, *lg_cosets_, sh_span_.scaled(2)));
      out.push_back(detail::spanning_record("short span mod long span", sh, sh_span_, *lg_span_));
      std::vector<Vector> dual = lg;
      for (const auto& s : sh) dual.push_back(2 * s);
      ConditionRecord g = detail::generation_record(dual, *dual_span_, n_, nu_);
      g.label = "long roots and doubled short roots span the dual lattice";
      out.push_back(std::move(g));
    } else {
      out.push_back(detail::spanning_record("short span mod long span", sh, sh_span_, *lg_span_));
      out.push_back(detail::spanning_record("long span mod rho times short span", lg, *lg_span_, sh_span_.scaled(rho)));
      out.push_back(detail::connected_record(pi));
    }
    return out;
  }

  bool is_set(const std::vector<Vector>& pi) const { return detail::all_hold(set_conditions(detail::dedup(pi))); }

  Verdict decide(const std::vector<Vector>& pi_in) const {
    const std::string name = system_name();
    if (!supported_) return detail::unsupported(name, why_);
    for (const auto& p : pi_in)
      if (!R_.contains_nonisotropic(p)) throw Error(ErrorKind::NotMember, p.str() + " is not a non-isotropic root");
    Certificate cert;
    cert.system = name;
    cert.rule = rule_;
    return detail::decide_by_deletion(detail::dedup(pi_in), std::move(cert),
                                      [this](const std::vector<Vector>& p) { return set_conditions(p); });
  }

  std::string system_name() const {
    return R_.base().type().str() + (nu_ ? " nullity " + std::to_string(nu_) : std::string());
  }

 private:
  const AffineReflectionSystem& R_;
  std::size_t n_ = 0, nu_ = 0;
  bool supported_ = false;
  std::string why_, rule_;
  Lattice span_, sh_span_;
  std::optional<Lattice> lg_span_, dual_span_;
  std::optional<CosetSet> sh_cosets_, lg_cosets_, all_cosets_;
};

inline Verdict decide_affine(const AffineReflectionSystem& R, const std::vector<Vector>& pi) {
  return AffineDecider(R).decide(pi);
}

struct RecheckReport {
  bool consistent = true;
  std::size_t records_checked = 0;
  std::vector<std::string> mismatches;
};

/// Re-evaluates one record from its own data.
inline bool recheck_record(const ConditionRecord& r) {
  switch (r.kind) {
    case ConditionKind::Generation: {
      if (!r.target) return false;
      const Lattice& T = *r.target;
      if (r.subset.empty()) return T.is_zero() == r.holds;
      return (lattice_span(r.subset, r.subset.front().finite_dim(), r.subset.front().nullity()) == T) == r.holds;
    }
    case ConditionKind::CosetSpanning: {
      if (!r.target || !r.modulus) return false;
      const CosetRank cr = coset_rank(r.subset, *r.target, *r.modulus);
      return cr.rank == r.rank && cr.dimension == r.dimension && (cr.rank == cr.dimension) == r.holds;
    }
    case ConditionKind::StrongCosetSpanning: {
      if (!r.cosets || !r.modulus) return false;
      const StrongCoverage cov = strong_coverage(r.subset, *r.cosets, *r.modulus);
      return cov.holds == r.holds && cov.uncovered == r.uncovered;
    }
    case ConditionKind::Nonempty: return r.subset.empty() != r.holds;
    case ConditionKind::Connected: return (!r.subset.empty() && is_connected(r.subset)) == r.holds;
    case ConditionKind::NonorthogonalPair: return detail::has_nonorthogonal_pair(r.subset, r.partner) == r.holds;
  }
  return false;
}

/// Checks every record against its data and the outcome against the records.
inline RecheckReport recheck_certificate(const Verdict& v) {
  RecheckReport rep;
  auto check = [&](const ConditionRecord& r, const std::string& where) {
    ++rep.records_checked;
    bool ok = false;
    try {
      ok = recheck_record(r);
    } catch (const Error& e) {
      rep.mismatches.push_back(where + ": " + e.what());
      rep.consistent = false;
      return;
    }
    if (!ok) {
      rep.mismatches.push_back(where + ": record '" + r.label + "' does not re-verify");
      rep.consistent = false;
    }
  };
  const Certificate& c = v.certificate;
  for (std::size_t i = 0; i < c.conditions.size(); ++i) check(c.conditions[i], "condition " + std::to_string(i));
  for (std::size_t i = 0; i < c.deletions.size(); ++i)
    for (const auto& r : c.deletions[i].conditions) check(r, "deletion " + std::to_string(i));
  auto fail = [&](const std::string& m) {
    rep.mismatches.push_back(m);
    rep.consistent = false;
  };
  const bool set_ok = detail::all_hold(c.conditions);
  switch (v.outcome) {
    case Outcome::Unsupported: break;
    case Outcome::NotReflectableSet:
      if (set_ok) fail("outcome says not a set but every condition holds");
      break;
    case Outcome::ReflectableSetNotBase:
      if (!set_ok) fail("outcome says set but a condition fails");
      if (c.deletions.size() != 1 || !c.deletions[0].set_criterion_holds())
        fail("no deletion witness keeps the set criterion");
      if (c.sub_base) {
        const auto in = detail::dedup(c.input);
        for (const auto& b : *c.sub_base)
          if (!std::binary_search(in.begin(), in.end(), b)) fail("sub-base element " + b.str() + " is not in the input");
      }
      break;
    case Outcome::ReflectableBase: {
      if (!set_ok) fail("outcome says base but a condition fails");
      std::vector<Vector> removed;
      for (const auto& d : c.deletions) {
        if (d.set_criterion_holds()) fail("deleting " + d.removed.str() + " keeps the set criterion");
        removed.push_back(d.removed);
      }
      std::sort(removed.begin(), removed.end());
      if (detail::dedup(c.input) != removed) fail("deletion records do not cover the set");
      break;
    }
  }
  return rep;
}

}  // namespace reflekta
