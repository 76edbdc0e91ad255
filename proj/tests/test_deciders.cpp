#include <gtest/gtest.h>

#include <random>

#include "reflekta/deciders.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace reflekta;
using fixture::eps;

namespace {

AffineReflectionSystem affine(RootType t, std::size_t n, std::optional<std::int64_t> Lk = {}) {
  std::optional<CosetSet> L;
  if (Lk) L = CosetSet::multiples(1, *Lk);
  return build_affine(build_finite({t, n}), 1, CosetSet::whole(1), L, std::nullopt);
}

Vector g2_short() { return eps({1, -1, 0}); }
Vector g2_long_adjacent() { return eps({-1, 2, -1}); }
Vector g2_long_orthogonal() { return eps({1, 1, -2}); }

}  // namespace

TEST(LocallyFinite, B2ShortPlusLongIsBase) {
  const auto R = build_finite({RootType::B, 2});
  const auto v = decide_locally_finite(R, {eps({1, 0}), eps({1, -1})});
  EXPECT_EQ(v.outcome, Outcome::ReflectableBase);
  EXPECT_TRUE(recheck_certificate(v).consistent);
}

TEST(LocallyFinite, A2AllRootsIsSetNotBase) {
  const auto R = build_finite({RootType::A, 3});
  const auto v = decide_locally_finite(R, R.nonzero());
  EXPECT_EQ(v.outcome, Outcome::ReflectableSetNotBase);
  ASSERT_EQ(v.certificate.deletions.size(), 1u);
  EXPECT_TRUE(v.certificate.deletions[0].set_criterion_holds());
  ASSERT_TRUE(v.certificate.sub_base.has_value());
  EXPECT_EQ(decide_locally_finite(R, *v.certificate.sub_base).outcome, Outcome::ReflectableBase);
}

TEST(LocallyFinite, G2OrthogonalPairIsNotASet) {
  const auto R = build_finite({RootType::G2, 2});
  ASSERT_EQ(form_numerator(g2_short(), g2_long_orthogonal()), 0);
  EXPECT_EQ(decide_locally_finite(R, {g2_short(), g2_long_orthogonal()}).outcome, Outcome::NotReflectableSet);
  EXPECT_EQ(oracle::closure(fixture::rows({g2_short(), g2_long_orthogonal()})).size(), 4u);
}

TEST(LocallyFinite, G2NonorthogonalPairIsBase) {
  const auto R = build_finite({RootType::G2, 2});
  EXPECT_EQ(decide_locally_finite(R, {g2_short(), g2_long_adjacent()}).outcome, Outcome::ReflectableBase);
}

TEST(LocallyFinite, B2ShortAndTwoLongIsSetNotBase) {
  const auto R = build_finite({RootType::B, 2});
  const auto v = decide_locally_finite(R, {eps({1, 0}), eps({1, -1}), eps({1, 1})});
  EXPECT_EQ(v.outcome, Outcome::ReflectableSetNotBase);
  EXPECT_TRUE(recheck_certificate(v).consistent);
}

TEST(LocallyFinite, SingletonInRankTwoIsNotASet) {
  for (auto t : {RootSystemType{RootType::A, 3}, RootSystemType{RootType::B, 2}, RootSystemType{RootType::G2, 2}}) {
    const auto R = build_finite(t);
    EXPECT_EQ(decide_locally_finite(R, {R.nonzero().front()}).outcome, Outcome::NotReflectableSet);
  }
}

TEST(LocallyFinite, RankOneSingletonIsBase) {
  const auto R = build_finite({RootType::A, 2});
  EXPECT_EQ(decide_locally_finite(R, {eps({1, -1})}).outcome, Outcome::ReflectableBase);
  EXPECT_EQ(decide_locally_finite(R, R.nonzero()).outcome, Outcome::ReflectableSetNotBase);
}

TEST(LocallyFinite, DuplicatesAreReadAsASet) {
  const auto R = build_finite({RootType::B, 2});
  const auto v = decide_locally_finite(R, {eps({1, 0}), eps({1, -1}), eps({1, 0})});
  EXPECT_EQ(v.outcome, Outcome::ReflectableBase);
  EXPECT_EQ(v.certificate.input.size(), 2u);
}

TEST(LocallyFinite, UnsupportedTypes) {
  EXPECT_EQ(decide_locally_finite(build_finite({RootType::BC, 2}), {eps({1, 0})}).outcome, Outcome::Unsupported);
  EXPECT_EQ(decide_locally_finite(build_finite({RootType::D, 2}), {eps({1, 1})}).outcome, Outcome::Unsupported);
}

TEST(LocallyFinite, RejectsNonRoots) {
  const auto R = build_finite({RootType::A, 3});
  try {
    decide_locally_finite(R, {eps({1, 1, 0})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMember);
  }
}

TEST(LocallyFinite, AgreesWithNaiveClosureOnSmallSubsets) {
  for (auto t : {RootSystemType{RootType::A, 3}, RootSystemType{RootType::B, 2}, RootSystemType{RootType::C, 2},
                 RootSystemType{RootType::G2, 2}, RootSystemType{RootType::D, 3}}) {
    const auto R = build_finite(t);
    const LocallyFiniteDecider dec(R);
    const auto pool = R.nonzero();
    for (std::size_t k = 1; k <= 3; ++k)
      oracle::for_each_subset(pool.size(), k, [&](const std::vector<std::size_t>& idx) {
        std::vector<Vector> pi;
        for (auto i : idx) pi.push_back(pool[i]);
        const auto v = dec.decide(pi);
        const auto rows = fixture::rows(pi);
        EXPECT_EQ(v.is_set(), oracle::is_set(rows, pool.size())) << t.str();
        EXPECT_EQ(v.is_base(), oracle::is_base(rows, pool.size())) << t.str();
      });
  }
}

TEST(LocallyFinite, AgreesWithNaiveClosureOnRandomF4AndB4) {
  std::mt19937 rng(43);
  for (auto t : {RootSystemType{RootType::F4, 4}, RootSystemType{RootType::B, 4}, RootSystemType{RootType::C, 4}}) {
    const auto R = build_finite(t);
    const LocallyFiniteDecider dec(R);
    for (int trial = 0; trial < 150; ++trial) {
      const auto pi = fixture::sample(R.nonzero(), 1 + rng() % 6, rng);
      EXPECT_EQ(dec.is_set(pi), oracle::is_set(fixture::rows(pi), R.nonzero().size())) << t.str();
    }
  }
}

TEST(LocallyFinite, CertificatesRecheck) {
  std::mt19937 rng(47);
  for (auto t : {RootSystemType{RootType::B, 3}, RootSystemType{RootType::C, 3}, RootSystemType{RootType::F4, 4},
                 RootSystemType{RootType::G2, 2}, RootSystemType{RootType::A, 4}}) {
    const auto R = build_finite(t);
    for (int trial = 0; trial < 60; ++trial) {
      const auto v = decide_locally_finite(R, fixture::sample(R.nonzero(), 1 + rng() % 5, rng));
      const auto rep = recheck_certificate(v);
      EXPECT_TRUE(rep.consistent) << t.str() << (rep.mismatches.empty() ? "" : rep.mismatches[0]);
    }
  }
}

TEST(Recheck, TamperedOutcomeIsCaught) {
  const auto R = build_finite({RootType::B, 2});
  auto v = decide_locally_finite(R, {eps({1, 0}), eps({0, 1})});
  ASSERT_EQ(v.outcome, Outcome::NotReflectableSet);
  v.outcome = Outcome::ReflectableBase;
  EXPECT_FALSE(recheck_certificate(v).consistent);
}

TEST(Recheck, TamperedRecordIsCaught) {
  const auto R = build_finite({RootType::C, 3});
  auto v = decide_locally_finite(R, R.nonzero());
  ASSERT_FALSE(v.certificate.conditions.empty());
  v.certificate.conditions.back().holds = !v.certificate.conditions.back().holds;
  EXPECT_FALSE(recheck_certificate(v).consistent);
}

TEST(Refine, B2AllRootsGivesShortLongPair) {
  const auto R = build_finite({RootType::B, 2});
  const auto b = refine_to_base(R.nonzero(), R);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_NE(R.class_of(b[0]), R.class_of(b[1]));
  EXPECT_EQ(decide_locally_finite(R, b).outcome, Outcome::ReflectableBase);
}

TEST(Refine, A2AllRootsGivesTwoElementBase) {
  const auto R = build_finite({RootType::A, 3});
  const auto b = refine_to_base(R.nonzero(), R);
  EXPECT_EQ(b.size(), 2u);
  EXPECT_TRUE(oracle::is_base(fixture::rows(b), 6));
}

TEST(Refine, BaseIsReturnedUnchanged) {
  const auto R = build_finite({RootType::G2, 2});
  std::vector<Vector> base = {g2_short(), g2_long_adjacent()};
  std::sort(base.begin(), base.end());
  EXPECT_EQ(refine_to_base(base, R), base);
}

TEST(Refine, NonSetIsRejected) {
  const auto R = build_finite({RootType::B, 2});
  try {
    refine_to_base({eps({1, 0})}, R);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotReflectable);
  }
}

TEST(Cardinality, NonSimplyLacedTypes) {
  EXPECT_EQ(expected_base_cardinality(build_finite({RootType::G2, 2})), 2u);
  EXPECT_EQ(expected_base_cardinality(build_finite({RootType::F4, 4})), 4u);
  EXPECT_EQ(expected_base_cardinality(build_finite({RootType::B, 3})), 3u);
  EXPECT_EQ(expected_base_cardinality(build_finite({RootType::B, 2})), 2u);
  EXPECT_EQ(expected_base_cardinality(build_finite({RootType::C, 3})), 3u);
}

TEST(Cardinality, B3QuotientDimensions) {
  const auto R = build_finite({RootType::B, 3});
  const Lattice sh = lattice_span(R.roots_of(LengthClass::Short)), lg = lattice_span(R.roots_of(LengthClass::Long));
  EXPECT_EQ(quotient_dimension(sh, lg, 2), 1u);
  EXPECT_EQ(quotient_dimension(lg, sh.scaled(2), 2), 2u);
}

TEST(Cardinality, SimplyLacedIsRejected) {
  try {
    expected_base_cardinality(build_finite({RootType::A, 3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SimplyLaced);
  }
}

TEST(IntegralBase, Examples) {
  const Lattice Z2 = lattice_span({eps({1, 0}), eps({0, 1})});
  EXPECT_TRUE(is_integral_base({eps({1, 0}), eps({0, 1})}, Z2));
  EXPECT_FALSE(is_integral_base({eps({2, 0}), eps({0, 1})}, Z2));
  const auto R = build_finite({RootType::B, 3});
  const Lattice A = lattice_span(R.nonzero());
  EXPECT_FALSE(is_integral_base({eps({1, 0, 0}), eps({1, -1, 0}), eps({0, 1, -1}), eps({0, 1, 1})}, A));
  EXPECT_TRUE(is_integral_base({eps({1, 0, 0}), eps({1, -1, 0}), eps({0, 1, -1})}, A));
}

TEST(IntegralBase, EveryB3BaseHasThreeElements) {
  const auto R = build_finite({RootType::B, 3});
  const auto b = refine_to_base(R.nonzero(), R);
  EXPECT_EQ(b.size(), 3u);
  EXPECT_TRUE(is_integral_base(b, lattice_span(R.nonzero())));
}

TEST(Affine, A1BaseAndNonBases) {
  const auto R = affine(RootType::A, 2);
  const Vector a({2, -2}, {0}), d({0, 0}, {1});
  const auto v = decide_affine(R, {a, d - a});
  EXPECT_EQ(v.outcome, Outcome::ReflectableBase);
  EXPECT_TRUE(recheck_certificate(v).consistent);
  EXPECT_EQ(decide_affine(R, {a}).outcome, Outcome::NotReflectableSet);
  EXPECT_EQ(decide_affine(R, {a, -a}).outcome, Outcome::NotReflectableSet);
  EXPECT_EQ(decide_affine(R, {a, d - a, d + a}).outcome, Outcome::ReflectableSetNotBase);
}

TEST(Affine, A2LatticeBasisIsBase) {
  const auto R = affine(RootType::A, 3);
  const Vector a1({2, -2, 0}, {0}), a2({0, 2, -2}, {0}), d({0, 0, 0}, {1});
  const std::vector<Vector> pi = {a1, a2, d - a1 - a2};
  EXPECT_EQ(decide_affine(R, pi).outcome, Outcome::ReflectableBase);
  EXPECT_EQ(is_reflectable_base_bruteforce(pi, R.view(), BruteOptions{Box{8}, 5}), BruteVerdict::Yes);
}

TEST(Affine, NullityZeroMatchesFiniteDecider) {
  const auto base = build_finite({RootType::C, 3});
  const auto R = as_affine(base);
  std::mt19937 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const auto pi = fixture::sample(base.nonzero(), 1 + rng() % 4, rng);
    EXPECT_EQ(decide_affine(R, pi).outcome, decide_locally_finite(base, pi).outcome);
  }
}

TEST(Affine, AgreesWithTruncatedClosure) {
  std::mt19937 rng(59);
  struct Case {
    RootType t;
    std::size_t n;
    std::optional<std::int64_t> Lk;
  };
  for (const Case& c : {Case{RootType::A, 2, {}}, Case{RootType::B, 2, 2}, Case{RootType::C, 3, 1},
                        Case{RootType::G2, 2, 3}}) {
    const auto R = affine(c.t, c.n, c.Lk);
    const AffineDecider dec(R);
    const auto pool = R.window(2);
    const auto view = R.view();
    for (int trial = 0; trial < 80; ++trial) {
      const auto pi = fixture::sample(pool, 1 + rng() % (R.base().rank() + 3), rng);
      const auto v = dec.decide(pi);
      const auto b = is_reflectable_set_bruteforce(pi, view, BruteOptions{Box{10}, 8});
      if (b != BruteVerdict::Inconclusive) {
        EXPECT_EQ(v.is_set(), b == BruteVerdict::Yes) << R.base().type().str();
      }
      EXPECT_TRUE(recheck_certificate(v).consistent);
    }
  }
}

TEST(Affine, BcIsUnsupported) {
  const CosetSet E(0, 1, Lattice::standard(1).scaled(2), {Vector::isotropic(0, {1})}, false, true);
  const auto R = build_affine(build_finite({RootType::BC, 1}), 1, CosetSet::whole(1), std::nullopt, E);
  EXPECT_EQ(decide_affine(R, {Vector(std::vector<std::int64_t>{2}, {0})}).outcome, Outcome::Unsupported);
}
