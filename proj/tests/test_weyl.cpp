#include <gtest/gtest.h>

#include <random>

#include "reflekta/affine_system.hpp"
#include "reflekta/weyl.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace reflekta;
using fixture::eps;

namespace {

std::set<oracle::Row> closure_rows(const OrbitClosureResult& c) { return fixture::row_set(c.elements); }

AffineReflectionSystem affine_a1() {
  return build_affine(build_finite({RootType::A, 2}), 1, CosetSet::whole(1), std::nullopt, std::nullopt);
}

}  // namespace

TEST(OrbitClosure, SingleRootOfA1) {
  const auto R = build_finite({RootType::A, 2});
  const auto c = orbit_closure({eps({1, -1})}, view_of(R), Box{});
  EXPECT_EQ(closure_rows(c), (std::set<oracle::Row>{{2, -2}, {-2, 2}}));
  EXPECT_TRUE(c.saturated);
}

TEST(OrbitClosure, ShortAndLongRootOfB2FillTheSystem) {
  const auto R = build_finite({RootType::B, 2});
  const auto c = orbit_closure({eps({1, 0}), eps({1, -1})}, view_of(R), Box{});
  EXPECT_EQ(c.elements.size(), 8u);
}

TEST(OrbitClosure, OrthogonalPairStaysSmall) {
  const auto R = build_finite({RootType::A, 4});
  const auto c = orbit_closure({eps({1, -1, 0, 0}), eps({0, 0, 1, -1})}, view_of(R), Box{});
  EXPECT_EQ(c.elements.size(), 4u);
}

TEST(OrbitClosure, RejectsNonRootsAndEmptyInput) {
  const auto R = build_finite({RootType::A, 3});
  try {
    orbit_closure({eps({1, 1, 0})}, view_of(R), Box{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMember);
  }
  try {
    orbit_closure({}, view_of(R), Box{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyInput);
  }
}

TEST(OrbitClosure, MatchesNaiveFixpointOnRandomSubsets) {
  std::mt19937 rng(31);
  for (auto t : {RootSystemType{RootType::B, 3}, RootSystemType{RootType::G2, 2}, RootSystemType{RootType::F4, 4}}) {
    const auto R = build_finite(t);
    const auto pool = R.nonzero();
    for (int trial = 0; trial < 100; ++trial) {
      const auto pi = fixture::sample(pool, 1 + rng() % 4, rng);
      EXPECT_EQ(closure_rows(orbit_closure(pi, view_of(R), Box{})), oracle::closure(fixture::rows(pi)));
    }
  }
}

TEST(OrbitClosure, IndexMaskMatchesVectorClosure) {
  std::mt19937 rng(37);
  const auto R = build_finite({RootType::C, 3});
  for (int trial = 0; trial < 100; ++trial) {
    const auto pi = fixture::sample(R.nonzero(), 1 + rng() % 3, rng);
    const auto mask = finite_closure_mask(R, detail::finite_indices(pi, R));
    std::vector<Vector> from_mask;
    for (std::size_t i = 0; i < mask.size(); ++i)
      if (mask[i]) from_mask.push_back(R.roots()[i]);
    std::sort(from_mask.begin(), from_mask.end());
    EXPECT_EQ(from_mask, orbit_closure(pi, view_of(R), Box{}).elements);
  }
}

TEST(OrbitClosure, AffineBoxTruncationIsReported) {
  const auto A = affine_a1();
  const Vector a({2, -2}, {0}), d({0, 0}, {1});
  const auto c = orbit_closure({a, d - a}, A.view(), Box{3});
  EXPECT_FALSE(c.saturated);
  for (const auto& e : c.elements) EXPECT_LE(iso_norm(e), 3);
  EXPECT_EQ(c.elements.size(), 14u);
}

TEST(BruteSet, B2Examples) {
  const auto R = build_finite({RootType::B, 2});
  EXPECT_EQ(is_reflectable_set_bruteforce({eps({1, 0}), eps({1, -1})}, R), BruteVerdict::Yes);
  EXPECT_EQ(is_reflectable_set_bruteforce({eps({1, 0}), eps({0, 1})}, R), BruteVerdict::No);
  EXPECT_EQ(is_reflectable_set_bruteforce({eps({1, 0}), eps({0, 1})}, view_of(R)), BruteVerdict::No);
}

TEST(BruteSet, AffineA1InnerWindowIsCovered) {
  const auto A = affine_a1();
  const Vector a({2, -2}, {0}), d({0, 0}, {1});
  EXPECT_EQ(is_reflectable_set_bruteforce({a, d - a}, A.view(), BruteOptions{Box{6}, 2}), BruteVerdict::Yes);
  EXPECT_EQ(is_reflectable_set_bruteforce({a, -a}, A.view(), BruteOptions{Box{6}, 2}), BruteVerdict::No);
}

TEST(BruteSet, MarginLargerThanBoxIsRejected) {
  const auto A = affine_a1();
  try {
    is_reflectable_set_bruteforce({Vector({2, -2}, {0})}, A.view(), BruteOptions{Box{2}, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HypothesisViolated);
  }
}

TEST(BruteBase, Examples) {
  const auto G = build_finite({RootType::G2, 2});
  EXPECT_EQ(is_reflectable_base_bruteforce({eps({1, -1, 0}), eps({-1, 2, -1})}, G), BruteVerdict::Yes);
  const auto B = build_finite({RootType::B, 2});
  EXPECT_EQ(is_reflectable_base_bruteforce({eps({1, 0}), eps({1, -1}), eps({1, 1})}, B), BruteVerdict::No);
  EXPECT_EQ(is_reflectable_base_bruteforce({eps({1, 0})}, B), BruteVerdict::No);
  EXPECT_EQ(is_reflectable_base_bruteforce({eps({1, 0}), eps({1, -1}), eps({1, 0})}, B), BruteVerdict::Yes);
}

TEST(BruteBase, MatchesNaiveOracleOnB3) {
  std::mt19937 rng(41);
  const auto R = build_finite({RootType::B, 3});
  for (int trial = 0; trial < 200; ++trial) {
    const auto pi = fixture::sample(R.nonzero(), 1 + rng() % 4, rng);
    EXPECT_EQ(is_reflectable_base_bruteforce(pi, R) == BruteVerdict::Yes,
              oracle::is_base(fixture::rows(pi), R.nonzero().size()));
  }
}

TEST(RootString, ThroughItself) {
  const auto R = build_finite({RootType::A, 3});
  const auto a = eps({1, -1, 0});
  auto in_R = [&](const Vector& x) { return R.contains(x); };
  const auto s = root_string(a, a, in_R);
  EXPECT_EQ(s.d, 2);
  EXPECT_EQ(s.u, 0);
}

TEST(RootString, OrthogonalRootsInA3) {
  const auto R = build_finite({RootType::A, 4});
  const auto s = root_string(eps({1, -1, 0, 0}), eps({0, 0, 1, -1}), view_of(R));
  EXPECT_EQ(s.d, 0);
  EXPECT_EQ(s.u, 0);
}

TEST(RootString, ShortThroughLongInB2) {
  const auto R = build_finite({RootType::B, 2});
  const auto s = root_string(eps({0, 1}), eps({1, -1}), view_of(R));
  EXPECT_EQ(s.d, 0);
  EXPECT_EQ(s.u, 2);
}

TEST(RootString, BrokenStringIsDetected) {
  const auto a = eps({1});
  auto holes = [&](const Vector& x) { return x == a || x == 3 * a || x == -a; };
  try {
    root_string(a, a, holes);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BrokenString);
  }
}

TEST(RootString, ExhaustiveInG2AndF4) {
  for (auto t : {RootSystemType{RootType::G2, 2}, RootSystemType{RootType::F4, 4}}) {
    const auto R = build_finite(t);
    for (const auto& a : R.nonzero())
      for (const auto& b : R.roots()) EXPECT_NO_THROW(root_string(a, b, view_of(R)));
  }
}
