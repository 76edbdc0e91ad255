#include <gtest/gtest.h>

#include <random>

#include "reflekta/coset_set.hpp"
#include "reflekta/gf.hpp"
#include "support/oracles.hpp"

using namespace reflekta;

namespace {

Vector iso(std::vector<std::int64_t> g) { return Vector::isotropic(0, std::move(g)); }

const Lattice G = Lattice::standard(2);
const Lattice H = G.scaled(2);

CosetSet nonzero_classes() {
  return CosetSet(0, 2, H, {iso({1, 0}), iso({0, 1}), iso({1, 1})});
}

Vector fin3(std::int64_t a, std::int64_t b, std::int64_t c) { return Vector({2 * a, 2 * b, 2 * c}, {}); }

}  // namespace

TEST(CosetSpanning, UnitVectorsSpanModTwo) { EXPECT_TRUE(is_coset_spanning({iso({1, 0}), iso({0, 1})}, G, H)); }

TEST(CosetSpanning, EmptySetOverNontrivialQuotient) { EXPECT_FALSE(is_coset_spanning({}, G, H)); }

TEST(CosetSpanning, CongruentPairDoesNotSpan) {
  const auto r = coset_rank({iso({1, 0}), iso({1, 2})}, G, H);
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.dimension, 2u);
  EXPECT_EQ(r.prime, 2u);
  EXPECT_FALSE(is_coset_spanning({iso({1, 0}), iso({1, 2})}, G, H));
}

TEST(CosetSpanning, TrivialQuotientIsSpannedByNothing) { EXPECT_TRUE(is_coset_spanning({}, G, G)); }

TEST(CosetSpanning, ThreeTorsionQuotient) {
  const Lattice H3 = G.scaled(3);
  EXPECT_TRUE(is_coset_spanning({iso({1, 1}), iso({1, 2})}, G, H3));
  EXPECT_FALSE(is_coset_spanning({iso({1, 1}), iso({2, 2})}, G, H3));
  EXPECT_EQ(coset_rank({iso({1, 0})}, G, H3).prime, 3u);
}

TEST(CosetSpanning, NonElementaryQuotientIsRejected) {
  try {
    coset_rank({iso({1, 0})}, G, G.scaled(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadPrimeStructure);
  }
}

TEST(CosetSpanning, MixedPrimesAreRejected) {
  try {
    coset_rank({iso({1, 0})}, G, Lattice::from_rows(2, std::vector<std::vector<std::int64_t>>{{2, 0}, {0, 3}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadPrimeStructure);
  }
}

TEST(CosetSpanning, InfiniteQuotientIsRejected) {
  try {
    coset_rank({iso({1, 0})}, G, lattice_span({iso({2, 0})}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadPrimeStructure);
  }
}

TEST(CosetBasis, UnitVectors) { EXPECT_TRUE(is_coset_basis({iso({1, 0}), iso({0, 1})}, G, H)); }

TEST(CosetBasis, DependentTripleIsNotABasis) {
  EXPECT_FALSE(is_coset_basis({iso({1, 0}), iso({0, 1}), iso({1, 1})}, G, H));
  EXPECT_TRUE(is_coset_spanning({iso({1, 0}), iso({0, 1}), iso({1, 1})}, G, H));
}

TEST(CosetBasis, LongRootsOfB3OverTwiceShortLattice) {
  const std::vector<Vector> sh = {fin3(1, 0, 0), fin3(0, 1, 0), fin3(0, 0, 1)};
  const std::vector<Vector> lg = {fin3(1, -1, 0), fin3(0, 1, -1), fin3(0, 1, 1)};
  const Lattice K = lattice_span(lg), Hs = lattice_span(sh).scaled(2);
  const auto r = coset_rank(lg, K, Hs);
  EXPECT_EQ(r.dimension, 2u);
  EXPECT_EQ(r.rank, 2u);
  EXPECT_TRUE(is_coset_spanning(lg, K, Hs));
  EXPECT_FALSE(is_coset_basis(lg, K, Hs));
  EXPECT_TRUE(is_coset_basis({lg[0], lg[1]}, K, Hs));
}

TEST(StrongSpanning, UnitVectorsAreNotStrong) {
  EXPECT_FALSE(is_strong_coset_spanning({iso({1, 0}), iso({0, 1})}, nonzero_classes(), H));
  EXPECT_FALSE(is_strong_coset_spanning({iso({1, 0}), iso({0, 1})}, CosetSet::whole(2), H));
}

TEST(StrongSpanning, AllNonzeroClassesCovered) {
  const std::vector<Vector> R = {iso({1, 0}), iso({0, 1}), iso({1, 1})};
  EXPECT_TRUE(is_strong_coset_spanning(R, nonzero_classes(), H));
  EXPECT_TRUE(is_minimal_strong_coset_spanning(R, nonzero_classes(), H));
}

TEST(StrongSpanning, WholeGroupLeavesZeroClassUncovered) {
  const std::vector<Vector> R = {iso({1, 0}), iso({0, 1}), iso({1, 1})};
  const auto cov = strong_coverage(R, CosetSet::whole(2), H);
  EXPECT_FALSE(cov.holds);
  EXPECT_EQ(cov.cosets_meeting_K, 4u);
  ASSERT_EQ(cov.uncovered.size(), 1u);
  EXPECT_TRUE(H.contains(to_big(cov.uncovered[0].grid())));
}

TEST(StrongSpanning, SingleCosetCoveredByOneElement) {
  const CosetSet K(0, 1, Lattice::standard(1).scaled(2), {iso({1})});
  EXPECT_TRUE(is_strong_coset_spanning({iso({5})}, K, Lattice::standard(1).scaled(2)));
}

TEST(StrongSpanning, ElementOutsideKIsRejected) {
  try {
    strong_coverage({iso({0, 0})}, nonzero_classes(), H);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMember);
  }
}

TEST(StrongSpanning, ImpliesSpanningOnRandomSubsets) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-3, 3), k(1, 5);
  for (int t = 0; t < 300; ++t) {
    std::vector<Vector> R;
    const int n = k(rng);
    for (int i = 0; i < n; ++i) {
      Vector v = iso({c(rng), c(rng)});
      if (v.iso[0] % 2 == 0 && v.iso[1] % 2 == 0) v.iso[0] += 1;
      R.push_back(v);
    }
    if (is_strong_coset_spanning(R, nonzero_classes(), H)) EXPECT_TRUE(is_coset_spanning(R, G, H));
  }
}

TEST(ReflectionSubspace, Examples) {
  EXPECT_TRUE(validate_reflection_subspace(CosetSet::whole(2)));
  const CosetSet Z(0, 1, Lattice::standard(1).scaled(2), {iso({0}), iso({1})}, true, true);
  EXPECT_TRUE(validate_reflection_subspace(Z));
  const CosetSet odd(0, 1, Lattice::standard(1).scaled(2), {iso({1})}, true, false);
  EXPECT_FALSE(validate_reflection_subspace(odd));
  const CosetSet odd_sym(0, 1, Lattice::standard(1).scaled(2), {iso({1})}, false, true);
  EXPECT_TRUE(validate_reflection_subspace(odd_sym));
}

TEST(ReflectionSubspace, UnflaggedSetIsUnconstrained) {
  EXPECT_TRUE(validate_reflection_subspace(CosetSet(0, 1, Lattice::standard(1).scaled(5), {iso({1})})));
}

TEST(Canonicalize, TwoParityClassesBecomeTheWholeGroup) {
  const CosetSet Z(0, 1, Lattice::standard(1).scaled(2), {iso({0}), iso({1})}, true, true);
  EXPECT_EQ(canonicalize(Z), CosetSet::whole(1));
}

TEST(Canonicalize, RepsAreReducedAndSorted) {
  const CosetSet X(0, 1, Lattice::standard(1).scaled(4), {iso({7}), iso({-4}), iso({3})});
  const CosetSet c = canonicalize(X);
  ASSERT_EQ(c.reps.size(), 2u);
  EXPECT_EQ(c.reps[0], iso({0}));
  EXPECT_EQ(c.reps[1], iso({3}));
}

TEST(Canonicalize, IsIdempotentAndPreservesMembership) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> c(-6, 6), m(1, 4), k(1, 3);
  for (int t = 0; t < 200; ++t) {
    const Lattice mod = Lattice::from_rows(2, std::vector<std::vector<std::int64_t>>{{m(rng), c(rng)}, {0, m(rng)}});
    std::vector<Vector> reps;
    const int n = k(rng);
    for (int i = 0; i < n; ++i) reps.push_back(iso({c(rng), c(rng)}));
    const CosetSet X(0, 2, mod, reps);
    const CosetSet Y = canonicalize(X);
    EXPECT_EQ(canonicalize(Y), Y);
    for (int a = -4; a <= 4; ++a)
      for (int b = -4; b <= 4; ++b) EXPECT_EQ(X.contains(iso({a, b})), Y.contains(iso({a, b})));
  }
}

TEST(Gf, RankMatchesBruteForceSpan) {
  std::mt19937 rng(23);
  for (unsigned p : {2u, 3u}) {
    std::uniform_int_distribution<int> c(0, static_cast<int>(p) - 1), k(1, 5);
    for (int t = 0; t < 200; ++t) {
      const int n = k(rng);
      std::vector<GfRow> rows;
      oracle::Mat m;
      for (int i = 0; i < n; ++i) {
        GfRow r;
        oracle::Row o;
        for (int j = 0; j < 4; ++j) {
          const int x = c(rng);
          r.push_back(static_cast<std::uint8_t>(x));
          o.push_back(x);
        }
        rows.push_back(r);
        m.push_back(o);
      }
      EXPECT_EQ(gf_rank(p, rows), oracle::gf_rank_bruteforce(p, m));
    }
  }
}
