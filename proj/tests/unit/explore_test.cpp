#include "psc/explore.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "oracle.hpp"
#include "psc/error.hpp"

namespace psc {
namespace {

// Minimum PSC per length from an independent brute-force enumeration
// (exact rational arithmetic, then rounded).
constexpr double kMinPsc3 = 1.274681772777731;
constexpr double kMinPsc5 = 1.1977708763999664;
constexpr double kMinPsc6 = 10.0 / 9.0;

TEST(ExhaustiveMinPsc, LengthOneEveryPairIsMonomial) {
  const SearchResult r = exhaustive_min_psc(1);
  EXPECT_EQ(r.min_psc, 1.0);
  EXPECT_EQ(r.argmin_count, 4u);
  EXPECT_TRUE(r.unit_psc_pairs.empty());
  EXPECT_TRUE(r.classification_consistent);
}

TEST(ExhaustiveMinPsc, LengthTwo) {
  const SearchResult r = exhaustive_min_psc(2);
  EXPECT_EQ(r.min_psc, 1.0);
  EXPECT_EQ(r.golay_count, 8u);
  EXPECT_EQ(r.unit_psc_pairs.size(), 8u);
  EXPECT_TRUE(r.classification_consistent);
  EXPECT_EQ(r.evaluated, 16u);
}

TEST(ExhaustiveMinPsc, OddLengthsHaveNoGolayPairs) {
  for (int len : {3, 5}) {
    const SearchResult r = exhaustive_min_psc(len);
    EXPECT_GT(r.min_psc, 1.0);
    EXPECT_EQ(r.golay_count, 0u);
    EXPECT_TRUE(r.unit_psc_pairs.empty());
    EXPECT_TRUE(r.classification_consistent);
  }
  EXPECT_NEAR(exhaustive_min_psc(3).min_psc, kMinPsc3, 1e-12);
  EXPECT_NEAR(exhaustive_min_psc(5).min_psc, kMinPsc5, 1e-12);
  EXPECT_NEAR(exhaustive_min_psc(6).min_psc, kMinPsc6, 1e-12);
}

TEST(ExhaustiveMinPsc, LengthFourUnitSetIsGolaySet) {
  const SearchResult r = exhaustive_min_psc(4);
  EXPECT_EQ(r.min_psc, 1.0);
  EXPECT_EQ(r.golay_count, 32u);
  EXPECT_EQ(r.unit_psc_pairs, r.golay_pairs);
  EXPECT_EQ(r.argmin_pairs, r.golay_pairs);
}

TEST(ExhaustiveMinPsc, IndependentOfWorkerCount) {
  for (int len = 1; len <= 6; ++len) {
    const SearchResult one = exhaustive_min_psc(len, 1e-9, 1);
    for (int workers : {2, 3, 7}) {
      const SearchResult many = exhaustive_min_psc(len, 1e-9, workers);
      EXPECT_EQ(many.min_psc, one.min_psc);
      EXPECT_EQ(many.argmin_pairs, one.argmin_pairs);
      EXPECT_EQ(many.golay_pairs, one.golay_pairs);
    }
    EXPECT_TRUE(one.bound_holds);
  }
}

TEST(ExhaustiveMinPsc, RejectsOutOfRangeLengths) {
  EXPECT_THROW(exhaustive_min_psc(0), DomainError);
  EXPECT_THROW(exhaustive_min_psc(7), DomainError);
  EXPECT_THROW(enumerate_golay_pairs(7), DomainError);
}

TEST(EnumerateGolayPairs, Counts) {
  EXPECT_EQ(enumerate_golay_pairs(1), 4u);
  EXPECT_EQ(enumerate_golay_pairs(2), 8u);
  EXPECT_EQ(enumerate_golay_pairs(3), 0u);
  EXPECT_EQ(enumerate_golay_pairs(4), 32u);
  EXPECT_EQ(enumerate_golay_pairs(5), 0u);
  EXPECT_EQ(enumerate_golay_pairs(6), 0u);
}

TEST(BinaryFromIndex, BitSetMeansMinusOne) {
  EXPECT_EQ(binary_from_index(0b0110, 4), Sequence::binary({1, -1, -1, 1}));
}

TEST(MonteCarlo, LengthOneIsDeterministic) {
  const McStats s = monte_carlo(1, 100, 42);
  EXPECT_EQ(s.mean_adf, 0.0);
  EXPECT_EQ(s.mean_cdf, 1.0);
  EXPECT_EQ(s.mean_psc, 1.0);
  EXPECT_EQ(s.se_adf, 0.0);
}

TEST(MonteCarlo, LengthTwoAdfIsExactlyOneHalf) {
  const McStats s = monte_carlo(2, 5000, 7);
  EXPECT_EQ(s.mean_adf, 0.5);
  EXPECT_EQ(s.mean_adf, 1.0 - 1.0 / 2);
  EXPECT_EQ(s.se_adf, 0.0);
  EXPECT_GT(s.se_cdf, 0.0);
}

TEST(MonteCarlo, MatchesExpectationsAtModerateLength) {
  const McStats s = monte_carlo(16, 4000, 3);
  EXPECT_LE(std::abs(s.mean_adf - (1.0 - 1.0 / 16)), 4 * s.se_adf);
  EXPECT_LE(std::abs(s.mean_cdf - 1.0), 4 * s.se_cdf);
}

TEST(MonteCarlo, BitwiseIdenticalAcrossWorkerCounts) {
  const McStats a = monte_carlo(33, 3001, 99, 1);
  for (int workers : {2, 4, 9}) {
    const McStats b = monte_carlo(33, 3001, 99, workers);
    EXPECT_EQ(a.mean_adf, b.mean_adf);
    EXPECT_EQ(a.mean_cdf, b.mean_cdf);
    EXPECT_EQ(a.mean_psc, b.mean_psc);
    EXPECT_EQ(a.se_psc, b.se_psc);
  }
  EXPECT_NE(monte_carlo(33, 3001, 100).mean_psc, a.mean_psc);
}

TEST(MonteCarlo, RejectsEmptyRuns) {
  EXPECT_THROW(monte_carlo(0, 10, 1), DomainError);
  EXPECT_THROW(monte_carlo(4, 0, 1), DomainError);
}

TEST(SplitMix64, ReferenceOutput) {
  // First outputs for seed 1234567 from the published reference implementation.
  SplitMix64 rng(1234567);
  EXPECT_EQ(rng.next(), 6457827717110365317ull);
  EXPECT_EQ(rng.next(), 3203168211198807973ull);
  EXPECT_EQ(rng.next(), 9817491932198370423ull);
}

TEST(IncrementalPsc, MatchesFullRecomputationAfterEveryFlip) {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = oracle::uniform_int(rng, 1, 24);
    IncrementalPsc state(random_signs(rng, n), random_signs(rng, n));
    for (int step = 0; step < 60; ++step) {
      const std::size_t k = oracle::uniform_int(rng, 0, 2 * n - 1);
      const double predicted = state.psc_after_flip(k);
      state.flip(k);
      const Sequence f = Sequence::binary(state.f()), g = Sequence::binary(state.g());
      ASSERT_EQ(predicted, state.psc());
      ASSERT_EQ(state.psc(), demerit_report(f, g).psc);
      ASSERT_NEAR(state.psc(), oracle::psc(f, g), 1e-12);
    }
  }
}

TEST(LocalSearch, FindsGolayPairAtLengthFour) {
  const SearchResult r = local_search_min_psc(4, 1000, 50, 1);
  EXPECT_EQ(r.min_psc, 1.0);
  EXPECT_GE(r.golay_count, 1u);
  EXPECT_TRUE(is_golay_pair(Sequence::binary(r.best_f), Sequence::binary(r.best_g)).verdict);
}

TEST(LocalSearch, ReachesExhaustiveMinimumWithGenerousBudget) {
  for (int len = 2; len <= 5; ++len) {
    const SearchResult local = local_search_min_psc(len, 1000, 400, 17);
    const SearchResult full = exhaustive_min_psc(len);
    EXPECT_GE(local.min_psc, full.min_psc - 1e-12);
    EXPECT_NEAR(local.min_psc, full.min_psc, 1e-12) << len;
  }
}

TEST(LocalSearch, NeverBeatsTheBoundAtLargerLengths) {
  for (int len : {7, 13, 32}) {
    const SearchResult r = local_search_min_psc(len, 200, 5, 3);
    EXPECT_TRUE(r.bound_holds);
    EXPECT_GE(r.min_psc, 1.0 - 1e-9);
  }
}

TEST(LocalSearch, DeterministicGivenSeed) {
  const SearchResult a = local_search_min_psc(9, 300, 10, 77);
  const SearchResult b = local_search_min_psc(9, 300, 10, 77);
  EXPECT_EQ(a.min_psc, b.min_psc);
  EXPECT_EQ(a.best_f, b.best_f);
  EXPECT_EQ(a.best_g, b.best_g);
  EXPECT_EQ(a.evaluated, b.evaluated);
  EXPECT_THROW(local_search_min_psc(1, 10, 1, 0), DomainError);
}

}  // namespace
}  // namespace psc
