#include "geosim/bleu.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "oracles.h"
#include "test_helpers.h"

namespace {

using geosim::bleu;
using geosim::bleuPair;
using geosim::brevityPenalty;
using geosim::brevityPenaltyFromLengths;
using geosim::modifiedPrecision;
using geosim::Trajectoryd;

Trajectoryd makeTrajectory(std::initializer_list<std::pair<double, double>> points) {
  Trajectoryd trajectory(2, static_cast<Eigen::Index>(points.size()));
  Eigen::Index i = 0;
  for (const auto& [x, y] : points) {
    trajectory(0, i) = x;
    trajectory(1, i) = y;
    ++i;
  }
  return trajectory;
}

// Six pairwise-distinct points used to build prefix examples.
const Trajectoryd kSixDistinct =
    makeTrajectory({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}});

TEST(ModifiedPrecision, IdenticalCorpusScoresOne) {
  const std::vector<Trajectoryd> corpus{kSixDistinct,
                                        makeTrajectory({{7, 7}, {8, 8}})};
  for (Eigen::Index n = 1; n <= 2; ++n) {
    EXPECT_DOUBLE_EQ(modifiedPrecision(corpus, corpus, n), 1.0);
  }
}

TEST(ModifiedPrecision, DisjointAlphabetsScoreZero) {
  const std::vector<Trajectoryd> candidates{makeTrajectory({{0, 0}, {1, 0}})};
  const std::vector<Trajectoryd> references{makeTrajectory({{9, 9}, {8, 8}})};
  EXPECT_DOUBLE_EQ(modifiedPrecision(candidates, references, 1), 0.0);
}

TEST(ModifiedPrecision, ClippingConsumesReferenceOccurrences) {
  const std::vector<Trajectoryd> candidates{makeTrajectory({{0, 0}, {0, 0}})};
  const std::vector<Trajectoryd> references{makeTrajectory({{0, 0}, {1, 0}})};
  EXPECT_DOUBLE_EQ(modifiedPrecision(candidates, references, 1), 0.5);
}

TEST(ModifiedPrecision, ZeroWhenNoCandidateWindowExists) {
  const std::vector<Trajectoryd> candidates{makeTrajectory({{0, 0}})};
  const std::vector<Trajectoryd> references{makeTrajectory({{0, 0}, {1, 0}})};
  EXPECT_DOUBLE_EQ(modifiedPrecision(candidates, references, 3), 0.0);
}

TEST(ModifiedPrecision, NumeratorNeverExceedsEitherWindowCount) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const auto candidate = testhelpers::randomGridTrajectory(rng, 2 + trial % 6, 2);
    const auto reference = testhelpers::randomGridTrajectory(rng, 2 + (trial + 3) % 6, 2);
    for (Eigen::Index n = 1; n <= 2; ++n) {
      const Eigen::Index candidateWindows = candidate.cols() - n + 1;
      const Eigen::Index referenceWindows = reference.cols() - n + 1;
      if (candidateWindows <= 0) {
        continue;
      }
      const double precision = modifiedPrecision(
          std::vector<Trajectoryd>{candidate}, std::vector<Trajectoryd>{reference}, n);
      const double matched = precision * static_cast<double>(candidateWindows);
      EXPECT_LE(matched,
                static_cast<double>(std::min(candidateWindows,
                                             std::max<Eigen::Index>(referenceWindows, 0))) +
                    1e-9);
      EXPECT_GE(precision, 0.0);
      EXPECT_LE(precision, 1.0);
    }
  }
}

TEST(BrevityPenalty, ThreeBranches) {
  EXPECT_DOUBLE_EQ(brevityPenaltyFromLengths(4, 4), 1.0);
  EXPECT_DOUBLE_EQ(brevityPenaltyFromLengths(3, 6), std::exp(-1.0));
  EXPECT_DOUBLE_EQ(brevityPenaltyFromLengths(10, 5), 1.0);

  const std::vector<Trajectoryd> shortSide{makeTrajectory({{0, 0}, {1, 0}, {2, 0}})};
  const std::vector<Trajectoryd> longSide{kSixDistinct};
  EXPECT_DOUBLE_EQ(brevityPenalty(shortSide, longSide), std::exp(-1.0));
}

TEST(Bleu, IdenticalInputsScoreOne) {
  EXPECT_DOUBLE_EQ(bleuPair(kSixDistinct, kSixDistinct), 1.0);
}

TEST(Bleu, DisjointAlphabetsScoreZero) {
  const auto candidate = makeTrajectory({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const auto reference = makeTrajectory({{9, 9}, {8, 8}, {7, 7}, {6, 6}});
  EXPECT_DOUBLE_EQ(bleuPair(candidate, reference), 0.0);
}

TEST(Bleu, PrefixCandidateEarnsOnlyTheBrevityPenalty) {
  const Trajectoryd candidate = kSixDistinct.leftCols(3);
  EXPECT_DOUBLE_EQ(bleuPair(candidate, kSixDistinct), std::exp(-1.0));
}

TEST(Bleu, PairModeEqualsSingletonCorpus) {
  std::mt19937 rng(47);
  const auto candidate = testhelpers::randomGridTrajectory(rng, 8, 3);
  const auto reference = testhelpers::randomGridTrajectory(rng, 9, 3);
  EXPECT_EQ(bleuPair(candidate, reference),
            bleu(std::vector<Trajectoryd>{candidate},
                 std::vector<Trajectoryd>{reference}));
}

TEST(Bleu, CorpusScoreInvariantUnderPairPermutation) {
  std::mt19937 rng(53);
  std::vector<Trajectoryd> candidates;
  std::vector<Trajectoryd> references;
  for (int pair = 0; pair < 6; ++pair) {
    candidates.push_back(testhelpers::randomGridTrajectory(rng, 5 + pair, 3));
    references.push_back(testhelpers::randomGridTrajectory(rng, 6 + pair, 3));
  }
  const double original = bleu(candidates, references);

  std::vector<std::size_t> order{3, 0, 5, 1, 4, 2};
  std::vector<Trajectoryd> permutedCandidates;
  std::vector<Trajectoryd> permutedReferences;
  for (std::size_t index : order) {
    permutedCandidates.push_back(candidates[index]);
    permutedReferences.push_back(references[index]);
  }
  EXPECT_EQ(bleu(permutedCandidates, permutedReferences), original);
}

TEST(Bleu, ShortSequencesClampTheWidthRange) {
  // Shortest sequence has length 2, so maxN=4 clamps to 2 with uniform
  // weights; both precisions land strictly between 0 and 1.
  const std::vector<Trajectoryd> candidates{
      makeTrajectory({{0, 0}, {1, 0}}), makeTrajectory({{0, 0}, {9, 9}})};
  const std::vector<Trajectoryd> references{
      kSixDistinct, makeTrajectory({{0, 0}, {1, 0}, {2, 0}, {3, 0}})};
  const double p1 = modifiedPrecision(candidates, references, 1);
  const double p2 = modifiedPrecision(candidates, references, 2);
  EXPECT_DOUBLE_EQ(p1, 0.75);
  EXPECT_DOUBLE_EQ(p2, 0.5);
  const double expected = brevityPenaltyFromLengths(4, 10) *
                          std::exp(0.5 * std::log(p1) + 0.5 * std::log(p2));
  EXPECT_DOUBLE_EQ(bleu(candidates, references, 4), expected);
}

TEST(Bleu, AgreesWithTokenOracle) {
  std::mt19937 rng(59);
  std::uniform_int_distribution<int> lengthDist(4, 20);
  std::uniform_int_distribution<int> tokenDist(0, 5);
  for (int trial = 0; trial < 30; ++trial) {
    oracles::TokenSequence candidate(lengthDist(rng));
    oracles::TokenSequence reference(lengthDist(rng));
    for (int& token : candidate) {
      token = tokenDist(rng);
    }
    for (int& token : reference) {
      token = tokenDist(rng);
    }
    const double mine = bleuPair(oracles::tokensToTrajectory(candidate),
                                 oracles::tokensToTrajectory(reference), 4);
    const double oracle = oracles::tokenBleu({candidate}, {reference}, 4);
    EXPECT_NEAR(mine, oracle, 1e-9);
  }
}

TEST(Bleu, RejectsMalformedCorpora) {
  const std::vector<Trajectoryd> one{kSixDistinct};
  const std::vector<Trajectoryd> two{kSixDistinct, kSixDistinct};
  EXPECT_THROW(bleu(one, two), std::invalid_argument);
  EXPECT_THROW(bleu(std::vector<Trajectoryd>{}, std::vector<Trajectoryd>{}),
               std::invalid_argument);
  EXPECT_THROW(modifiedPrecision(one, one, 0), std::invalid_argument);
  EXPECT_THROW(bleu(one, one, 2, std::vector<double>{0.9, 0.2}),
               std::invalid_argument);
  EXPECT_THROW(bleu(one, one, 2, std::vector<double>{1.0}), std::invalid_argument);
}

}  // namespace
