#pragma once

#include "geosim/bleu.h"
#include "geosim/trajectory.h"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace geosim {

// One matched candidate/reference window pair and its similarity.
template <typename Scalar>
struct MatchPair {
  NGram<Scalar> candidateNGram;
  NGram<Scalar> referenceNGram;
  Scalar similarity;
};

using MatchPaird = MatchPair<double>;

// Proximity kernel for two windows of equal width n: the product over the
// paired points of exp(-beta * distance), computed as a single exponential of
// the summed distances. Equals 1 exactly when the windows coincide pointwise
// and decays toward 0 as they move apart, without ever being negative.
template <typename Scalar>
Scalar ngramSimilarity(const NGram<Scalar>& left, const NGram<Scalar>& right,
                       double beta) {
  if (left.width() != right.width()) {
    throw std::invalid_argument("n-gram widths differ");
  }
  const Scalar distanceSum = (left.points - right.points).colwise().norm().sum();
  return std::exp(static_cast<Scalar>(-beta) * distanceSum);
}

namespace detail {

template <typename Scalar>
Eigen::Index commonWidth(const std::vector<NGram<Scalar>>& candidateNGrams,
                         const std::vector<NGram<Scalar>>& referenceNGrams) {
  Eigen::Index width = -1;
  for (const auto* list : {&candidateNGrams, &referenceNGrams}) {
    for (const auto& gram : *list) {
      if (width < 0) {
        width = gram.width();
      } else if (gram.width() != width) {
        throw std::invalid_argument("n-gram widths differ");
      }
    }
  }
  return width;
}

}  // namespace detail

// Greedy one-to-one matching: materialize every candidate/reference window
// pair with its similarity, sort by similarity in decreasing order (ties by
// candidate start, then reference start, then list position), and repeatedly
// emit the best pair whose two windows are both still unused. Windows are
// identified by position, not by point contents, so equal-valued windows at
// different positions are consumed independently. Emits exactly
// min(|candidate|, |reference|) pairs.
template <typename Scalar>
std::vector<MatchPair<Scalar>> greedyMatch(
    const std::vector<NGram<Scalar>>& candidateNGrams,
    const std::vector<NGram<Scalar>>& referenceNGrams, double beta) {
  std::vector<MatchPair<Scalar>> matches;
  if (candidateNGrams.empty() || referenceNGrams.empty()) {
    return matches;
  }
  detail::commonWidth(candidateNGrams, referenceNGrams);

  struct Entry {
    Scalar similarity;
    Eigen::Index candidateStart;
    Eigen::Index referenceStart;
    std::size_t candidatePos;
    std::size_t referencePos;
  };
  std::vector<Entry> pool;
  pool.reserve(candidateNGrams.size() * referenceNGrams.size());
  for (std::size_t c = 0; c < candidateNGrams.size(); ++c) {
    for (std::size_t r = 0; r < referenceNGrams.size(); ++r) {
      pool.push_back(Entry{ngramSimilarity(candidateNGrams[c], referenceNGrams[r], beta),
                           candidateNGrams[c].start, referenceNGrams[r].start, c, r});
    }
  }
  std::sort(pool.begin(), pool.end(), [](const Entry& a, const Entry& b) {
    if (a.similarity != b.similarity) {
      return a.similarity > b.similarity;
    }
    if (a.candidateStart != b.candidateStart) {
      return a.candidateStart < b.candidateStart;
    }
    if (a.referenceStart != b.referenceStart) {
      return a.referenceStart < b.referenceStart;
    }
    if (a.candidatePos != b.candidatePos) {
      return a.candidatePos < b.candidatePos;
    }
    return a.referencePos < b.referencePos;
  });

  // Skip-on-pop over the sorted pool, equivalent to physically removing every
  // entry that shares a consumed window.
  const std::size_t target = std::min(candidateNGrams.size(), referenceNGrams.size());
  std::vector<char> candidateUsed(candidateNGrams.size(), 0);
  std::vector<char> referenceUsed(referenceNGrams.size(), 0);
  matches.reserve(target);
  for (const Entry& entry : pool) {
    if (candidateUsed[entry.candidatePos] || referenceUsed[entry.referencePos]) {
      continue;
    }
    candidateUsed[entry.candidatePos] = 1;
    referenceUsed[entry.referencePos] = 1;
    matches.push_back(MatchPair<Scalar>{candidateNGrams[entry.candidatePos],
                                        referenceNGrams[entry.referencePos],
                                        entry.similarity});
    if (matches.size() == target) {
      break;
    }
  }
  return matches;
}

// Matched similarity mass over the candidate window count for one width n.
// Both sequences must be at least n long.
template <typename Scalar>
Scalar ngramPrecision(const Trajectory<Scalar>& candidate,
                      const Trajectory<Scalar>& reference, Eigen::Index n,
                      double beta) {
  if (n < 1) {
    throw std::invalid_argument("n-gram width must be positive");
  }
  if (candidate.cols() < n || reference.cols() < n) {
    throw std::invalid_argument("trajectory shorter than the n-gram width");
  }
  const auto candidateNGrams = extractNGrams(candidate, n, Side::Candidate);
  const auto referenceNGrams = extractNGrams(reference, n, Side::Reference);
  const auto matches = greedyMatch(candidateNGrams, referenceNGrams, beta);

  long double similaritySum = 0.0L;
  for (const auto& match : matches) {
    similaritySum += static_cast<long double>(match.similarity);
  }
  return static_cast<Scalar>(similaritySum /
                             static_cast<long double>(candidateNGrams.size()));
}

// Proximity-weighted n-gram score of one candidate/reference pair: the pair
// brevity penalty times the weighted geometric mean of ngramPrecision for
// n = 1..maxN, with maxN clamped to the shorter sequence (uniform weights when
// clamped). 1 exactly for identical inputs, asymmetric in general.
template <typename Scalar>
Scalar geobleu(const Trajectory<Scalar>& candidate, const Trajectory<Scalar>& reference,
               const GeoBleuParams& params = {}) {
  params.validate();
  detail::requireNonEmpty(candidate, "candidate");
  detail::requireNonEmpty(reference, "reference");

  const Eigen::Index shortest = std::min(candidate.cols(), reference.cols());
  const int effectiveN = std::min<int>(params.maxN, static_cast<int>(shortest));
  const std::vector<double> weights =
      detail::resolveWeights(params.maxN, effectiveN, params.weights);

  double logPrecisionSum = 0.0;
  for (int n = 1; n <= effectiveN; ++n) {
    const double precision =
        static_cast<double>(ngramPrecision(candidate, reference, n, params.beta));
    // The kernel never reaches 0 mathematically, but it can underflow for
    // absurdly distant pairs; log then yields -inf and the score collapses to 0.
    logPrecisionSum += weights[static_cast<std::size_t>(n - 1)] * std::log(precision);
  }
  const double penalty = brevityPenaltyFromLengths(candidate.cols(), reference.cols());
  return static_cast<Scalar>(penalty * std::exp(logPrecisionSum));
}

}  // namespace geosim
