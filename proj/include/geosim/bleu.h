#pragma once

#include "geosim/trajectory.h"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

namespace geosim {

namespace detail {

// Flattened window contents; exact coordinate equality is the match criterion,
// so the lexicographic order of the raw values is a usable map key.
template <typename Scalar>
std::vector<Scalar> ngramKey(const Trajectory<Scalar>& trajectory, Eigen::Index start,
                             Eigen::Index n) {
  std::vector<Scalar> key;
  key.reserve(static_cast<std::size_t>(2 * n));
  for (Eigen::Index k = 0; k < n; ++k) {
    key.push_back(trajectory(0, start + k));
    key.push_back(trajectory(1, start + k));
  }
  return key;
}

template <typename Scalar>
void requirePairedCorpus(const std::vector<Trajectory<Scalar>>& candidates,
                         const std::vector<Trajectory<Scalar>>& references) {
  if (candidates.empty() || references.empty()) {
    throw std::invalid_argument("candidate and reference lists must be non-empty");
  }
  if (candidates.size() != references.size()) {
    throw std::invalid_argument("candidate and reference lists differ in length");
  }
  for (const auto& trajectory : candidates) {
    requireNonEmpty(trajectory, "candidate");
  }
  for (const auto& trajectory : references) {
    requireNonEmpty(trajectory, "reference");
  }
}

inline void validateWeights(int maxN, const std::vector<double>& weights) {
  if (maxN < 1) {
    throw std::invalid_argument("maxN must be >= 1");
  }
  if (weights.empty()) {
    return;
  }
  if (static_cast<int>(weights.size()) != maxN) {
    throw std::invalid_argument("weights must have maxN entries");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("weights must be positive finite numbers");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("weights must sum to 1");
  }
}

// Weights actually applied once the width range is clamped to effectiveN:
// uniform when clamping kicked in or none were given, the caller's otherwise.
inline std::vector<double> resolveWeights(int requestedN, int effectiveN,
                                          const std::vector<double>& weights) {
  if (effectiveN < requestedN || weights.empty()) {
    return std::vector<double>(static_cast<std::size_t>(effectiveN),
                               1.0 / static_cast<double>(effectiveN));
  }
  return weights;
}

}  // namespace detail

inline double brevityPenaltyFromLengths(Eigen::Index candidateTotal,
                                        Eigen::Index referenceTotal) {
  if (candidateTotal > referenceTotal) {
    return 1.0;
  }
  return std::exp(1.0 - static_cast<double>(referenceTotal) /
                            static_cast<double>(candidateTotal));
}

// Clipped n-gram precision over a corpus of index-paired sequences: each
// candidate window scores a match while an identical, not yet consumed window
// remains in its paired reference. Returns 0 when no candidate has a window of
// width n.
template <typename Scalar>
Scalar modifiedPrecision(const std::vector<Trajectory<Scalar>>& candidates,
                         const std::vector<Trajectory<Scalar>>& references,
                         Eigen::Index n) {
  detail::requirePairedCorpus(candidates, references);
  if (n < 1) {
    throw std::invalid_argument("n-gram width must be positive");
  }

  long long matched = 0;
  long long total = 0;
  for (std::size_t pair = 0; pair < candidates.size(); ++pair) {
    const auto& candidate = candidates[pair];
    const auto& reference = references[pair];

    const Eigen::Index candidateWindows = candidate.cols() - n + 1;
    if (candidateWindows <= 0) {
      continue;
    }
    total += candidateWindows;

    std::map<std::vector<Scalar>, long long> remaining;
    const Eigen::Index referenceWindows = reference.cols() - n + 1;
    for (Eigen::Index start = 0; start < referenceWindows; ++start) {
      ++remaining[detail::ngramKey(reference, start, n)];
    }
    for (Eigen::Index start = 0; start < candidateWindows; ++start) {
      const auto it = remaining.find(detail::ngramKey(candidate, start, n));
      if (it != remaining.end() && it->second > 0) {
        --it->second;
        ++matched;
      }
    }
  }
  if (total == 0) {
    return Scalar(0);
  }
  return static_cast<Scalar>(static_cast<double>(matched) /
                             static_cast<double>(total));
}

template <typename Scalar>
Scalar brevityPenalty(const std::vector<Trajectory<Scalar>>& candidates,
                      const std::vector<Trajectory<Scalar>>& references) {
  detail::requirePairedCorpus(candidates, references);
  Eigen::Index candidateTotal = 0;
  Eigen::Index referenceTotal = 0;
  for (const auto& trajectory : candidates) {
    candidateTotal += trajectory.cols();
  }
  for (const auto& trajectory : references) {
    referenceTotal += trajectory.cols();
  }
  return static_cast<Scalar>(brevityPenaltyFromLengths(candidateTotal, referenceTotal));
}

// Corpus score: brevity penalty times the weighted geometric mean of the
// modified precisions for n = 1..maxN. maxN is clamped to the shortest
// sequence on either side, with the weights made uniform when that happens;
// any zero precision makes the whole score 0.
template <typename Scalar>
Scalar bleu(const std::vector<Trajectory<Scalar>>& candidates,
            const std::vector<Trajectory<Scalar>>& references, int maxN = 4,
            const std::vector<double>& weights = {}) {
  detail::requirePairedCorpus(candidates, references);
  detail::validateWeights(maxN, weights);

  Eigen::Index shortest = candidates.front().cols();
  for (const auto& trajectory : candidates) {
    shortest = std::min(shortest, trajectory.cols());
  }
  for (const auto& trajectory : references) {
    shortest = std::min(shortest, trajectory.cols());
  }
  const int effectiveN = std::min<int>(maxN, static_cast<int>(shortest));
  const std::vector<double> applied = detail::resolveWeights(maxN, effectiveN, weights);

  double logPrecisionSum = 0.0;
  for (int n = 1; n <= effectiveN; ++n) {
    const double precision =
        static_cast<double>(modifiedPrecision(candidates, references, n));
    if (precision == 0.0) {
      return Scalar(0);
    }
    logPrecisionSum += applied[static_cast<std::size_t>(n - 1)] * std::log(precision);
  }
  const double penalty = static_cast<double>(brevityPenalty(candidates, references));
  return static_cast<Scalar>(penalty * std::exp(logPrecisionSum));
}

// The per-pair mode: a single candidate/reference pair treated as a
// one-sentence corpus.
template <typename Scalar>
Scalar bleuPair(const Trajectory<Scalar>& candidate, const Trajectory<Scalar>& reference,
                int maxN = 4, const std::vector<double>& weights = {}) {
  const std::vector<Trajectory<Scalar>> candidates{candidate};
  const std::vector<Trajectory<Scalar>> references{reference};
  return bleu(candidates, references, maxN, weights);
}

}  // namespace geosim
