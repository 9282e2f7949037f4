#pragma once

#include "geosim/trajectory.h"

#include <Eigen/Core>

#include <algorithm>
#include <utility>
#include <vector>

namespace geosim {

// An alignment between two sequences of lengths M and N: starts at (0,0),
// ends at (M-1,N-1), indices non-decreasing, consecutive deltas restricted to
// {(1,1),(1,0),(0,1)}.
struct WarpPath {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> pairs;

  bool isValidFor(Eigen::Index candidateLength, Eigen::Index referenceLength) const {
    if (pairs.empty()) {
      return false;
    }
    if (pairs.front() != std::pair<Eigen::Index, Eigen::Index>{0, 0}) {
      return false;
    }
    if (pairs.back() !=
        std::pair<Eigen::Index, Eigen::Index>{candidateLength - 1, referenceLength - 1}) {
      return false;
    }
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Eigen::Index di = pairs[k].first - pairs[k - 1].first;
      const Eigen::Index dj = pairs[k].second - pairs[k - 1].second;
      const bool validStep =
          (di == 1 && dj == 1) || (di == 1 && dj == 0) || (di == 0 && dj == 1);
      if (!validStep) {
        return false;
      }
    }
    return true;
  }
};

template <typename Scalar>
Scalar warpPathCost(const Trajectory<Scalar>& candidate,
                    const Trajectory<Scalar>& reference, const WarpPath& path) {
  Scalar cost = 0;
  for (const auto& [i, j] : path.pairs) {
    cost += euclidean(candidate.col(i), reference.col(j));
  }
  return cost;
}

// Minimum total pointwise distance over all warping paths, by the standard
// O(M*N) dynamic program with an O(min(M,N)) rolling row. The roles are
// canonicalized so that dtw(x, y) and dtw(y, x) run the identical computation.
template <typename Scalar>
Scalar dtw(const Trajectory<Scalar>& candidate, const Trajectory<Scalar>& reference) {
  detail::requireNonEmpty(candidate, "candidate");
  detail::requireNonEmpty(reference, "reference");

  const bool candidateShorter = candidate.cols() < reference.cols();
  const Trajectory<Scalar>& longer = candidateShorter ? reference : candidate;
  const Trajectory<Scalar>& shorter = candidateShorter ? candidate : reference;
  const Eigen::Index rows = longer.cols();
  const Eigen::Index cols = shorter.cols();

  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> best(cols);
  best(0) = euclidean(longer.col(0), shorter.col(0));
  for (Eigen::Index j = 1; j < cols; ++j) {
    best(j) = best(j - 1) + euclidean(longer.col(0), shorter.col(j));
  }
  for (Eigen::Index i = 1; i < rows; ++i) {
    Scalar diagonal = best(0);
    best(0) += euclidean(longer.col(i), shorter.col(0));
    for (Eigen::Index j = 1; j < cols; ++j) {
      const Scalar previous = best(j);
      best(j) = euclidean(longer.col(i), shorter.col(j)) +
                std::min({diagonal, previous, best(j - 1)});
      diagonal = previous;
    }
  }
  return best(cols - 1);
}

// Raw cost divided by the longer sequence's length.
template <typename Scalar>
Scalar dtwNormalized(const Trajectory<Scalar>& candidate,
                     const Trajectory<Scalar>& reference) {
  const auto longest = std::max(candidate.cols(), reference.cols());
  return dtw(candidate, reference) / static_cast<Scalar>(longest);
}

}  // namespace geosim
