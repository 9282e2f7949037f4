#pragma once

#include <Eigen/Core>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace geosim {

// A trajectory is an ordered sequence of 2D locations, one column per time
// step. Coordinates are unitless planar values; by convention either grid-cell
// indices (adjacent cells are distance 1 apart) or kilometers.
template <typename Scalar>
using Trajectory = Eigen::Matrix<Scalar, 2, Eigen::Dynamic>;

template <typename Scalar>
using Point = Eigen::Matrix<Scalar, 2, 1>;

using Trajectoryd = Trajectory<double>;
using Pointd = Point<double>;

enum class Side { Candidate, Reference };

// An n-wide window into a trajectory. A window's identity in any match pool is
// (source, start, width); two windows whose point contents coincide but sit at
// different positions are distinct entries.
template <typename Scalar>
struct NGram {
  Side source;
  Eigen::Index start;                          // 0-based window start
  Eigen::Matrix<Scalar, 2, Eigen::Dynamic> points;  // the n consecutive columns

  Eigen::Index width() const { return points.cols(); }
};

using NGramd = NGram<double>;

template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar euclidean(const Eigen::MatrixBase<DerivedA>& a,
                                    const Eigen::MatrixBase<DerivedB>& b) {
  return (a - b).norm();
}

// All sliding windows of width n in increasing start order. Empty when the
// trajectory is shorter than n; otherwise exactly length - n + 1 windows.
template <typename Scalar>
std::vector<NGram<Scalar>> extractNGrams(const Trajectory<Scalar>& trajectory,
                                         Eigen::Index n,
                                         Side source = Side::Candidate) {
  if (n < 1) {
    throw std::invalid_argument("n-gram width must be positive");
  }
  std::vector<NGram<Scalar>> grams;
  const Eigen::Index count = trajectory.cols() - n + 1;
  if (count <= 0) {
    return grams;
  }
  grams.reserve(static_cast<std::size_t>(count));
  for (Eigen::Index start = 0; start < count; ++start) {
    grams.push_back(NGram<Scalar>{source, start, trajectory.middleCols(start, n)});
  }
  return grams;
}

// Parameters of the proximity-weighted n-gram score: beta is the distance
// decay coefficient of the similarity kernel exp(-beta * d), maxN the largest
// n-gram width, weights the per-n weights of the geometric mean (empty means
// uniform 1/maxN).
struct GeoBleuParams {
  double beta = 1.0;
  int maxN = 3;
  std::vector<double> weights;

  void validate() const {
    if (!(beta > 0.0) || !std::isfinite(beta)) {
      throw std::invalid_argument("beta must be a positive finite number");
    }
    if (maxN < 1) {
      throw std::invalid_argument("maxN must be >= 1");
    }
    if (!weights.empty()) {
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
  }
};

namespace detail {

template <typename Scalar>
void requireNonEmpty(const Trajectory<Scalar>& trajectory, const char* role) {
  if (trajectory.cols() == 0) {
    throw std::invalid_argument(std::string(role) + " trajectory is empty");
  }
}

}  // namespace detail

}  // namespace geosim
