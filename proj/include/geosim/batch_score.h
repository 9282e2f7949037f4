#pragma once

#include "geosim/pair_io.h"
#include "geosim/trajectory.h"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace geosim {

struct MetricSelection {
  bool geobleu = true;
  bool bleu = true;
  bool dtw = true;

  bool any() const { return geobleu || bleu || dtw; }
};

struct ScoreOptions {
  MetricSelection metrics;
  GeoBleuParams geo;
  int bleuMaxN = 4;
  std::vector<double> bleuWeights;  // empty = uniform
  int jobs = 0;                     // 0 = available parallelism
};

// Per-pair results; fields of unselected metrics stay empty.
struct ScoreReport {
  std::string id;
  std::optional<double> geobleu;
  std::optional<double> bleu;
  std::optional<double> dtw;
  std::optional<double> dtwNormalized;
  Eigen::Index candidateLen = 0;
  Eigen::Index referenceLen = 0;
};

// One report per record, in input order regardless of worker count. Pairs are
// scored by a bounded worker pool with no shared mutable state; any per-pair
// failure aborts the whole run.
std::vector<ScoreReport> scorePairs(const std::vector<PairRecord>& records,
                                    const ScoreOptions& options = {});

// CSV with header id,geobleu,bleu,dtw,dtw_normalized,candidate_len,
// reference_len and floats at 9 significant digits.
void writeReportsCsv(std::ostream& out, const std::vector<ScoreReport>& reports);

// Ids of the k most similar and k least similar pairs under one metric
// ("geobleu", "bleu", "dtw", or "dtw_normalized"; the dtw variants rank
// smaller values as more similar). Both lists order ties by id ascending; the
// bottom list starts with the least similar pair.
std::pair<std::vector<std::string>, std::vector<std::string>> rankExtremes(
    const std::vector<ScoreReport>& reports, const std::string& metric, int k);

}  // namespace geosim
