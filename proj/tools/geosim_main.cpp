#include "geosim/batch_score.h"
#include "geosim/pair_io.h"
#include "geosim/toy_benchmark.h"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

std::vector<double> parseWeightList(const std::string& text) {
  std::vector<double> weights;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, ',')) {
    std::size_t consumed = 0;
    double value = 0.0;
    try {
      value = std::stod(part, &consumed);
    } catch (const std::exception&) {
      throw std::runtime_error("invalid weight \"" + part + "\"");
    }
    if (consumed != part.size()) {
      throw std::runtime_error("invalid weight \"" + part + "\"");
    }
    weights.push_back(value);
  }
  if (weights.empty()) {
    throw std::runtime_error("--weights must list at least one value");
  }
  return weights;
}

geosim::MetricSelection selectionFromName(const std::string& metric) {
  geosim::MetricSelection selection{false, false, false};
  if (metric == "all") {
    selection.geobleu = selection.bleu = selection.dtw = true;
  } else if (metric == "geobleu") {
    selection.geobleu = true;
  } else if (metric == "bleu") {
    selection.bleu = true;
  } else {
    selection.dtw = true;
  }
  return selection;
}

std::vector<geosim::PairRecord> readPairs(const std::string& path) {
  if (path == "-") {
    return geosim::parsePairs(std::cin);
  }
  std::ifstream file(path);
  if (!file) {
    throw std::runtime_error("cannot open input file: " + path);
  }
  return geosim::parsePairs(file);
}

template <typename WriteFn>
void withOutput(const std::string& path, WriteFn&& write) {
  if (path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream file(path);
  if (!file) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  write(file);
  if (!file) {
    throw std::runtime_error("failed writing output file: " + path);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Similarity and distance measures for geospatial sequences"};
  app.require_subcommand(1);

  auto* score =
      app.add_subcommand("score", "Score candidate/reference pairs from a JSON Lines file");
  std::string scoreInput = "-";
  std::string scoreOutput = "-";
  std::string scoreMetric = "all";
  std::string scoreWeights;
  double scoreBeta = 1.0;
  int scoreMaxN = 0;
  int scoreJobs = 0;
  score->add_option("input", scoreInput, "Pair file (JSON Lines); - reads stdin");
  score->add_option("--metric", scoreMetric, "Metric to compute (default all)")
      ->check(CLI::IsMember({"geobleu", "bleu", "dtw", "all"}));
  score->add_option("--beta", scoreBeta, "Distance decay coefficient (default 1)")
      ->check(CLI::PositiveNumber);
  auto* scoreMaxNOption =
      score->add_option("--max-n", scoreMaxN,
                        "Largest n-gram width for both scores (defaults: 3 for "
                        "geobleu, 4 for bleu)")
          ->check(CLI::PositiveNumber);
  score->add_option("--weights", scoreWeights, "Comma-separated per-n weights")
      ->needs(scoreMaxNOption);
  score->add_option("--jobs", scoreJobs, "Worker threads (default: all cores)")
      ->check(CLI::PositiveNumber);
  score->add_option("--output", scoreOutput, "Output CSV path; - writes stdout");

  auto* rank = app.add_subcommand(
      "rank", "List the k most- and least-similar pair ids under one metric");
  std::string rankInput = "-";
  std::string rankOutput = "-";
  std::string rankMetric = "geobleu";
  std::string rankWeights;
  double rankBeta = 1.0;
  int rankMaxN = 0;
  int rankK = 20;
  int rankJobs = 0;
  rank->add_option("input", rankInput, "Pair file (JSON Lines); - reads stdin");
  rank->add_option("--metric", rankMetric, "Ranking metric (default geobleu)")
      ->check(CLI::IsMember({"geobleu", "bleu", "dtw", "dtw_normalized"}));
  rank->add_option("-k,--count", rankK, "Pairs to keep on each end (default 20)")
      ->check(CLI::PositiveNumber);
  rank->add_option("--beta", rankBeta, "Distance decay coefficient (default 1)")
      ->check(CLI::PositiveNumber);
  auto* rankMaxNOption = rank->add_option("--max-n", rankMaxN, "Largest n-gram width")
                             ->check(CLI::PositiveNumber);
  rank->add_option("--weights", rankWeights, "Comma-separated per-n weights")
      ->needs(rankMaxNOption);
  rank->add_option("--jobs", rankJobs, "Worker threads (default: all cores)")
      ->check(CLI::PositiveNumber);
  rank->add_option("--output", rankOutput, "Output CSV path; - writes stdout");

  auto* sweep =
      app.add_subcommand("toy-sweep", "Emit the circular phase-shift sweep as CSV");
  geosim::CircleConfig circle;
  geosim::GeoBleuParams sweepParams;
  std::string sweepOutput = "-";
  sweep->add_option("--cells", circle.cellCount, "Cells on the circle (default 36)")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--radius-km", circle.radiusKm, "Circle radius in km (default 10)")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--cell-size-km", circle.cellSizeKm, "Cell side in km (default 0.5)")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--beta", sweepParams.beta, "Distance decay coefficient (default 1)")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--max-n", sweepParams.maxN, "Largest n-gram width (default 3)")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--output", sweepOutput, "Output CSV path; - writes stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (score->parsed()) {
      geosim::ScoreOptions options;
      options.metrics = selectionFromName(scoreMetric);
      options.geo.beta = scoreBeta;
      options.jobs = scoreJobs;
      if (scoreMaxNOption->count() > 0) {
        options.geo.maxN = scoreMaxN;
        options.bleuMaxN = scoreMaxN;
      }
      if (!scoreWeights.empty()) {
        options.geo.weights = parseWeightList(scoreWeights);
        options.bleuWeights = options.geo.weights;
      }
      const auto reports = geosim::scorePairs(readPairs(scoreInput), options);
      withOutput(scoreOutput,
                 [&](std::ostream& out) { geosim::writeReportsCsv(out, reports); });
    } else if (rank->parsed()) {
      geosim::ScoreOptions options;
      options.metrics = selectionFromName(rankMetric == "dtw_normalized" ? "dtw" : rankMetric);
      options.geo.beta = rankBeta;
      options.jobs = rankJobs;
      if (rankMaxNOption->count() > 0) {
        options.geo.maxN = rankMaxN;
        options.bleuMaxN = rankMaxN;
      }
      if (!rankWeights.empty()) {
        options.geo.weights = parseWeightList(rankWeights);
        options.bleuWeights = options.geo.weights;
      }
      const auto reports = geosim::scorePairs(readPairs(rankInput), options);
      if (reports.empty()) {
        throw std::runtime_error("no pairs to rank");
      }
      const int effectiveK =
          std::min(rankK, static_cast<int>(std::min<std::size_t>(
                              reports.size(), std::numeric_limits<int>::max())));
      const auto [top, bottom] = geosim::rankExtremes(reports, rankMetric, effectiveK);
      withOutput(rankOutput, [&](std::ostream& out) {
        out << "position,top_id,bottom_id\n";
        for (std::size_t i = 0; i < top.size(); ++i) {
          out << (i + 1) << ',' << top[i] << ',' << bottom[i] << "\n";
        }
      });
    } else {
      const auto rows = geosim::runSweep(circle, sweepParams);
      withOutput(sweepOutput, [&](std::ostream& out) {
        geosim::writeSweepCsv(out, circle, sweepParams, rows);
      });
    }
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
