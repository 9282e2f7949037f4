#include "geosim/batch_score.h"

#include "geosim/bleu.h"
#include "geosim/dtw.h"
#include "geosim/geobleu.h"
#include "geosim/numeric_format.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace geosim {

namespace {

ScoreReport scoreOne(const PairRecord& record, const ScoreOptions& options) {
  ScoreReport report;
  report.id = record.id;
  report.candidateLen = record.candidate.cols();
  report.referenceLen = record.reference.cols();
  if (options.metrics.geobleu) {
    report.geobleu = geobleu(record.candidate, record.reference, options.geo);
  }
  if (options.metrics.bleu) {
    report.bleu =
        bleuPair(record.candidate, record.reference, options.bleuMaxN, options.bleuWeights);
  }
  if (options.metrics.dtw) {
    const double raw = dtw(record.candidate, record.reference);
    report.dtw = raw;
    report.dtwNormalized =
        raw / static_cast<double>(std::max(report.candidateLen, report.referenceLen));
  }
  return report;
}

std::string csvField(const std::string& value) {
  if (value.find_first_of(",\"\r\n") == std::string::npos) {
    return value;
  }
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') {
      quoted += '"';
    }
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string optionalField(const std::optional<double>& value) {
  return value ? detail::formatSignificant9(*value) : std::string();
}

}  // namespace

std::vector<ScoreReport> scorePairs(const std::vector<PairRecord>& records,
                                    const ScoreOptions& options) {
  if (!options.metrics.any()) {
    throw std::invalid_argument("at least one metric must be selected");
  }
  options.geo.validate();
  detail::validateWeights(options.bleuMaxN, options.bleuWeights);
  for (const PairRecord& record : records) {
    detail::requireNonEmpty(record.candidate, "candidate");
    detail::requireNonEmpty(record.reference, "reference");
  }

  std::vector<ScoreReport> reports(records.size());
  if (records.empty()) {
    return reports;
  }

  unsigned workerCount = options.jobs > 0
                             ? static_cast<unsigned>(options.jobs)
                             : std::max(1u, std::thread::hardware_concurrency());
  workerCount = std::min<unsigned>(workerCount, records.size());

  std::atomic<std::size_t> nextIndex{0};
  std::atomic<bool> failed{false};
  std::exception_ptr firstError;
  std::mutex errorMutex;

  auto work = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t index = nextIndex.fetch_add(1);
      if (index >= records.size()) {
        return;
      }
      try {
        reports[index] = scoreOne(records[index], options);
      } catch (...) {
        std::lock_guard<std::mutex> lock(errorMutex);
        if (!firstError) {
          firstError = std::current_exception();
        }
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };

  if (workerCount == 1) {
    work();
  } else {
    std::vector<std::thread> workers;
    workers.reserve(workerCount);
    for (unsigned w = 0; w < workerCount; ++w) {
      workers.emplace_back(work);
    }
    for (std::thread& worker : workers) {
      worker.join();
    }
  }
  if (firstError) {
    std::rethrow_exception(firstError);
  }
  return reports;
}

void writeReportsCsv(std::ostream& out, const std::vector<ScoreReport>& reports) {
  out << "id,geobleu,bleu,dtw,dtw_normalized,candidate_len,reference_len\n";
  for (const ScoreReport& report : reports) {
    out << csvField(report.id) << ',' << optionalField(report.geobleu) << ','
        << optionalField(report.bleu) << ',' << optionalField(report.dtw) << ','
        << optionalField(report.dtwNormalized) << ',' << report.candidateLen << ','
        << report.referenceLen << "\n";
  }
}

std::pair<std::vector<std::string>, std::vector<std::string>> rankExtremes(
    const std::vector<ScoreReport>& reports, const std::string& metric, int k) {
  bool higherIsMoreSimilar;
  const std::optional<double> ScoreReport::*field;
  if (metric == "geobleu") {
    higherIsMoreSimilar = true;
    field = &ScoreReport::geobleu;
  } else if (metric == "bleu") {
    higherIsMoreSimilar = true;
    field = &ScoreReport::bleu;
  } else if (metric == "dtw") {
    higherIsMoreSimilar = false;
    field = &ScoreReport::dtw;
  } else if (metric == "dtw_normalized") {
    higherIsMoreSimilar = false;
    field = &ScoreReport::dtwNormalized;
  } else {
    throw std::invalid_argument("unknown metric \"" + metric + "\"");
  }
  if (k < 1 || static_cast<std::size_t>(k) > reports.size()) {
    throw std::invalid_argument("k must be between 1 and the report count");
  }

  struct Item {
    double value;
    const std::string* id;
  };
  std::vector<Item> items;
  items.reserve(reports.size());
  for (const ScoreReport& report : reports) {
    const std::optional<double>& value = report.*field;
    if (!value) {
      throw std::invalid_argument("metric \"" + metric + "\" missing from reports");
    }
    items.push_back(Item{*value, &report.id});
  }

  const auto moreSimilarFirst = [&](const Item& a, const Item& b) {
    if (a.value != b.value) {
      return higherIsMoreSimilar ? a.value > b.value : a.value < b.value;
    }
    return *a.id < *b.id;
  };
  const auto lessSimilarFirst = [&](const Item& a, const Item& b) {
    if (a.value != b.value) {
      return higherIsMoreSimilar ? a.value < b.value : a.value > b.value;
    }
    return *a.id < *b.id;
  };

  const auto take = [&](auto comparator) {
    std::vector<Item> sorted = items;
    std::partial_sort(sorted.begin(), sorted.begin() + k, sorted.end(), comparator);
    std::vector<std::string> ids;
    ids.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      ids.push_back(*sorted[static_cast<std::size_t>(i)].id);
    }
    return ids;
  };
  return {take(moreSimilarFirst), take(lessSimilarFirst)};
}

}  // namespace geosim
