#include "geosim/toy_benchmark.h"

#include "geosim/dtw.h"
#include "geosim/geobleu.h"
#include "geosim/numeric_format.h"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace geosim {

void CircleConfig::validate() const {
  if (cellCount < 1) {
    throw std::invalid_argument("cellCount must be positive");
  }
  if (!(radiusKm > 0.0) || !(cellSizeKm > 0.0)) {
    throw std::invalid_argument("radiusKm and cellSizeKm must be positive");
  }
}

Trajectoryd generateCircle(const CircleConfig& config) {
  config.validate();
  Trajectoryd trajectory(2, config.cellCount);
  for (int k = 0; k < config.cellCount; ++k) {
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(k) / config.cellCount;
    // sin/cos order traverses clockwise from the top; snapping to the cell
    // grid makes the spacing only approximately regular.
    trajectory(0, k) =
        std::round(config.radiusKm * std::sin(angle) / config.cellSizeKm) *
        config.cellSizeKm;
    trajectory(1, k) =
        std::round(config.radiusKm * std::cos(angle) / config.cellSizeKm) *
        config.cellSizeKm;
  }
  return trajectory;
}

Trajectoryd shiftPhase(const Trajectoryd& trajectory, int shift) {
  const Eigen::Index length = trajectory.cols();
  if (shift < 0 || shift >= length) {
    throw std::invalid_argument("phase shift out of range");
  }
  Trajectoryd shifted(2, length);
  for (Eigen::Index k = 0; k < length; ++k) {
    shifted.col(k) = trajectory.col((k + shift) % length);
  }
  return shifted;
}

std::vector<SweepRow> runSweep(const CircleConfig& config, const GeoBleuParams& params) {
  config.validate();
  params.validate();
  const Trajectoryd original = generateCircle(config);
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(config.cellCount));
  for (int shift = 0; shift < config.cellCount; ++shift) {
    const Trajectoryd shifted = shiftPhase(original, shift);
    const double raw = dtw(original, shifted);
    rows.push_back(SweepRow{shift, raw, raw / static_cast<double>(original.cols()),
                            geobleu(original, shifted, params)});
  }
  return rows;
}

void writeSweepCsv(std::ostream& out, const CircleConfig& config,
                   const GeoBleuParams& params, const std::vector<SweepRow>& rows) {
  using detail::formatSignificant9;
  out << "# cell_count=" << config.cellCount
      << ",radius_km=" << formatSignificant9(config.radiusKm)
      << ",cell_size_km=" << formatSignificant9(config.cellSizeKm)
      << ",beta=" << formatSignificant9(params.beta) << ",max_n=" << params.maxN
      << "\n";
  out << "shift,dtw,dtw_normalized,geobleu\n";
  for (const SweepRow& row : rows) {
    out << row.shift << ',' << formatSignificant9(row.dtw) << ','
        << formatSignificant9(row.dtwNormalized) << ','
        << formatSignificant9(row.geobleu) << "\n";
  }
}

}  // namespace geosim
