#pragma once

#include "geosim/trajectory.h"

#include <iosfwd>
#include <vector>

namespace geosim {

// Grid cells traced along a circle; the defaults place 36 cells of 0.5 km over
// a 10 km radius. Coordinates are in kilometers.
struct CircleConfig {
  int cellCount = 36;
  double radiusKm = 10.0;
  double cellSizeKm = 0.5;

  void validate() const;
};

// Clockwise traversal starting at the top of the circle, each point snapped to
// the nearest cell-size multiple.
Trajectoryd generateCircle(const CircleConfig& config = {});

// Circular rotation of the point list by shift; requires 0 <= shift < length.
Trajectoryd shiftPhase(const Trajectoryd& trajectory, int shift);

struct SweepRow {
  int shift;
  double dtw;
  double dtwNormalized;
  double geobleu;
};

// Scores (original, shifted-by-s) for every s in 0..cellCount-1, in shift
// order. The proximity score uses the km coordinates directly, so beta decays
// per kilometer.
std::vector<SweepRow> runSweep(const CircleConfig& config = {},
                               const GeoBleuParams& params = {});

// CSV with a parameter-echo comment line, a `shift,dtw,dtw_normalized,geobleu`
// header, and floats at 9 significant digits. Bit-identical across runs.
void writeSweepCsv(std::ostream& out, const CircleConfig& config,
                   const GeoBleuParams& params, const std::vector<SweepRow>& rows);

}  // namespace geosim
