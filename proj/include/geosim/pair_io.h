#pragma once

#include "geosim/trajectory.h"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace geosim {

// One candidate/reference pair, the unit of batch scoring. Pair files are
// JSON Lines: one object per line with fields "id" (string), "candidate" and
// "reference" (arrays of [x,y] number pairs), UTF-8 with LF line endings.
struct PairRecord {
  std::string id;
  Trajectoryd candidate;
  Trajectoryd reference;
};

// Raised on malformed pair files; the message names the 1-based input line and
// the offending field.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// One record per non-blank line, in input order. Rejects malformed lines,
// non-finite coordinates, empty trajectories, and duplicate ids.
std::vector<PairRecord> parsePairs(std::istream& in);

void serializePairs(std::ostream& out, const std::vector<PairRecord>& records);

}  // namespace geosim
