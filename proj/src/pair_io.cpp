#include "geosim/pair_io.h"

#include <nlohmann/json.hpp>

#include <cctype>
#include <cmath>
#include <istream>
#include <ostream>
#include <unordered_set>

namespace geosim {

namespace {

using json = nlohmann::json;

bool isBlank(const std::string& line) {
  for (unsigned char c : line) {
    if (!std::isspace(c)) {
      return false;
    }
  }
  return true;
}

std::string lineTag(int line) { return "line " + std::to_string(line); }

Trajectoryd parseTrajectory(const json& object, const char* field, int line) {
  const auto it = object.find(field);
  if (it == object.end()) {
    throw ParseError(line, lineTag(line) + ": missing field \"" + field + "\"");
  }
  const json& value = *it;
  if (!value.is_array()) {
    throw ParseError(line, lineTag(line) + ": field \"" + field +
                               "\" must be an array of [x,y] pairs");
  }
  if (value.empty()) {
    throw ParseError(line, "empty trajectory at " + lineTag(line) + ": field \"" +
                               field + "\"");
  }
  Trajectoryd trajectory(2, static_cast<Eigen::Index>(value.size()));
  for (std::size_t k = 0; k < value.size(); ++k) {
    const json& point = value[k];
    if (!point.is_array() || point.size() != 2 || !point[0].is_number() ||
        !point[1].is_number()) {
      throw ParseError(line, lineTag(line) + ": field \"" + field + "\"[" +
                                 std::to_string(k) + "] must be an [x,y] number pair");
    }
    const double x = point[0].get<double>();
    const double y = point[1].get<double>();
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw ParseError(line, lineTag(line) + ": field \"" + field + "\"[" +
                                 std::to_string(k) + "] has a non-finite coordinate");
    }
    trajectory(0, static_cast<Eigen::Index>(k)) = x;
    trajectory(1, static_cast<Eigen::Index>(k)) = y;
  }
  return trajectory;
}

}  // namespace

std::vector<PairRecord> parsePairs(std::istream& in) {
  std::vector<PairRecord> records;
  std::unordered_set<std::string> seenIds;
  std::string line;
  int lineNumber = 0;
  while (std::getline(in, line)) {
    ++lineNumber;
    if (isBlank(line)) {
      continue;
    }
    json object;
    try {
      object = json::parse(line);
    } catch (const json::exception& error) {
      throw ParseError(lineNumber,
                       lineTag(lineNumber) + ": invalid JSON (" + error.what() + ")");
    }
    if (!object.is_object()) {
      throw ParseError(lineNumber, lineTag(lineNumber) + ": expected a JSON object");
    }
    const auto idIt = object.find("id");
    if (idIt == object.end()) {
      throw ParseError(lineNumber, lineTag(lineNumber) + ": missing field \"id\"");
    }
    if (!idIt->is_string()) {
      throw ParseError(lineNumber,
                       lineTag(lineNumber) + ": field \"id\" must be a string");
    }
    PairRecord record;
    record.id = idIt->get<std::string>();
    if (!seenIds.insert(record.id).second) {
      throw ParseError(lineNumber, lineTag(lineNumber) + ": duplicate id \"" +
                                       record.id + "\"");
    }
    record.candidate = parseTrajectory(object, "candidate", lineNumber);
    record.reference = parseTrajectory(object, "reference", lineNumber);
    records.push_back(std::move(record));
  }
  return records;
}

void serializePairs(std::ostream& out, const std::vector<PairRecord>& records) {
  for (const PairRecord& record : records) {
    nlohmann::ordered_json object;
    object["id"] = record.id;
    for (const char* field : {"candidate", "reference"}) {
      const Trajectoryd& trajectory =
          field[0] == 'c' ? record.candidate : record.reference;
      json points = json::array();
      for (Eigen::Index k = 0; k < trajectory.cols(); ++k) {
        points.push_back({trajectory(0, k), trajectory(1, k)});
      }
      object[field] = std::move(points);
    }
    out << object.dump() << '\n';
  }
}

}  // namespace geosim
