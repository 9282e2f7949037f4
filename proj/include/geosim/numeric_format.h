#pragma once

#include <cstdio>
#include <string>

namespace geosim::detail {

// 9-significant-digit float formatting shared by the CSV emitters.
inline std::string formatSignificant9(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.9g", value);
  return std::string(buffer);
}

}  // namespace geosim::detail
