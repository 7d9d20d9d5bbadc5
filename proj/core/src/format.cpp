#include "pseudocore/format.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace pseudocore {

std::string format_fixed(double value, int precision) {
  if (std::isnan(value)) return "nan";
  if (value == 0.0) value = 0.0;  // drop negative zero
  std::array<char, 64> buffer{};
  std::snprintf(buffer.data(), buffer.size(), "%.*f", precision, value);
  return buffer.data();
}

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  std::array<char, 64> buffer{};
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buffer.data(), buffer.size(), "%.*g", precision, value);
    if (std::strtod(buffer.data(), nullptr) == value) break;
  }
  return buffer.data();
}

}  // namespace pseudocore
