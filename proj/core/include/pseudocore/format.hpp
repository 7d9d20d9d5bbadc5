#pragma once

#include <string>

namespace pseudocore {

/// Fixed-point rendering used by every CSV/data writer so report bytes do
/// not depend on stream state or locale.
std::string format_fixed(double value, int precision = 6);

/// Shortest round-trip representation ("%.17g" trimmed).
std::string format_real(double value);

}  // namespace pseudocore
