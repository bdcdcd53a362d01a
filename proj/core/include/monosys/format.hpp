#pragma once

#include <cstdio>
#include <string>

namespace monosys {

/// Locale-independent decimal formatting with 17 significant digits, enough
/// for doubles to round-trip.
inline std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

}  // namespace monosys
