#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "monosys/errors.hpp"

namespace monosys {

using Vector = std::vector<double>;

inline double dot(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) {
    throw DimensionError("dot: size mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

/// Euclidean norm |x|.
inline double norm(const Vector& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

inline double distance(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) {
    throw DimensionError("distance: size mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    s += d * d;
  }
  return std::sqrt(s);
}

inline bool all_finite(const Vector& x) {
  for (double v : x) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace monosys
