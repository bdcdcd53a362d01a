#pragma once

#include <cstddef>
#include <vector>

#include "monosys/vector.hpp"

namespace monosys {

class SplitMix64;

/// A point u of the parameter space, represented by finite coordinates.
class ParameterPoint {
 public:
  explicit ParameterPoint(Vector coordinates);

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  const Vector& coordinates() const { return coords_; }

  bool operator==(const ParameterPoint& other) const { return coords_ == other.coords_; }

 private:
  Vector coords_;
};

/// Axis-aligned box in R^m with the Euclidean metric. The box bounds make
/// the "for all parameters" quantifiers in the growth/monotonicity
/// certificates samplable. Other metric spaces could sit behind the same
/// surface; only the box is built in.
class ParameterSpace {
 public:
  ParameterSpace(Vector lo, Vector hi);

  std::size_t dim() const { return lo_.size(); }
  const Vector& lo() const { return lo_; }
  const Vector& hi() const { return hi_; }

  double min_lo() const;  // smallest lower bound across coordinates
  double max_hi() const;  // largest upper bound across coordinates

  /// Euclidean norm of the farthest box point from the origin.
  double max_norm() const;

  bool contains(const ParameterPoint& u) const;
  void require_contains(const ParameterPoint& u) const;  // ValidationError if outside

  double distance(const ParameterPoint& a, const ParameterPoint& b) const;

  ParameterPoint center() const;

  /// Deterministic lattice over the box: per-axis levels chosen so the
  /// point count stays at or under max_points (at least lo/center/hi).
  std::vector<ParameterPoint> lattice(std::size_t max_points) const;

 private:
  Vector lo_, hi_;
};

/// Seeded uniform sample from the box.
ParameterPoint sample_box(const ParameterSpace& space, SplitMix64& rng);

}  // namespace monosys
