#include "monosys/parameter.hpp"

#include <algorithm>
#include <cmath>

#include "monosys/errors.hpp"
#include "monosys/rng.hpp"

namespace monosys {

ParameterPoint::ParameterPoint(Vector coordinates) : coords_(std::move(coordinates)) {
  if (coords_.empty()) throw DimensionError("ParameterPoint: dimension must be >= 1");
  if (!all_finite(coords_)) throw ValidationError("ParameterPoint: non-finite coordinate");
}

ParameterSpace::ParameterSpace(Vector lo, Vector hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.empty()) throw DimensionError("ParameterSpace: dimension must be >= 1");
  if (lo_.size() != hi_.size()) throw DimensionError("ParameterSpace: lo/hi size mismatch");
  if (!all_finite(lo_) || !all_finite(hi_)) {
    throw ValidationError("ParameterSpace: non-finite bound");
  }
  for (std::size_t i = 0; i < lo_.size(); ++i) {
    if (lo_[i] > hi_[i]) throw ValidationError("ParameterSpace: lo > hi coordinatewise");
  }
}

double ParameterSpace::min_lo() const { return *std::min_element(lo_.begin(), lo_.end()); }

double ParameterSpace::max_hi() const { return *std::max_element(hi_.begin(), hi_.end()); }

double ParameterSpace::max_norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < lo_.size(); ++i) {
    s += std::max(lo_[i] * lo_[i], hi_[i] * hi_[i]);
  }
  return std::sqrt(s);
}

bool ParameterSpace::contains(const ParameterPoint& u) const {
  if (u.dim() != dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i] < lo_[i] || u[i] > hi_[i]) return false;
  }
  return true;
}

void ParameterSpace::require_contains(const ParameterPoint& u) const {
  if (u.dim() != dim()) throw DimensionError("parameter dimension mismatch");
  if (!contains(u)) throw ValidationError("parameter outside the box");
}

double ParameterSpace::distance(const ParameterPoint& a, const ParameterPoint& b) const {
  return monosys::distance(a.coordinates(), b.coordinates());
}

ParameterPoint ParameterSpace::center() const {
  Vector c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = 0.5 * (lo_[i] + hi_[i]);
  return ParameterPoint(std::move(c));
}

std::vector<ParameterPoint> ParameterSpace::lattice(std::size_t max_points) const {
  const std::size_t m = dim();
  if (max_points == 0) max_points = 1;

  // Largest per-axis level count whose lattice fits the budget, capped at 5.
  std::size_t levels = 1;
  for (std::size_t cand = 2; cand <= 5; ++cand) {
    double total = 1.0;
    for (std::size_t i = 0; i < m && total <= static_cast<double>(max_points); ++i) {
      total *= static_cast<double>(cand);
    }
    if (total <= static_cast<double>(max_points)) levels = cand;
  }

  std::vector<ParameterPoint> pts;
  if (levels == 1) {
    pts.push_back(center());
    if (max_points >= 3) {
      pts.emplace_back(lo_);
      pts.emplace_back(hi_);
    }
    return pts;
  }

  std::vector<std::size_t> idx(m, 0);
  while (true) {
    Vector c(m);
    for (std::size_t i = 0; i < m; ++i) {
      const double t = static_cast<double>(idx[i]) / static_cast<double>(levels - 1);
      c[i] = lo_[i] + t * (hi_[i] - lo_[i]);
    }
    pts.emplace_back(std::move(c));
    if (pts.size() >= max_points) break;
    std::size_t axis = 0;
    while (axis < m && ++idx[axis] == levels) {
      idx[axis] = 0;
      ++axis;
    }
    if (axis == m) break;
  }
  return pts;
}

ParameterPoint sample_box(const ParameterSpace& space, SplitMix64& rng) {
  Vector c(space.dim());
  for (std::size_t i = 0; i < space.dim(); ++i) {
    c[i] = rng.uniform(space.lo()[i], space.hi()[i]);
  }
  return ParameterPoint(std::move(c));
}

}  // namespace monosys
