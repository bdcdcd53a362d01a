#include "monosys/nonlinearity.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "monosys/errors.hpp"

namespace monosys {

GrowthCertificate GrowthCertificate::superquadratic(double gamma, double zeta, double theta) {
  if (!(gamma > 2.0)) throw ValidationError("superquadratic certificate: exponent must be > 2");
  if (!(zeta > 0.0)) throw ValidationError("superquadratic certificate: coefficient must be > 0");
  if (!(theta > 0.0)) throw ValidationError("superquadratic certificate: radius must be > 0");
  return {Kind::Superquadratic, gamma, zeta, theta};
}

GrowthCertificate GrowthCertificate::subquadratic(double mu, double nu, double theta1) {
  if (!(mu < 2.0)) throw ValidationError("subquadratic certificate: exponent must be < 2");
  if (!(nu > 0.0)) throw ValidationError("subquadratic certificate: coefficient must be > 0");
  if (!(theta1 > 0.0)) throw ValidationError("subquadratic certificate: radius must be > 0");
  return {Kind::Subquadratic, mu, nu, theta1};
}

MonotonicityConstants MonotonicityConstants::lower(double a) {
  if (!(a > 0.0)) throw ValidationError("monotonicity constant a must be > 0");
  return {a, std::nullopt};
}

MonotonicityConstants MonotonicityConstants::upper(double b) {
  if (!(b > 0.0)) throw ValidationError("monotonicity constant b must be > 0");
  return {std::nullopt, b};
}

MonotonicityConstants MonotonicityConstants::both(double a, double b) {
  if (!(a > 0.0)) throw ValidationError("monotonicity constant a must be > 0");
  if (!(b > 0.0)) throw ValidationError("monotonicity constant b must be > 0");
  return {a, b};
}

double MonotonicityConstants::require_a() const {
  if (!a) throw ValidationError("monotonicity constant a is required but absent");
  return *a;
}

double MonotonicityConstants::require_b() const {
  if (!b) throw ValidationError("monotonicity constant b is required but absent");
  return *b;
}

ComponentwiseNonlinearity::ComponentwiseNonlinearity(std::size_t n, ComponentFn component,
                                                     ComponentFn derivative,
                                                     std::optional<ParameterSpace> domain)
    : n_(n),
      component_(std::move(component)),
      derivative_(std::move(derivative)),
      domain_(std::move(domain)) {
  if (n_ == 0) throw DimensionError("ComponentwiseNonlinearity: dimension must be >= 1");
  if (!component_) throw ValidationError("ComponentwiseNonlinearity: missing evaluator");
}

double ComponentwiseNonlinearity::component(std::size_t k, double z,
                                            const ParameterPoint& u) const {
  if (k >= n_) throw DimensionError("component: index out of range");
  return component_(k, z, u);
}

Vector ComponentwiseNonlinearity::evaluate(const Vector& x, const ParameterPoint& u) const {
  if (x.size() != n_) throw DimensionError("evaluate: dimension mismatch");
  if (domain_) domain_->require_contains(u);
  Vector y(n_);
  for (std::size_t k = 0; k < n_; ++k) y[k] = component_(k, x[k], u);
  return y;
}

double ComponentwiseNonlinearity::derivative(std::size_t k, double z,
                                             const ParameterPoint& u) const {
  if (!derivative_) throw ValidationError("derivative evaluator absent");
  if (k >= n_) throw DimensionError("derivative: index out of range");
  return derivative_(k, z, u);
}

namespace {

void require_box_dim(const ParameterSpace& box, std::size_t n, const char* family) {
  if (box.dim() != n) {
    throw DimensionError(std::string(family) + ": parameter box dimension must equal n");
  }
}

void require_positive_box(const ParameterSpace& box, const char* family) {
  if (!(box.min_lo() > 0.0)) {
    throw ValidationError(std::string(family) +
                          ": parameter box must be strictly positive (h(0,u) = 0 "
                          "would be reachable otherwise)");
  }
}

}  // namespace

CertifiedNonlinearity make_cubic_family(std::size_t n, const ParameterSpace& box) {
  require_box_dim(box, n, "cubic family");
  require_positive_box(box, "cubic family");
  const double zeta = std::min(box.min_lo(), 1.0) / (2.0 * static_cast<double>(n));
  const double theta = std::max(1.0, box.max_norm());
  ComponentwiseNonlinearity h(
      n,
      [](std::size_t k, double z, const ParameterPoint& u) { return z + z * z * z + u[k]; },
      [](std::size_t, double z, const ParameterPoint&) { return 1.0 + 3.0 * z * z; }, box);
  return {std::move(h), MonotonicityConstants::lower(1.0),
          GrowthCertificate::superquadratic(3.0, zeta, theta)};
}

CertifiedNonlinearity make_arctan_family(std::size_t n, const ParameterSpace& box) {
  require_box_dim(box, n, "arctan family");
  require_positive_box(box, "arctan family");
  const double nu =
      std::sqrt(static_cast<double>(n)) * (1.5707963267948966 + box.max_hi());
  ComponentwiseNonlinearity h(
      n,
      [](std::size_t k, double z, const ParameterPoint& u) { return std::atan(z) + u[k]; },
      [](std::size_t, double z, const ParameterPoint&) { return 1.0 / (1.0 + z * z); }, box);
  return {std::move(h), MonotonicityConstants::upper(1.0),
          GrowthCertificate::subquadratic(1.0, nu, 1.0)};
}

CertifiedNonlinearity make_emden_fowler_family(std::size_t n, double p,
                                               const ParameterSpace& box) {
  require_box_dim(box, n, "emden-fowler family");
  if (!(p > 1.0)) {
    throw ValidationError("emden-fowler family: exponent p must be > 1");
  }
  require_positive_box(box, "emden-fowler family");
  const double root_n = std::sqrt(static_cast<double>(n));
  const double c = box.min_lo() / std::pow(static_cast<double>(n), 0.5 * (p - 1.0));
  const double zeta = 0.5 * c;
  const double theta = std::max(1.0, root_n / (1.0 + zeta));
  const double gamma = std::min(p + 1.0, 3.0);
  ComponentwiseNonlinearity h(
      n,
      [p](std::size_t k, double z, const ParameterPoint& u) {
        return z + u[k] * std::pow(std::abs(z), p - 1.0) * z + 1.0;
      },
      [p](std::size_t k, double z, const ParameterPoint& u) {
        return 1.0 + p * u[k] * std::pow(std::abs(z), p - 1.0);
      },
      box);
  return {std::move(h), MonotonicityConstants::lower(1.0),
          GrowthCertificate::superquadratic(gamma, zeta, theta)};
}

CertifiedNonlinearity make_linear_family(std::size_t n, const ParameterSpace& box) {
  require_box_dim(box, n, "linear family");
  ComponentwiseNonlinearity h(
      n, [](std::size_t k, double z, const ParameterPoint& u) { return z + u[k]; },
      [](std::size_t, double, const ParameterPoint&) { return 1.0; }, box);
  return {std::move(h), MonotonicityConstants::both(1.0, 1.0), std::nullopt};
}

CertifiedNonlinearity make_zero_family(std::size_t n, const ParameterSpace& box) {
  require_box_dim(box, n, "zero family");
  ComponentwiseNonlinearity h(
      n, [](std::size_t, double, const ParameterPoint&) { return 0.0; },
      [](std::size_t, double, const ParameterPoint&) { return 0.0; }, box);
  return {std::move(h), MonotonicityConstants::upper(1.0),
          GrowthCertificate::subquadratic(1.0, 1.0, 1.0)};
}

NontrivialityResult check_nontriviality(const ComponentwiseNonlinearity& h,
                                        const ParameterSpace& space, std::uint64_t seed,
                                        std::size_t samples) {
  const Vector zero(h.dim(), 0.0);
  NontrivialityResult result;

  const auto probe = [&](const ParameterPoint& u) -> bool {
    ++result.samples_used;
    Vector value(h.dim());
    for (std::size_t k = 0; k < h.dim(); ++k) value[k] = h.component(k, 0.0, u);
    const double r = norm(value);
    if (r <= 1e-12) {
      result.pass = false;
      result.counterexample = u;
      result.h_norm_at_counterexample = r;
      return true;
    }
    return false;
  };

  for (const ParameterPoint& u : space.lattice(std::min<std::size_t>(samples, 243))) {
    if (probe(u)) return result;
  }
  SplitMix64 rng(derive_seed(seed, 0x7261));
  while (result.samples_used < samples) {
    if (probe(sample_box(space, rng))) return result;
  }
  return result;
}

}  // namespace monosys
