#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "monosys/parameter.hpp"
#include "monosys/rng.hpp"
#include "monosys/vector.hpp"

namespace monosys {

/// Growth certificate for the sign-weighted sum S(z,v) = sum_k h_k(z_k,v) z_k:
///   superquadratic:  S(z,v) >= coefficient * |z|^exponent  for |z| >= radius,
///                    exponent > 2 (the lower bound kicks in far out);
///   subquadratic:    S(z,v) <= coefficient * |z|^exponent  for |z| >= radius,
///                    exponent < 2.
/// Certificates are inputs to bounds, not identities: any valid
/// (exponent, coefficient, radius) triple is acceptable.
struct GrowthCertificate {
  enum class Kind { Superquadratic, Subquadratic };

  Kind kind;
  double exponent;     // gamma (> 2) or mu (< 2)
  double coefficient;  // zeta or nu, strictly positive
  double radius;       // theta or theta_1, strictly positive

  static GrowthCertificate superquadratic(double gamma, double zeta, double theta);
  static GrowthCertificate subquadratic(double mu, double nu, double theta1);
};

/// Componentwise monotonicity constants of z -> h_k(z,v):
///   a: (h_k(z1,v)-h_k(z2,v))(z1-z2) >= a (z1-z2)^2  (strong monotonicity)
///   b: (h_k(z1,v)-h_k(z2,v))(z1-z2) <= b (z1-z2)^2  (one-sided Lipschitz)
/// uniformly in k and v. At least one must be present.
struct MonotonicityConstants {
  std::optional<double> a;
  std::optional<double> b;

  static MonotonicityConstants lower(double a);
  static MonotonicityConstants upper(double b);
  static MonotonicityConstants both(double a, double b);

  double require_a() const;  // ValidationError when absent
  double require_b() const;
};

/// The map h(x,u) = [h_1(x_1,u), ..., h_n(x_n,u)]: component i sees only the
/// i-th coordinate of x plus the parameter, which the evaluator signature
/// enforces structurally. Evaluators must be pure and safe to call
/// concurrently.
class ComponentwiseNonlinearity {
 public:
  /// (component index k in 0..n-1, scalar z, parameter u) -> real.
  using ComponentFn = std::function<double(std::size_t, double, const ParameterPoint&)>;

  ComponentwiseNonlinearity(std::size_t n, ComponentFn component,
                            ComponentFn derivative = nullptr,
                            std::optional<ParameterSpace> domain = std::nullopt);

  std::size_t dim() const { return n_; }

  double component(std::size_t k, double z, const ParameterPoint& u) const;

  /// Componentwise evaluation; checks dim(x) = n and, when the nonlinearity
  /// declares a parameter box, that u lies in it.
  Vector evaluate(const Vector& x, const ParameterPoint& u) const;

  bool has_derivative() const { return static_cast<bool>(derivative_); }
  double derivative(std::size_t k, double z, const ParameterPoint& u) const;

  const std::optional<ParameterSpace>& domain() const { return domain_; }

 private:
  std::size_t n_;
  ComponentFn component_;
  ComponentFn derivative_;
  std::optional<ParameterSpace> domain_;
};

/// A nonlinearity together with the constants its construction guarantees.
struct CertifiedNonlinearity {
  ComponentwiseNonlinearity h;
  MonotonicityConstants constants;
  std::optional<GrowthCertificate> growth;
};

/// h_i(z,u) = z + z^3 + u_i on a strictly positive parameter box.
///
/// Constants: a = 1 since d/dz (z + z^3) = 1 + 3 z^2 >= 1. Growth: with
/// U = max |u| over the box,
///   sum h_k(z_k,u) z_k = |z|^2 + sum z_k^4 + (u,z)
///                     >= |z|^2 + |z|^4/n - U |z|
/// (power mean for the quartic, Cauchy-Schwarz for the parameter term).
/// Splitting |z|^4/n in half, |z|^4/(2n) >= zeta |z|^3 once |z| >= 2n*zeta,
/// and the rest dominates the -U|z| term once |z| >= U, so
///   gamma = 3, zeta = min(u_lo, 1)/(2n), theta = max(1, U)
/// is a valid superquadratic certificate.
CertifiedNonlinearity make_cubic_family(std::size_t n, const ParameterSpace& box);

/// h_i(z,u) = arctan(z) + u_i on a strictly positive box.
///
/// b = 1 (arctan is increasing and 1-Lipschitz). Growth: |h_i| <= pi/2 +
/// u_max, so sum h_k z_k <= (pi/2 + u_max) sum |z_k| <= sqrt(n)(pi/2 +
/// u_max) |z|, giving mu = 1, nu = sqrt(n)(pi/2 + u_max), theta_1 = 1.
CertifiedNonlinearity make_arctan_family(std::size_t n, const ParameterSpace& box);

/// h_i(z,u) = z + u_i |z|^(p-1) z + 1 with p > 1 on a strictly positive box.
///
/// a = 1 (slope 1 + p u_i |z|^(p-1) >= 1). Growth: with
/// C = u_lo / n^((p-1)/2) (power-mean bound on sum |z_k|^(p+1)),
///   sum h_k z_k >= |z|^2 + C |z|^(p+1) - sqrt(n) |z|,
/// and for |z| >= max(1, sqrt(n)/(1 + C/2)) the triple
///   gamma = min(p+1, 3), zeta = C/2, theta = max(1, sqrt(n)/(1 + C/2))
/// certifies superquadratic growth; the exponent is deliberately registered
/// at the low end to keep theta small.
CertifiedNonlinearity make_emden_fowler_family(std::size_t n, double p,
                                               const ParameterSpace& box);

/// h_i(z,u) = z + u_i. Slope exactly 1, so a = b = 1; growth is quadratic
/// and carries no certificate.
CertifiedNonlinearity make_linear_family(std::size_t n, const ParameterSpace& box);

/// h = 0. b = 1 with a trivial subquadratic certificate (mu=1, nu=1).
CertifiedNonlinearity make_zero_family(std::size_t n, const ParameterSpace& box);

struct NontrivialityResult {
  bool pass = true;  // means "no counterexample found", not a proof
  std::optional<ParameterPoint> counterexample;
  double h_norm_at_counterexample = 0.0;
  std::size_t samples_used = 0;
};

/// Samples a deterministic box lattice plus seeded random points and
/// reports the first u with |h(0,u)| <= 1e-12. Sampling can only falsify
/// the hypothesis h(0,u) != 0; a pass is not a proof.
NontrivialityResult check_nontriviality(const ComponentwiseNonlinearity& h,
                                        const ParameterSpace& space,
                                        std::uint64_t seed = kDefaultSeed,
                                        std::size_t samples = 2048);

}  // namespace monosys
