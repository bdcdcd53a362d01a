#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "monosys/nonlinearity.hpp"
#include "monosys/problem.hpp"
#include "monosys/rng.hpp"

namespace monosys {

enum class Assumption { A1, A2, A3, A4 };

const char* to_string(Assumption a);

/// Witness of a violated componentwise inequality (A2/A4): the component,
/// the scalar pair, the parameter, and both sides of the inequality.
struct PairWitness {
  std::size_t component;
  double z1, z2;
  ParameterPoint v;
  double lhs;  // (h_k(z1,v) - h_k(z2,v)) (z1 - z2)
  double rhs;  // a or b times (z1 - z2)^2
};

/// Witness of a violated growth inequality (A1/A3): the sampled point, the
/// parameter, and both sides.
struct GrowthWitness {
  Vector z;
  ParameterPoint v;
  double lhs;  // sum_k h_k(z_k,v) z_k
  double rhs;  // coefficient * |z|^exponent
};

/// Outcome of a sampling falsifier. Sampling can refute an assumption but
/// never prove it, so the positive verdict reads "not falsified".
struct FalsificationReport {
  Assumption assumption;
  std::optional<std::variant<PairWitness, GrowthWitness>> counterexample;
  std::size_t samples_used = 0;
  std::uint64_t seed = kDefaultSeed;

  bool falsified() const { return counterexample.has_value(); }
};

struct FalsifierOptions {
  std::size_t samples = 100000;
  std::uint64_t seed = kDefaultSeed;
};

/// Checks (h_k(z1,v) - h_k(z2,v))(z1 - z2) >= a (z1-z2)^2 on a deterministic
/// grid of components, scalar pairs in [-R, R] and box parameters, then on
/// seeded random samples. A violation counts only when it exceeds
/// 1e-12 (1 + (z1-z2)^2); the degenerate pair z1 = z2 is skipped.
FalsificationReport falsify_A2(const ComponentwiseNonlinearity& h, const ParameterSpace& space,
                               double a, double radius, FalsifierOptions opts = {});

/// Mirror of falsify_A2 for the upper inequality ... <= b (z1-z2)^2.
FalsificationReport falsify_A4(const ComponentwiseNonlinearity& h, const ParameterSpace& space,
                               double b, double radius, FalsifierOptions opts = {});

/// Checks sum_k h_k(z_k,v) z_k >= zeta |z|^gamma for radial samples with
/// theta <= |z| <= R (direction grid and seeded random directions times a
/// radius grid) and box parameters. Requires a superquadratic certificate
/// and R >= theta.
FalsificationReport falsify_A1(const ComponentwiseNonlinearity& h, const ParameterSpace& space,
                               const GrowthCertificate& certificate, double radius,
                               FalsifierOptions opts = {});

/// Mirror of falsify_A1 for the subquadratic upper bound.
FalsificationReport falsify_A3(const ComponentwiseNonlinearity& h, const ParameterSpace& space,
                               const GrowthCertificate& certificate, double radius,
                               FalsifierOptions opts = {});

/// Empirical componentwise slope range over [-R, R] x box:
///   a_est = smallest, b_est = largest observed slope.
/// Uses analytic derivatives when the nonlinearity carries them, divided
/// differences otherwise. a_est upper-bounds any valid a; b_est
/// lower-bounds any valid b. Estimates, not certificates.
struct SlopeEstimate {
  double a_est;
  double b_est;
};
SlopeEstimate estimate_monotonicity_constants(const ComponentwiseNonlinearity& h,
                                              const ParameterSpace& space, double radius,
                                              FalsifierOptions opts = {});

/// Open interval of lambda values for which the regime operator is strongly
/// monotone. Construction rejects empty intervals.
class LambdaInterval {
 public:
  LambdaInterval(double lower, double upper);

  double lower() const { return lower_; }
  double upper() const { return upper_; }  // +infinity allowed
  bool contains(double lambda) const { return lambda > lower_ && lambda < upper_; }

 private:
  double lower_, upper_;
};

/// (||A||/a, +inf) for the superquadratic regime; (0, lambda_1/b) for the
/// subquadratic regime (requires positive definite A). Endpoints excluded.
LambdaInterval admissible_lambda_interval(Regime regime, const SymmetricMatrix& A,
                                          const MonotonicityConstants& constants);

LambdaInterval admissible_lambda_interval(const ProblemInstance& problem);

/// Norm bound every solution obeys, from pairing A x = lambda h(x,u) with x:
///   superquadratic: lambda zeta |x|^gamma <= (Ax,x) <= ||A|| |x|^2 outside
///     the radius, so R = max(theta, (||A||/(lambda zeta))^(1/(gamma-2)));
///   subquadratic: lambda_1 |x|^2 <= (Ax,x) <= lambda nu |x|^mu, so
///     R = max(theta_1, (lambda nu / lambda_1)^(1/(2-mu))).
/// Requires lambda inside the supplied admissible interval.
double apriori_solution_bound(Regime regime, const SymmetricMatrix& A, double lambda,
                              const GrowthCertificate& certificate,
                              const LambdaInterval& admissible);

/// Convenience overload; nullopt when the problem carries no certificate.
std::optional<double> apriori_solution_bound(const ProblemInstance& problem);

}  // namespace monosys
