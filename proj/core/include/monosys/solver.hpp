#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "monosys/assumptions.hpp"
#include "monosys/problem.hpp"

namespace monosys {

/// A strongly monotone map K with certified constants:
///   (K(x) - K(y), x - y) >= monotonicity |x - y|^2   (monotonicity > 0)
///   |K(x) - K(y)|       <= lipschitz |x - y|         on the working ball.
/// Construction rejects monotonicity <= 0 and lipschitz < monotonicity.
struct MonotoneOperator {
  MonotoneOperator(std::size_t dim, std::function<Vector(const Vector&)> apply,
                   double monotonicity, double lipschitz, Regime regime);

  std::size_t dim;
  std::function<Vector(const Vector&)> apply;
  double monotonicity;  // m
  double lipschitz;     // L >= m
  Regime regime;
};

/// Re-evaluates the strong monotonicity inequality on seeded random pairs
/// inside [-box_radius, box_radius]^n, with 1e-9 slack for rounding.
bool strong_monotonicity_spot_check(const MonotoneOperator& op, double box_radius,
                                    std::uint64_t seed = kDefaultSeed,
                                    std::size_t pairs = 64);

struct SolveConfig {
  double tolerance = 1e-10;              // residual scale: |K(x)| <= tol (1 + |x|)
  std::size_t max_iterations = 1000000;  // bounds accepted + rejected steps
  std::optional<Vector> initial;         // default: zero vector
  std::optional<double> step_override;   // fixed step instead of the adaptive one
  std::size_t history_cap = 4096;        // residual history thinning threshold
};

struct SolveReport {
  Vector solution;
  double residual = 0.0;      // final |K(x*)|
  std::size_t iterations = 0;  // accepted steps
  double step = 0.0;           // last accepted step size
  double contraction = 0.0;    // predicted q = sqrt(1 - (m/L)^2) from the constants
  bool slow_contraction = false;  // q > 0.999; diagnostic, not an error
  std::vector<double> residual_history;  // accepted residuals, thinned beyond the cap
};

/// Builds the regime operator for the problem at parameter u:
///   superquadratic: K(x) = lambda h(x,u) - A x,  m = lambda a - ||A||
///   subquadratic:   K(x) = A x - lambda h(x,u),  m = lambda_1 - lambda b
/// Throws InadmissibleLambdaError unless lambda is strictly inside the
/// admissible interval. L comes from estimate_lipschitz on a ball of twice
/// the a priori bound (or twice the coarse bound |K(0)|/m without a growth
/// certificate) unless an analytic override is supplied.
MonotoneOperator assemble_operator(const ProblemInstance& problem, const ParameterPoint& u,
                                   std::optional<double> lipschitz_override = std::nullopt);

/// L = lambda * (1.25 * max sampled componentwise slope over [-R, R] and the
/// parameter box) + ||A||, clamped below by the monotonicity constant. The
/// radius must cover the a priori bound when a growth certificate exists.
double estimate_lipschitz(const ProblemInstance& problem, const ParameterPoint& u,
                          double radius, std::uint64_t seed = kDefaultSeed,
                          std::size_t samples = 4096);

/// Solves K(x) = 0 by the relaxed fixed-point iteration x <- x - tau K(x).
///
/// The certified step tau = m/L^2 contracts the residual by
/// q = sqrt(1 - (m/L)^2) per step; since L is a global bound that factor can
/// be uselessly close to 1, the solver adapts tau upward and accepts a step
/// only when |K|^2 shrinks by the factor (1 - tau m) that strong
/// monotonicity guarantees for any locally valid step. Rejected trials halve
/// tau, never below the certified floor, so termination keeps the global
/// guarantee. The iteration is insensitive to the operator's overall sign: a
/// monotonicity probe at the start point picks the orientation.
///
/// Stops when |K(x)| <= tolerance * (1 + |x|). Throws ConvergenceError at
/// the iteration cap and DivergenceError on NaN/Inf.
SolveReport solve(const MonotoneOperator& op, const SolveConfig& config = {});

/// Assemble-and-solve convenience.
SolveReport solve_problem(const ProblemInstance& problem, const ParameterPoint& u,
                          const SolveConfig& config = {});

/// Defect |A x - lambda h(x,u)| of the original equation.
double residual_norm(const ProblemInstance& problem, const ParameterPoint& u, const Vector& x);

}  // namespace monosys
