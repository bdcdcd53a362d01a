#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monosys/problem.hpp"
#include "monosys/solver.hpp"

namespace monosys {

/// A convergent sequence of parameters u_1, ..., u_K with its limit.
struct ParameterSequence {
  std::vector<ParameterPoint> points;
  ParameterPoint limit;
};

/// u_k = limit + 2^-k * direction for k = 1..count. Throws unless every
/// member and the limit stay inside the box.
ParameterSequence make_geometric_sequence(const ParameterSpace& space,
                                          const ParameterPoint& limit,
                                          const Vector& direction, std::size_t count);

struct DependenceRecord {
  std::size_t index;           // 1-based position in the sequence
  double parameter_distance;   // d_k = dist(u_k, limit)
  Vector solution;             // x_k
  double solution_distance;    // e_k = |x_k - limit solution|
  double stability_bound;      // s_k from strong monotonicity
  bool nontrivial_at_parameter;  // |h(0, u_k)| > 1e-12
};

struct DependenceReport {
  Vector limit_solution;  // solution at the limit parameter
  double limit_residual;  // |A x - lambda h(x, limit)| at that solution
  std::vector<DependenceRecord> records;
  bool within_bound;  // every e_k <= s_k + 1e-8
};

/// Quantitative stability bound. Pairing the two solved equations
///   A x_u = lambda h(x_u, u)  and  A x* = lambda h(x*, u*)
/// against x_u - x* and applying strong monotonicity of the regime
/// operator K_u (which vanishes at x_u while K_u(x*) =
/// lambda (h(x*,u) - h(x*,u*))) gives
///   m |x_u - x*|^2 <= |K_u(x*)| |x_u - x*|,
/// hence |x_u - x*| <= lambda |h(x*,u) - h(x*,u*)| / m. Tight for linear
/// nonlinearities with additive parameters. Throws when m <= 0.
double stability_bound(const ProblemInstance& problem, const Vector& limit_solution,
                       const ParameterPoint& u, const ParameterPoint& u_limit);

/// Solves at the limit first, verifies the limit equation to the residual
/// tolerance, then solves every member, recording distances and bounds.
/// Member solve failures raise StudyMemberError with the 1-based index.
/// The solves are independent; this implementation runs them sequentially,
/// which is also the required deterministic reference order.
DependenceReport run_dependence_study(const ProblemInstance& problem,
                                      const ParameterSequence& sequence,
                                      const SolveConfig& config = {});

struct BoundednessResult {
  bool pass;
  std::optional<std::size_t> violation_index;  // 1-based, when pass is false
  double bound;
};

/// Every recorded |x_k| must stay within the a priori bound (+1e-9 slack).
/// Requires a growth certificate on the problem.
BoundednessResult boundedness_check(const DependenceReport& report,
                                    const ProblemInstance& problem);

/// CSV with header "k,param_dist,solution_dist,stability_bound".
std::string to_csv(const DependenceReport& report);

}  // namespace monosys
