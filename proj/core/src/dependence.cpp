#include "monosys/dependence.hpp"

#include <cmath>
#include <sstream>

#include "monosys/assumptions.hpp"
#include "monosys/errors.hpp"
#include "monosys/format.hpp"

namespace monosys {

ParameterSequence make_geometric_sequence(const ParameterSpace& space,
                                          const ParameterPoint& limit,
                                          const Vector& direction, std::size_t count) {
  space.require_contains(limit);
  if (direction.size() != space.dim()) {
    throw DimensionError("make_geometric_sequence: direction dimension mismatch");
  }
  ParameterSequence seq{{}, limit};
  seq.points.reserve(count);
  double scale = 1.0;
  for (std::size_t k = 1; k <= count; ++k) {
    scale *= 0.5;
    Vector c(space.dim());
    for (std::size_t i = 0; i < space.dim(); ++i) c[i] = limit[i] + scale * direction[i];
    ParameterPoint u(std::move(c));
    space.require_contains(u);
    seq.points.push_back(std::move(u));
  }
  return seq;
}

double stability_bound(const ProblemInstance& problem, const Vector& limit_solution,
                       const ParameterPoint& u, const ParameterPoint& u_limit) {
  const double m = problem.monotonicity_constant();
  if (!(m > 0.0)) {
    throw ValidationError("stability_bound: regime monotonicity constant must be > 0");
  }
  const Vector hu = problem.nonlinearity().evaluate(limit_solution, u);
  const Vector hl = problem.nonlinearity().evaluate(limit_solution, u_limit);
  return problem.lambda() * distance(hu, hl) / m;
}

DependenceReport run_dependence_study(const ProblemInstance& problem,
                                      const ParameterSequence& sequence,
                                      const SolveConfig& config) {
  problem.space().require_contains(sequence.limit);
  for (const ParameterPoint& u : sequence.points) problem.space().require_contains(u);

  DependenceReport report;
  const SolveReport limit_solve = solve_problem(problem, sequence.limit, config);
  report.limit_solution = limit_solve.solution;
  report.limit_residual = residual_norm(problem, sequence.limit, report.limit_solution);
  if (report.limit_residual >
      config.tolerance * (1.0 + norm(report.limit_solution)) * (1.0 + 1e-9)) {
    throw ConvergenceError("dependence study: limit solve missed the residual tolerance",
                           report.limit_residual, limit_solve.iterations);
  }

  const Vector zero(problem.dim(), 0.0);
  report.within_bound = true;
  for (std::size_t k = 1; k <= sequence.points.size(); ++k) {
    const ParameterPoint& u = sequence.points[k - 1];
    Vector solution;
    try {
      solution = solve_problem(problem, u, config).solution;
    } catch (const std::exception& e) {
      throw StudyMemberError("dependence study: member " + std::to_string(k) +
                                 " failed: " + e.what(),
                             k);
    }
    DependenceRecord rec;
    rec.index = k;
    rec.parameter_distance = problem.space().distance(u, sequence.limit);
    rec.solution_distance = distance(solution, report.limit_solution);
    rec.stability_bound = stability_bound(problem, report.limit_solution, u, sequence.limit);
    rec.nontrivial_at_parameter =
        norm(problem.nonlinearity().evaluate(zero, u)) > 1e-12;
    rec.solution = std::move(solution);
    if (rec.solution_distance > rec.stability_bound + 1e-8) report.within_bound = false;
    report.records.push_back(std::move(rec));
  }
  return report;
}

BoundednessResult boundedness_check(const DependenceReport& report,
                                    const ProblemInstance& problem) {
  const auto bound = apriori_solution_bound(problem);
  if (!bound) {
    throw ValidationError("boundedness_check: problem carries no growth certificate");
  }
  for (const DependenceRecord& rec : report.records) {
    if (norm(rec.solution) > *bound + 1e-9) {
      return {false, rec.index, *bound};
    }
  }
  return {true, std::nullopt, *bound};
}

std::string to_csv(const DependenceReport& report) {
  std::string out = "k,param_dist,solution_dist,stability_bound\n";
  for (const DependenceRecord& rec : report.records) {
    out += std::to_string(rec.index);
    out += ',';
    out += format_g17(rec.parameter_distance);
    out += ',';
    out += format_g17(rec.solution_distance);
    out += ',';
    out += format_g17(rec.stability_bound);
    out += '\n';
  }
  return out;
}

}  // namespace monosys
