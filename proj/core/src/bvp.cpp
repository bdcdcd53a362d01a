#include "monosys/bvp.hpp"

#include <cmath>

#include "monosys/errors.hpp"
#include "monosys/format.hpp"

namespace monosys {

GridFunction GridFunction::from_interior(const Vector& interior) {
  if (interior.empty()) throw DimensionError("GridFunction: needs at least one interior node");
  Vector values(interior.size() + 2, 0.0);
  for (std::size_t i = 0; i < interior.size(); ++i) values[i + 1] = interior[i];
  return GridFunction(std::move(values));
}

Vector GridFunction::interior() const {
  return Vector(values_.begin() + 1, values_.end() - 1);
}

Vector second_difference(const GridFunction& grid) {
  const std::size_t n = grid.interior_size();
  Vector d(n);
  for (std::size_t k = 1; k <= n; ++k) {
    d[k - 1] = grid.value(k + 1) - 2.0 * grid.value(k) + grid.value(k - 1);
  }
  return d;
}

std::string to_csv(const GridFunction& grid) {
  std::string out = "k,x\n";
  for (std::size_t k = 0; k < grid.node_count(); ++k) {
    out += std::to_string(k);
    out += ',';
    out += format_g17(grid.value(k));
    out += '\n';
  }
  return out;
}

ProblemInstance discretize(const DifferenceProblem& p) {
  if (p.n == 0) throw DimensionError("discretize: interior node count must be >= 1");
  if (!p.f) throw ValidationError("discretize: missing difference nonlinearity");

  auto f = p.f;
  ComponentwiseNonlinearity induced(
      p.n,
      [f](std::size_t i, double z, const ParameterPoint& u) {
        return -f(i + 1, z, u);  // component i hosts node k = i + 1
      },
      nullptr, p.space);
  return ProblemInstance(build_dirichlet_matrix(p.n), p.lambda, std::move(induced), p.regime,
                         p.constants, p.growth, p.space);
}

BvpSolution solve_bvp(const DifferenceProblem& p, const ParameterPoint& u,
                      const SolveConfig& config) {
  const ProblemInstance system = discretize(p);
  SolveReport report = solve_problem(system, u, config);
  GridFunction grid = GridFunction::from_interior(report.solution);

  const Vector d2 = second_difference(grid);
  double defect = 0.0;
  for (std::size_t k = 1; k <= p.n; ++k) {
    defect = std::max(defect,
                      std::abs(d2[k - 1] - p.lambda * p.f(k, grid.value(k), u)));
  }
  return {std::move(grid), std::move(report), defect};
}

DifferenceProblem emden_fowler_preset(std::size_t n, double p, const ParameterSpace& box,
                                      double lambda) {
  if (n == 0) throw DimensionError("emden_fowler_preset: node count must be >= 1");
  CertifiedNonlinearity family = make_emden_fowler_family(n, p, box);

  // f = -h so that discretize's sign flip reproduces the family exactly.
  auto h = family.h;
  auto f = [h](std::size_t k, double z, const ParameterPoint& u) {
    return -h.component(k - 1, z, u);
  };
  return DifferenceProblem{n,
                           std::move(f),
                           lambda,
                           Regime::Superquadratic,
                           family.constants,
                           family.growth,
                           box};
}

}  // namespace monosys
