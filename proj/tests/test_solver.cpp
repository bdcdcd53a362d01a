#include <cmath>
#include <limits>

#include "doctest.h"
#include "monosys/errors.hpp"
#include "monosys/solver.hpp"
#include "monosys/spectrum.hpp"

using namespace monosys;

namespace {

ParameterSpace unit_box(std::size_t m, double lo, double hi) {
  return ParameterSpace(Vector(m, lo), Vector(m, hi));
}

ProblemInstance linear_super_problem(double lambda = 3.0) {
  const auto box = unit_box(1, 0.5, 2.0);
  CertifiedNonlinearity lin = make_linear_family(1, box);
  return ProblemInstance(build_dirichlet_matrix(1), lambda, lin.h, Regime::Superquadratic,
                         lin.constants, std::nullopt, box);
}

ProblemInstance arctan_sub_problem(double lambda = 1.0) {
  const auto box = unit_box(1, 0.5, 2.0);
  CertifiedNonlinearity fam = make_arctan_family(1, box);
  return ProblemInstance(build_dirichlet_matrix(1), lambda, fam.h, Regime::Subquadratic,
                         fam.constants, fam.growth, box);
}

ProblemInstance cubic_super_problem(std::size_t n, double lambda_factor) {
  const auto box = unit_box(n, 0.5, 2.0);
  CertifiedNonlinearity fam = make_cubic_family(n, box);
  const SymmetricMatrix B = build_dirichlet_matrix(n);
  const double lambda = lambda_factor * spectral_norm(B);
  return ProblemInstance(B, lambda, fam.h, Regime::Superquadratic, fam.constants, fam.growth,
                         box);
}

// Independent scalar oracle: bisection root of g(x) = 2x - arctan(x) - 1.
double bisect_arctan_root() {
  double lo = 0.0, hi = 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double g = 2.0 * mid - std::atan(mid) - 1.0;
    (g < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("assemble computes the regime constants") {
  const ProblemInstance super = linear_super_problem(3.0);
  const MonotoneOperator op = assemble_operator(super, ParameterPoint({1.0}));
  CHECK(op.monotonicity == doctest::Approx(1.0).epsilon(1e-12));  // 3*1 - 2
  CHECK(op.regime == Regime::Superquadratic);
  CHECK(op.lipschitz >= op.monotonicity);

  const ProblemInstance sub = arctan_sub_problem(1.0);
  const MonotoneOperator op2 = assemble_operator(sub, ParameterPoint({1.0}));
  CHECK(op2.monotonicity == doctest::Approx(1.0).epsilon(1e-12));  // 2 - 1*1
}

TEST_CASE("assemble rejects boundary lambda with the interval attached") {
  const ProblemInstance boundary = linear_super_problem(2.0);  // ||A||/a exactly
  try {
    assemble_operator(boundary, ParameterPoint({1.0}));
    FAIL("expected InadmissibleLambdaError");
  } catch (const InadmissibleLambdaError& e) {
    CHECK(e.lambda == 2.0);
    CHECK(e.lower == 2.0);
    CHECK(std::isinf(e.upper));
  }
}

TEST_CASE("lipschitz estimate") {
  // linear slope 1: L = 1.25 * 3 * 1 + 2 = 5.75 before the clamp
  const ProblemInstance lin = linear_super_problem(3.0);
  CHECK(estimate_lipschitz(lin, ParameterPoint({1.0}), 5.0) ==
        doctest::Approx(5.75).epsilon(1e-12));

  // arctan slope <= 1: L <= 1.25 * 1 * 1 + 2 = 3.25
  const ProblemInstance sub = arctan_sub_problem(1.0);
  const double L = estimate_lipschitz(sub, ParameterPoint({1.0}), 5.0);
  CHECK(L <= 3.25);
  CHECK(L >= 2.0);  // never below ||A||

  // h constant in z: slope term vanishes, L = ||A||
  const auto box = unit_box(1, 0.5, 2.0);
  const ComponentwiseNonlinearity constant(
      1, [](std::size_t, double, const ParameterPoint& u) { return u[0]; });
  const ProblemInstance flat(build_dirichlet_matrix(1), 1.0, constant, Regime::Subquadratic,
                             MonotonicityConstants::upper(1.0), std::nullopt, box);
  CHECK(estimate_lipschitz(flat, ParameterPoint({1.0}), 5.0) == 2.0);
}

TEST_CASE("solve: linear closed form") {
  // 3(x + 1) = 2x has the root x = -3
  const ProblemInstance p = linear_super_problem(3.0);
  const SolveReport r = solve_problem(p, ParameterPoint({1.0}));
  REQUIRE(r.solution.size() == 1);
  CHECK(r.solution[0] == doctest::Approx(-3.0).epsilon(1e-9));
  CHECK(r.residual <= 1e-10 * (1.0 + norm(r.solution)));
  CHECK(r.contraction < 1.0);
  CHECK(r.step > 0.0);
}

TEST_CASE("solve: arctan against the bisection oracle") {
  const ProblemInstance p = arctan_sub_problem(1.0);
  const SolveReport r = solve_problem(p, ParameterPoint({1.0}));
  const double root = bisect_arctan_root();
  CHECK(root == doctest::Approx(0.8531640448).epsilon(1e-9));  // sanity on the oracle itself
  CHECK(r.solution[0] == doctest::Approx(root).epsilon(1e-6));
}

TEST_CASE("solve: fixed point at the start returns immediately") {
  const ProblemInstance p = linear_super_problem(3.0);
  SolveConfig config;
  config.initial = Vector{-3.0};  // K(-3) = 3(-3+1) - 2(-3) = 0 exactly
  const SolveReport r = solve_problem(p, ParameterPoint({1.0}), config);
  CHECK(r.iterations == 0);
  CHECK(r.solution[0] == -3.0);
  CHECK(r.residual == 0.0);
}

TEST_CASE("solve: max iterations raises with the last residual") {
  const ProblemInstance p = linear_super_problem(3.0);
  SolveConfig config;
  config.max_iterations = 3;
  try {
    solve_problem(p, ParameterPoint({1.0}), config);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.last_residual > 0.0);
  }
}

TEST_CASE("solve: divergence error names the iteration") {
  const MonotoneOperator bad(
      1,
      [](const Vector&) {
        return Vector{std::numeric_limits<double>::quiet_NaN()};
      },
      1.0, 2.0, Regime::Superquadratic);
  CHECK_THROWS_AS(solve(bad), DivergenceError);
}

TEST_CASE("operator construction validates constants") {
  const auto id = [](const Vector& x) { return x; };
  CHECK_THROWS_AS(MonotoneOperator(1, id, 0.0, 1.0, Regime::Superquadratic), ValidationError);
  CHECK_THROWS_AS(MonotoneOperator(1, id, 2.0, 1.0, Regime::Superquadratic), ValidationError);
  CHECK_THROWS_AS(MonotoneOperator(0, id, 1.0, 2.0, Regime::Superquadratic), DimensionError);
}

TEST_CASE("solve config validation") {
  const ProblemInstance p = linear_super_problem(3.0);
  SolveConfig bad_tol;
  bad_tol.tolerance = 0.0;
  CHECK_THROWS_AS(solve_problem(p, ParameterPoint({1.0}), bad_tol), ValidationError);
  SolveConfig bad_iter;
  bad_iter.max_iterations = 0;
  CHECK_THROWS_AS(solve_problem(p, ParameterPoint({1.0}), bad_iter), ValidationError);
}

TEST_CASE("assembled operators pass the strong monotonicity spot check") {
  const ProblemInstance p = cubic_super_problem(4, 1.5);
  const MonotoneOperator op = assemble_operator(p, ParameterPoint(Vector(4, 1.0)));
  CHECK(strong_monotonicity_spot_check(op, 3.0));
}

TEST_CASE("monotone residual history") {
  const ProblemInstance p = cubic_super_problem(5, 1.5);
  const SolveReport r = solve_problem(p, ParameterPoint(Vector(5, 1.0)));
  REQUIRE(r.residual_history.size() >= 2);
  for (std::size_t i = 1; i < r.residual_history.size(); ++i) {
    CHECK(r.residual_history[i] <=
          r.residual_history[i - 1] * (r.contraction + 1e-6));
  }
}

TEST_CASE("solution is insensitive to the operator sign convention") {
  const ProblemInstance p = cubic_super_problem(3, 1.5);
  const ParameterPoint u(Vector(3, 1.0));
  const MonotoneOperator op = assemble_operator(p, u);
  auto apply = op.apply;
  const MonotoneOperator negated(
      op.dim,
      [apply](const Vector& x) {
        Vector r = apply(x);
        for (double& v : r) v = -v;
        return r;
      },
      op.monotonicity, op.lipschitz, op.regime);

  const SolveReport a = solve(op);
  const SolveReport b = solve(negated);
  for (std::size_t i = 0; i < a.solution.size(); ++i) {
    CHECK(a.solution[i] == doctest::Approx(b.solution[i]).epsilon(1e-10));
  }
}

TEST_CASE("uniqueness: random starts agree") {
  const ProblemInstance p = cubic_super_problem(4, 1.5);
  const ParameterPoint u(Vector(4, 1.0));
  const double bound = *apriori_solution_bound(p);

  SplitMix64 rng(13);
  std::vector<Vector> solutions;
  for (int s = 0; s < 10; ++s) {
    SolveConfig config;
    Vector x0(4);
    for (double& v : x0) v = rng.uniform(-2.0 * bound, 2.0 * bound);
    config.initial = x0;
    solutions.push_back(solve_problem(p, u, config).solution);
  }
  for (std::size_t i = 1; i < solutions.size(); ++i) {
    CHECK(distance(solutions[i], solutions[0]) < 1e-8);
  }
}

TEST_CASE("a priori bound and nontriviality hold for built-in solves") {
  const ProblemInstance p = cubic_super_problem(5, 1.5);
  const ParameterPoint u(Vector(5, 1.5));
  const SolveReport r = solve_problem(p, u);
  CHECK(norm(r.solution) <= *apriori_solution_bound(p) + 1e-9);
  CHECK(norm(r.solution) > 0.0);
}

TEST_CASE("residual norm of the original equation") {
  const ProblemInstance p = linear_super_problem(3.0);
  const ParameterPoint u({1.0});
  CHECK(residual_norm(p, u, {0.0}) == 3.0);    // |0 - 3*1|
  CHECK(residual_norm(p, u, {-3.0}) == 0.0);   // exact root
  CHECK_THROWS_AS(residual_norm(p, u, {0.0, 0.0}), DimensionError);

  const SolveReport r = solve_problem(p, u);
  CHECK(residual_norm(p, u, r.solution) <= 1e-10 * (1.0 + norm(r.solution)));
}
