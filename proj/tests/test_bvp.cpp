#include <cmath>

#include "doctest.h"
#include "monosys/bvp.hpp"
#include "monosys/errors.hpp"
#include "monosys/rng.hpp"
#include "monosys/spectrum.hpp"

using namespace monosys;

namespace {

ParameterSpace unit_box(std::size_t m, double lo, double hi) {
  return ParameterSpace(Vector(m, lo), Vector(m, hi));
}

// BVP whose induced nonlinearity is the linear family h(z,u) = z + u.
DifferenceProblem linear_bvp(std::size_t n, double lambda, const ParameterSpace& box) {
  return DifferenceProblem{
      n,
      [](std::size_t k, double z, const ParameterPoint& u) { return -(z + u[k - 1]); },
      lambda,
      Regime::Superquadratic,
      MonotonicityConstants::both(1.0, 1.0),
      std::nullopt,
      box};
}

}  // namespace

TEST_CASE("discretize maps f to the Dirichlet system with a sign flip") {
  const auto box = unit_box(3, 0.5, 2.0);
  const DifferenceProblem p{
      3,
      [](std::size_t, double, const ParameterPoint&) { return -1.0; },
      1.0,
      Regime::Superquadratic,
      MonotonicityConstants::lower(1.0),
      std::nullopt,
      box};
  const ProblemInstance sys = discretize(p);
  CHECK(sys.matrix().entry(0, 0) == 2.0);
  CHECK(sys.matrix().entry(0, 1) == -1.0);
  CHECK(sys.matrix().is_tridiagonal());
  // f = -1 induces h = +1
  CHECK(sys.nonlinearity().evaluate({0, 0, 0}, ParameterPoint({1, 1, 1})) ==
        Vector{1.0, 1.0, 1.0});
}

TEST_CASE("discretize of -(z + z^3 + u_k) reproduces the cubic family") {
  const std::size_t n = 3;
  const auto box = unit_box(n, 0.5, 2.0);
  const CertifiedNonlinearity cubic = make_cubic_family(n, box);
  const DifferenceProblem p{
      n,
      [](std::size_t k, double z, const ParameterPoint& u) {
        return -(z + z * z * z + u[k - 1]);
      },
      6.0,
      Regime::Superquadratic,
      cubic.constants,
      cubic.growth,
      box};
  const ProblemInstance sys = discretize(p);
  const ParameterPoint u({0.5, 1.0, 2.0});
  SplitMix64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    Vector x(n);
    for (double& v : x) v = rng.uniform(-3.0, 3.0);
    CHECK(sys.nonlinearity().evaluate(x, u) == cubic.h.evaluate(x, u));
  }
}

TEST_CASE("discretize rejects empty problems") {
  const auto box = unit_box(1, 0.5, 2.0);
  DifferenceProblem p{
      0,
      [](std::size_t, double, const ParameterPoint&) { return 0.0; },
      1.0,
      Regime::Superquadratic,
      MonotonicityConstants::lower(1.0),
      std::nullopt,
      box};
  CHECK_THROWS_AS(discretize(p), DimensionError);
}

TEST_CASE("second difference round-trip: delta^2 x = -(B interior)") {
  SplitMix64 rng(23);
  for (std::size_t n : {1, 3, 10, 50}) {
    const SymmetricMatrix B = build_dirichlet_matrix(n);
    for (int trial = 0; trial < 20; ++trial) {
      Vector interior(n);
      for (double& v : interior) v = rng.uniform(-1.0, 1.0);
      const GridFunction grid = GridFunction::from_interior(interior);
      CHECK(grid.value(0) == 0.0);
      CHECK(grid.value(n + 1) == 0.0);
      const Vector d2 = second_difference(grid);
      const Vector bi = B.matvec(interior);
      for (std::size_t k = 0; k < n; ++k) {
        CHECK(std::abs(d2[k] + bi[k]) <= 1e-14);
      }
    }
  }
}

TEST_CASE("hand-solved linear BVP, n = 3") {
  // Induced h(z) = z - 1 via the linear family at u = -1; lambda = 4 is
  // above ||B(3)|| = 2 + sqrt(2), and (B - 4I) x = -4*ones has the exact
  // solution (2, 0, 2).
  const auto box = unit_box(3, -1.0, -1.0);
  const DifferenceProblem p = linear_bvp(3, 4.0, box);
  const BvpSolution s = solve_bvp(p, ParameterPoint({-1.0, -1.0, -1.0}));

  REQUIRE(s.grid.node_count() == 5);
  CHECK(s.grid.value(0) == 0.0);
  CHECK(s.grid.value(1) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(s.grid.value(2) == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
  CHECK(s.grid.value(3) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(s.grid.value(4) == 0.0);
  CHECK(s.difference_residual <= 1e-10 * (1.0 + norm(s.report.solution)));
}

TEST_CASE("hand-solved linear BVP, n = 1") {
  // Induced h(z) = z + 1, lambda = 3: 3(x+1) = 2x gives x = -3.
  const auto box = unit_box(1, 1.0, 1.0);
  const DifferenceProblem p = linear_bvp(1, 3.0, box);
  const BvpSolution s = solve_bvp(p, ParameterPoint({1.0}));
  REQUIRE(s.grid.node_count() == 3);
  CHECK(s.grid.value(0) == 0.0);
  CHECK(s.grid.value(1) == doctest::Approx(-3.0).epsilon(1e-9));
  CHECK(s.grid.value(2) == 0.0);
}

TEST_CASE("induced h(z) = z + 1 at n = 3 mirrors the sign of the hand solve") {
  // Same matrix and lambda as the (2, 0, 2) case but with u = +1, so the
  // right-hand side flips: (B - 4I) x = 4*ones and x = (-2, 0, -2).
  const auto box = unit_box(3, 1.0, 1.0);
  const DifferenceProblem p = linear_bvp(3, 4.0, box);
  const BvpSolution s = solve_bvp(p, ParameterPoint({1.0, 1.0, 1.0}));
  CHECK(s.grid.value(1) == doctest::Approx(-2.0).epsilon(1e-9));
  CHECK(s.grid.value(2) == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
  CHECK(s.grid.value(3) == doctest::Approx(-2.0).epsilon(1e-9));
}

TEST_CASE("f = 0 yields the zero grid and fails nontriviality") {
  const auto box = unit_box(2, 0.0, 1.0);
  // lambda_1(B(2)) = 1, so lambda = 0.5 sits inside (0, 1).
  const DifferenceProblem p{
      2,
      [](std::size_t, double, const ParameterPoint&) { return 0.0; },
      0.5,
      Regime::Subquadratic,
      MonotonicityConstants::upper(1.0),
      std::nullopt,
      box};
  const BvpSolution s = solve_bvp(p, ParameterPoint({0.5, 0.5}));
  for (std::size_t k = 0; k < s.grid.node_count(); ++k) CHECK(s.grid.value(k) == 0.0);

  const ProblemInstance sys = discretize(p);
  CHECK_FALSE(check_nontriviality(sys.nonlinearity(), box).pass);
}

TEST_CASE("emden-fowler preset") {
  const std::size_t n = 3;
  const auto box = unit_box(n, 0.5, 2.0);
  const double lambda = 4.0;
  const DifferenceProblem p = emden_fowler_preset(n, 3.0, box, lambda);
  const ProblemInstance sys = discretize(p);

  // induced nonlinearity is exactly the registered family
  const CertifiedNonlinearity ef = make_emden_fowler_family(n, 3.0, box);
  const ParameterPoint u({1.0, 0.5, 2.0});
  SplitMix64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    Vector x(n);
    for (double& v : x) v = rng.uniform(-2.0, 2.0);
    CHECK(sys.nonlinearity().evaluate(x, u) == ef.h.evaluate(x, u));
  }

  // h(0,u) = 1 on every component
  CHECK(sys.nonlinearity().evaluate({0, 0, 0}, u) == Vector{1.0, 1.0, 1.0});
  CHECK(check_nontriviality(sys.nonlinearity(), box).pass);

  // admissible interval (||B(3)||, inf) = (2 + sqrt(2), inf)
  const LambdaInterval interval = admissible_lambda_interval(sys);
  CHECK(interval.lower() == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-10));
  CHECK(std::isinf(interval.upper()));

  CHECK_THROWS_AS(emden_fowler_preset(n, 1.0, box, lambda), ValidationError);

  const BvpSolution s = solve_bvp(p, u);
  CHECK(s.report.residual <= 1e-10 * (1.0 + norm(s.report.solution)));
  CHECK(s.difference_residual <= 1e-10 * (1.0 + norm(s.report.solution)));
  CHECK(norm(s.report.solution) <= *apriori_solution_bound(sys) + 1e-9);
}

TEST_CASE("grid CSV serialization") {
  const GridFunction g = GridFunction::from_interior({2.0, 0.0, 2.0});
  CHECK(to_csv(g) == "k,x\n0,0\n1,2\n2,0\n3,2\n4,0\n");
}
