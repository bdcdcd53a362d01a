#pragma once

#include <functional>
#include <optional>
#include <string>

#include "monosys/problem.hpp"
#include "monosys/solver.hpp"

namespace monosys {

/// The discrete Dirichlet problem on interior nodes k = 1..n:
///   x(k+1) - 2 x(k) + x(k-1) = lambda f(k, x(k), u),  x(0) = x(n+1) = 0.
/// The regime, constants and optional growth certificate describe the
/// induced nonlinearity h_k(z,u) = -f(k,z,u); they are supplied here, not
/// inferred from f.
struct DifferenceProblem {
  std::size_t n = 0;
  /// k is 1-based as in the difference equation.
  std::function<double(std::size_t, double, const ParameterPoint&)> f;
  double lambda = 0.0;
  Regime regime = Regime::Superquadratic;
  MonotonicityConstants constants;
  std::optional<GrowthCertificate> growth;
  ParameterSpace space;
};

/// Node values x(0..n+1) with the Dirichlet endpoints pinned to exactly 0.
class GridFunction {
 public:
  static GridFunction from_interior(const Vector& interior);

  std::size_t interior_size() const { return values_.size() - 2; }
  std::size_t node_count() const { return values_.size(); }
  double value(std::size_t k) const { return values_[k]; }
  const Vector& values() const { return values_; }
  Vector interior() const;

 private:
  explicit GridFunction(Vector values) : values_(std::move(values)) {}
  Vector values_;
};

/// Second differences x(k+1) - 2 x(k) + x(k-1) at the interior nodes.
Vector second_difference(const GridFunction& grid);

/// Two-column CSV with header "k,x" and one row per node 0..n+1.
std::string to_csv(const GridFunction& grid);

/// Rewrites the difference problem as B x = lambda h(x,u) with B the
/// Dirichlet matrix and h_k(z,u) = -f(k,z,u): the second-difference
/// operator under zero boundary values is exactly -B, so the sign flip
/// makes the two forms literally equivalent.
ProblemInstance discretize(const DifferenceProblem& p);

struct BvpSolution {
  GridFunction grid;
  SolveReport report;
  /// max_k |(x(k+1) - 2 x(k) + x(k-1)) - lambda f(k, x(k), u)|, recomputed
  /// from the grid rather than from the system form.
  double difference_residual;
};

BvpSolution solve_bvp(const DifferenceProblem& p, const ParameterPoint& u,
                      const SolveConfig& config = {});

/// f(k,z,u) = -(z + u_k |z|^(p-1) z + 1), lambda as given; the induced
/// nonlinearity is the Emden-Fowler family with its constants.
DifferenceProblem emden_fowler_preset(std::size_t n, double p, const ParameterSpace& box,
                                      double lambda);

}  // namespace monosys
