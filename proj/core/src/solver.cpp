#include "monosys/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "monosys/errors.hpp"

namespace monosys {

MonotoneOperator::MonotoneOperator(std::size_t dim, std::function<Vector(const Vector&)> apply,
                                   double monotonicity, double lipschitz, Regime regime)
    : dim(dim),
      apply(std::move(apply)),
      monotonicity(monotonicity),
      lipschitz(lipschitz),
      regime(regime) {
  if (dim == 0) throw DimensionError("MonotoneOperator: dimension must be >= 1");
  if (!this->apply) throw ValidationError("MonotoneOperator: missing evaluator");
  if (!(monotonicity > 0.0)) {
    throw ValidationError("MonotoneOperator: monotonicity constant must be > 0");
  }
  if (!(lipschitz >= monotonicity)) {
    throw ValidationError("MonotoneOperator: Lipschitz bound must be >= monotonicity");
  }
}

bool strong_monotonicity_spot_check(const MonotoneOperator& op, double box_radius,
                                    std::uint64_t seed, std::size_t pairs) {
  SplitMix64 rng(derive_seed(seed, 0x5C0D));
  for (std::size_t i = 0; i < pairs; ++i) {
    Vector x(op.dim), y(op.dim);
    for (std::size_t j = 0; j < op.dim; ++j) {
      x[j] = rng.uniform(-box_radius, box_radius);
      y[j] = rng.uniform(-box_radius, box_radius);
    }
    const Vector kx = op.apply(x);
    const Vector ky = op.apply(y);
    double pairing = 0.0, dist2 = 0.0;
    for (std::size_t j = 0; j < op.dim; ++j) {
      const double d = x[j] - y[j];
      pairing += (kx[j] - ky[j]) * d;
      dist2 += d * d;
    }
    if (pairing < op.monotonicity * dist2 - 1e-9) return false;
  }
  return true;
}

double estimate_lipschitz(const ProblemInstance& problem, const ParameterPoint& u,
                          double radius, std::uint64_t seed, std::size_t samples) {
  if (!(radius > 0.0)) throw ValidationError("estimate_lipschitz: radius must be > 0");

  const ComponentwiseNonlinearity& h = problem.nonlinearity();
  const std::size_t n = h.dim();
  double slope = 0.0;

  const auto record = [&](std::size_t k, double z1, double z2, const ParameterPoint& v) {
    if (z1 == z2) return;
    const double s =
        std::abs((h.component(k, z1, v) - h.component(k, z2, v)) / (z1 - z2));
    slope = std::max(slope, s);
  };

  // Deterministic pass: clustered scalar grid against the given parameter
  // and the box lattice, every component.
  std::vector<double> grid;
  const double fractions[] = {0.0, 1e-3, 1e-2, 0.1, 0.25, 0.5, 0.75, 1.0};
  for (double f : fractions) {
    grid.push_back(f * radius);
    if (f != 0.0) grid.push_back(-f * radius);
  }
  std::sort(grid.begin(), grid.end());

  std::vector<ParameterPoint> params = problem.space().lattice(16);
  params.push_back(u);
  std::size_t used = 0;
  for (const ParameterPoint& v : params) {
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      for (std::size_t k = 0; k < n && used < samples; ++k, ++used) {
        record(k, grid[i], grid[i + 1], v);
      }
    }
  }

  SplitMix64 rng(derive_seed(seed, 0x11F5));
  while (used < samples) {
    const std::size_t k = static_cast<std::size_t>(rng.below(n));
    const double z1 = rng.uniform(-radius, radius);
    const double z2 = rng.uniform(-radius, radius);
    const ParameterPoint v = sample_box(problem.space(), rng);
    record(k, z1, z2, v);
    ++used;
  }

  const double L = problem.lambda() * 1.25 * slope + problem.matrix_norm();
  const double m = problem.monotonicity_constant();
  return std::max(L, m);
}

namespace {

Vector regime_residual(const ProblemInstance& problem, const ParameterPoint& u,
                       const Vector& x) {
  Vector ax = problem.matrix().matvec(x);
  Vector hx = problem.nonlinearity().evaluate(x, u);
  Vector r(x.size());
  const double lambda = problem.lambda();
  if (problem.regime() == Regime::Superquadratic) {
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = lambda * hx[i] - ax[i];
  } else {
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = ax[i] - lambda * hx[i];
  }
  return r;
}

}  // namespace

MonotoneOperator assemble_operator(const ProblemInstance& problem, const ParameterPoint& u,
                                   std::optional<double> lipschitz_override) {
  const LambdaInterval interval = admissible_lambda_interval(problem);
  if (!interval.contains(problem.lambda())) {
    std::ostringstream msg;
    msg << "lambda " << problem.lambda() << " is not strongly monotone for the "
        << to_string(problem.regime()) << " regime: admissible interval is ("
        << interval.lower() << ", " << interval.upper() << "), endpoints excluded";
    throw InadmissibleLambdaError(msg.str(), problem.lambda(), interval.lower(),
                                  interval.upper());
  }
  problem.space().require_contains(u);

  const double m = problem.monotonicity_constant();
  double L;
  if (lipschitz_override) {
    L = *lipschitz_override;
  } else {
    // Iterates from x0 = 0 stay inside |x| <= 2 |x*|, so a ball of twice the
    // solution bound covers the whole trajectory. Without a certificate,
    // fall back on the strong-monotonicity bound |x*| <= |K(0)|/m.
    double ball;
    if (const auto bound = apriori_solution_bound(problem)) {
      ball = 2.0 * *bound;
    } else {
      const Vector k0 = regime_residual(problem, u, Vector(problem.dim(), 0.0));
      ball = std::clamp(2.0 * norm(k0) / m, 1.0, 1e6);
    }
    L = estimate_lipschitz(problem, u, ball);
  }

  return MonotoneOperator(
      problem.dim(),
      [problem, u](const Vector& x) { return regime_residual(problem, u, x); }, m, L,
      problem.regime());
}

SolveReport solve(const MonotoneOperator& op, const SolveConfig& config) {
  if (!(config.tolerance > 0.0)) throw ValidationError("SolveConfig: tolerance must be > 0");
  if (config.max_iterations < 1) {
    throw ValidationError("SolveConfig: max iterations must be >= 1");
  }

  Vector x = config.initial.value_or(Vector(op.dim, 0.0));
  if (x.size() != op.dim) throw DimensionError("solve: initial point dimension mismatch");
  if (!all_finite(x)) throw ValidationError("solve: initial point must be finite");

  const double m = op.monotonicity;
  const double L = op.lipschitz;
  const double ratio = m / L;
  const double q = std::sqrt(std::max(0.0, 1.0 - ratio * ratio));

  // Orientation probe: strong monotonicity forces the pairing at any two
  // points to be positive for K and negative for -K, so one probe pair
  // resolves the sign convention.
  double sign = 1.0;
  {
    const double delta = 1e-3 * (1.0 + norm(x));
    Vector probe = x;
    for (double& v : probe) v += delta / std::sqrt(static_cast<double>(op.dim));
    const Vector fx = op.apply(x);
    const Vector fp = op.apply(probe);
    double pairing = 0.0;
    for (std::size_t i = 0; i < op.dim; ++i) pairing += (fp[i] - fx[i]) * (probe[i] - x[i]);
    sign = pairing < 0.0 ? -1.0 : 1.0;
  }

  const auto residual = [&](const Vector& at) {
    Vector r = op.apply(at);
    if (sign < 0.0) {
      for (double& v : r) v = -v;
    }
    return r;
  };

  const double tau_floor = m / (L * L);
  const double tau_cap = 0.5 / m;  // keeps the acceptance target (1 - tau m) >= 1/2
  double tau = config.step_override.value_or(tau_floor);
  double last_accepted_tau = tau;

  Vector r = residual(x);
  if (!all_finite(r)) throw DivergenceError("solve: non-finite residual at start", 0);
  double rn = norm(r);

  std::vector<double> history{rn};
  std::size_t accepted = 0;

  for (std::size_t trial = 0; trial < config.max_iterations; ++trial) {
    if (rn <= config.tolerance * (1.0 + norm(x))) break;

    Vector x_next(op.dim);
    for (std::size_t i = 0; i < op.dim; ++i) x_next[i] = x[i] - tau * r[i];
    Vector r_next = residual(x_next);

    const bool finite = all_finite(x_next) && all_finite(r_next);
    if (!finite) {
      if (config.step_override || tau <= tau_floor * (1.0 + 1e-12)) {
        throw DivergenceError("solve: NaN/Inf iterate", trial + 1);
      }
      tau = std::max(0.5 * tau, tau_floor);
      continue;
    }

    const double rn_next = norm(r_next);
    // Strong monotonicity guarantees |K|^2 shrinks at least by (1 - tau m)
    // whenever tau <= m / L_local^2, so rejection means tau outran the
    // local Lipschitz constant. A user-overridden step is taken as given.
    bool accept = true;
    if (!config.step_override) {
      const double target2 = (1.0 - tau * m) * rn * rn * (1.0 + 1e-12);
      accept = rn_next * rn_next <= target2;
      if (!accept && tau <= tau_floor * (1.0 + 1e-12)) {
        // At the certified floor the contraction holds in exact arithmetic;
        // a miss here is rounding noise, so take any strict decrease.
        accept = rn_next < rn;
      }
    }

    if (accept) {
      x.swap(x_next);
      r.swap(r_next);
      rn = rn_next;
      ++accepted;
      last_accepted_tau = tau;
      history.push_back(rn);
      if (!config.step_override) tau = std::min(tau * 1.5, tau_cap);
    } else if (!config.step_override) {
      tau = std::max(0.5 * tau, tau_floor);
    }
  }

  if (rn > config.tolerance * (1.0 + norm(x))) {
    std::ostringstream msg;
    msg << "solve: residual " << rn << " above tolerance after " << config.max_iterations
        << " iterations";
    throw ConvergenceError(msg.str(), rn, accepted);
  }

  if (history.size() > config.history_cap && config.history_cap >= 2) {
    std::vector<double> thinned;
    const std::size_t stride =
        (history.size() + config.history_cap - 1) / config.history_cap;
    for (std::size_t i = 0; i < history.size(); i += stride) thinned.push_back(history[i]);
    if (thinned.back() != history.back()) thinned.push_back(history.back());
    history.swap(thinned);
  }

  SolveReport report;
  report.solution = std::move(x);
  report.residual = rn;
  report.iterations = accepted;
  report.step = last_accepted_tau;
  report.contraction = q;
  report.slow_contraction = q > 0.999;
  report.residual_history = std::move(history);
  return report;
}

SolveReport solve_problem(const ProblemInstance& problem, const ParameterPoint& u,
                          const SolveConfig& config) {
  return solve(assemble_operator(problem, u), config);
}

double residual_norm(const ProblemInstance& problem, const ParameterPoint& u,
                     const Vector& x) {
  if (x.size() != problem.dim()) throw DimensionError("residual_norm: dimension mismatch");
  const Vector ax = problem.matrix().matvec(x);
  const Vector hx = problem.nonlinearity().evaluate(x, u);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = ax[i] - problem.lambda() * hx[i];
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace monosys
