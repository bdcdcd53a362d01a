#include "monosys/assumptions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "monosys/errors.hpp"
#include "monosys/spectrum.hpp"

namespace monosys {

const char* to_string(Assumption a) {
  switch (a) {
    case Assumption::A1: return "A1";
    case Assumption::A2: return "A2";
    case Assumption::A3: return "A3";
    default: return "A4";
  }
}

namespace {

constexpr double kTieTolerance = 1e-12;

// Scalar grid over [-R, R] clustered toward zero, where slope extrema of
// the built-in families live.
std::vector<double> scalar_grid(double radius) {
  const double fractions[] = {0.0, 1e-3, 1e-2, 0.1, 0.2, 0.35, 0.5, 0.65, 0.8, 1.0};
  std::vector<double> grid;
  for (double f : fractions) {
    grid.push_back(f * radius);
    if (f != 0.0) grid.push_back(-f * radius);
  }
  std::sort(grid.begin(), grid.end());
  return grid;
}

// Visits (k, z1, z2, v) tuples: a deterministic grid pass (all ordered
// distinct grid pairs x box lattice, component cycling) followed by seeded
// random samples, until the budget runs out or the visitor stops it.
// Returns samples consumed. The visitor must skip nothing itself; pairs
// with z1 == z2 are not emitted.
template <typename Visitor>
std::size_t for_each_pair_sample(const ComponentwiseNonlinearity& h,
                                 const ParameterSpace& space, double radius,
                                 const FalsifierOptions& opts, Visitor&& visit) {
  std::size_t used = 0;
  const std::size_t n = h.dim();

  const std::vector<double> grid = scalar_grid(radius);
  const std::vector<ParameterPoint> lattice = space.lattice(64);
  std::size_t component = 0;
  for (const ParameterPoint& v : lattice) {
    for (double z1 : grid) {
      for (double z2 : grid) {
        if (z1 == z2) continue;
        if (used >= opts.samples) return used;
        ++used;
        if (!visit(component % n, z1, z2, v)) return used;
        ++component;
      }
    }
  }

  SplitMix64 rng(derive_seed(opts.seed, 0xA2A4));
  while (used < opts.samples) {
    const std::size_t k = static_cast<std::size_t>(rng.below(n));
    const double z1 = rng.uniform(-radius, radius);
    const double z2 = rng.uniform(-radius, radius);
    if (z1 == z2) continue;
    const ParameterPoint v = sample_box(space, rng);
    ++used;
    if (!visit(k, z1, z2, v)) return used;
  }
  return used;
}

// Radial samples (z = r * direction with theta <= r <= R, v in box):
// deterministic phase uses +-e_i and the diagonal direction against a
// radius grid and the box lattice, then seeded random directions/radii.
template <typename Visitor>
std::size_t for_each_radial_sample(const ComponentwiseNonlinearity& h,
                                   const ParameterSpace& space, double theta, double radius,
                                   const FalsifierOptions& opts, Visitor&& visit) {
  std::size_t used = 0;
  const std::size_t n = h.dim();

  std::vector<Vector> directions;
  for (std::size_t i = 0; i < std::min<std::size_t>(n, 8); ++i) {
    Vector e(n, 0.0);
    e[i] = 1.0;
    directions.push_back(e);
    e[i] = -1.0;
    directions.push_back(e);
  }
  directions.push_back(Vector(n, 1.0 / std::sqrt(static_cast<double>(n))));
  directions.push_back(Vector(n, -1.0 / std::sqrt(static_cast<double>(n))));

  std::vector<double> radii;
  for (int j = 0; j <= 15; ++j) {
    radii.push_back(theta + (radius - theta) * static_cast<double>(j) / 15.0);
  }

  const std::vector<ParameterPoint> lattice = space.lattice(27);
  for (const ParameterPoint& v : lattice) {
    for (const Vector& d : directions) {
      for (double r : radii) {
        if (used >= opts.samples) return used;
        Vector z(n);
        for (std::size_t i = 0; i < n; ++i) z[i] = r * d[i];
        ++used;
        if (!visit(z, v)) return used;
      }
    }
  }

  SplitMix64 rng(derive_seed(opts.seed, 0xA1A3));
  while (used < opts.samples) {
    const Vector d = rng.unit_direction(n);
    const double r = rng.uniform(theta, radius);
    Vector z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = r * d[i];
    const ParameterPoint v = sample_box(space, rng);
    ++used;
    if (!visit(z, v)) return used;
  }
  return used;
}

double pair_lhs(const ComponentwiseNonlinearity& h, std::size_t k, double z1, double z2,
                const ParameterPoint& v) {
  return (h.component(k, z1, v) - h.component(k, z2, v)) * (z1 - z2);
}

double growth_lhs(const ComponentwiseNonlinearity& h, const Vector& z,
                  const ParameterPoint& v) {
  double s = 0.0;
  for (std::size_t k = 0; k < h.dim(); ++k) s += h.component(k, z[k], v) * z[k];
  return s;
}

FalsificationReport falsify_pair_inequality(Assumption which,
                                            const ComponentwiseNonlinearity& h,
                                            const ParameterSpace& space, double constant,
                                            double radius, const FalsifierOptions& opts) {
  if (!(constant > 0.0)) {
    throw ValidationError(std::string(to_string(which)) + ": claimed constant must be > 0");
  }
  if (!(radius > 0.0)) {
    throw ValidationError(std::string(to_string(which)) + ": search radius must be > 0");
  }

  FalsificationReport report;
  report.assumption = which;
  report.seed = opts.seed;
  const bool lower_bound = which == Assumption::A2;

  report.samples_used = for_each_pair_sample(
      h, space, radius, opts,
      [&](std::size_t k, double z1, double z2, const ParameterPoint& v) {
        const double dz2 = (z1 - z2) * (z1 - z2);
        const double lhs = pair_lhs(h, k, z1, z2, v);
        const double rhs = constant * dz2;
        const double slack = kTieTolerance * (1.0 + dz2);
        const bool violated = lower_bound ? (lhs < rhs - slack) : (lhs > rhs + slack);
        if (violated) {
          report.counterexample = PairWitness{k, z1, z2, v, lhs, rhs};
          return false;
        }
        return true;
      });
  return report;
}

FalsificationReport falsify_growth_inequality(Assumption which,
                                              const ComponentwiseNonlinearity& h,
                                              const ParameterSpace& space,
                                              const GrowthCertificate& certificate,
                                              double radius, const FalsifierOptions& opts) {
  const bool lower_bound = which == Assumption::A1;
  if (lower_bound && certificate.kind != GrowthCertificate::Kind::Superquadratic) {
    throw ValidationError("A1: certificate must be superquadratic");
  }
  if (!lower_bound && certificate.kind != GrowthCertificate::Kind::Subquadratic) {
    throw ValidationError("A3: certificate must be subquadratic");
  }
  if (radius < certificate.radius) {
    throw ValidationError(std::string(to_string(which)) +
                          ": search radius must be >= the certificate radius");
  }

  FalsificationReport report;
  report.assumption = which;
  report.seed = opts.seed;

  report.samples_used = for_each_radial_sample(
      h, space, certificate.radius, radius, opts,
      [&](const Vector& z, const ParameterPoint& v) {
        const double lhs = growth_lhs(h, z, v);
        const double rhs =
            certificate.coefficient * std::pow(norm(z), certificate.exponent);
        const double slack = kTieTolerance * (1.0 + std::abs(rhs));
        const bool violated = lower_bound ? (lhs < rhs - slack) : (lhs > rhs + slack);
        if (violated) {
          report.counterexample = GrowthWitness{z, v, lhs, rhs};
          return false;
        }
        return true;
      });
  return report;
}

}  // namespace

FalsificationReport falsify_A2(const ComponentwiseNonlinearity& h, const ParameterSpace& space,
                               double a, double radius, FalsifierOptions opts) {
  return falsify_pair_inequality(Assumption::A2, h, space, a, radius, opts);
}

FalsificationReport falsify_A4(const ComponentwiseNonlinearity& h, const ParameterSpace& space,
                               double b, double radius, FalsifierOptions opts) {
  return falsify_pair_inequality(Assumption::A4, h, space, b, radius, opts);
}

FalsificationReport falsify_A1(const ComponentwiseNonlinearity& h, const ParameterSpace& space,
                               const GrowthCertificate& certificate, double radius,
                               FalsifierOptions opts) {
  return falsify_growth_inequality(Assumption::A1, h, space, certificate, radius, opts);
}

FalsificationReport falsify_A3(const ComponentwiseNonlinearity& h, const ParameterSpace& space,
                               const GrowthCertificate& certificate, double radius,
                               FalsifierOptions opts) {
  return falsify_growth_inequality(Assumption::A3, h, space, certificate, radius, opts);
}

SlopeEstimate estimate_monotonicity_constants(const ComponentwiseNonlinearity& h,
                                              const ParameterSpace& space, double radius,
                                              FalsifierOptions opts) {
  if (!(radius > 0.0)) {
    throw ValidationError("estimate_monotonicity_constants: radius must be > 0");
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  if (h.has_derivative()) {
    // Sample slopes directly on the scalar grid plus random points.
    const std::vector<double> grid = scalar_grid(radius);
    const std::vector<ParameterPoint> lattice = space.lattice(64);
    std::size_t used = 0;
    for (const ParameterPoint& v : lattice) {
      for (double z : grid) {
        for (std::size_t k = 0; k < h.dim() && used < opts.samples; ++k, ++used) {
          const double s = h.derivative(k, z, v);
          lo = std::min(lo, s);
          hi = std::max(hi, s);
        }
      }
    }
    SplitMix64 rng(derive_seed(opts.seed, 0xE577));
    while (used < opts.samples) {
      const std::size_t k = static_cast<std::size_t>(rng.below(h.dim()));
      const double z = rng.uniform(-radius, radius);
      const ParameterPoint v = sample_box(space, rng);
      const double s = h.derivative(k, z, v);
      lo = std::min(lo, s);
      hi = std::max(hi, s);
      ++used;
    }
  } else {
    for_each_pair_sample(h, space, radius, opts,
                         [&](std::size_t k, double z1, double z2, const ParameterPoint& v) {
                           const double q =
                               pair_lhs(h, k, z1, z2, v) / ((z1 - z2) * (z1 - z2));
                           lo = std::min(lo, q);
                           hi = std::max(hi, q);
                           return true;
                         });
  }
  return {lo, hi};
}

LambdaInterval::LambdaInterval(double lower, double upper) : lower_(lower), upper_(upper) {
  if (!(lower_ < upper_)) {
    std::ostringstream msg;
    msg << "LambdaInterval: (" << lower_ << ", " << upper_ << ") is empty";
    throw ValidationError(msg.str());
  }
}

LambdaInterval admissible_lambda_interval(Regime regime, const SymmetricMatrix& A,
                                          const MonotonicityConstants& constants) {
  if (regime == Regime::Superquadratic) {
    const double a = constants.require_a();
    return LambdaInterval(spectral_norm(A) / a, std::numeric_limits<double>::infinity());
  }
  const double b = constants.require_b();
  const double lambda1 = smallest_eigenvalue(A);
  if (!(lambda1 > 0.0)) {
    throw ValidationError(
        "admissible_lambda_interval: subquadratic regime requires positive definite A");
  }
  return LambdaInterval(0.0, lambda1 / b);
}

LambdaInterval admissible_lambda_interval(const ProblemInstance& problem) {
  if (problem.regime() == Regime::Superquadratic) {
    return LambdaInterval(problem.matrix_norm() / problem.constants().require_a(),
                          std::numeric_limits<double>::infinity());
  }
  if (!(problem.matrix_lambda1() > 0.0)) {
    throw ValidationError(
        "admissible_lambda_interval: subquadratic regime requires positive definite A");
  }
  return LambdaInterval(0.0, problem.matrix_lambda1() / problem.constants().require_b());
}

double apriori_solution_bound(Regime regime, const SymmetricMatrix& A, double lambda,
                              const GrowthCertificate& certificate,
                              const LambdaInterval& admissible) {
  if (!admissible.contains(lambda)) {
    std::ostringstream msg;
    msg << "apriori_solution_bound: lambda " << lambda << " outside admissible interval ("
        << admissible.lower() << ", " << admissible.upper() << ")";
    throw InadmissibleLambdaError(msg.str(), lambda, admissible.lower(), admissible.upper());
  }
  if (regime == Regime::Superquadratic) {
    if (certificate.kind != GrowthCertificate::Kind::Superquadratic) {
      throw ValidationError("apriori_solution_bound: certificate kind mismatch");
    }
    const double grown = std::pow(spectral_norm(A) / (lambda * certificate.coefficient),
                                  1.0 / (certificate.exponent - 2.0));
    return std::max(certificate.radius, grown);
  }
  if (certificate.kind != GrowthCertificate::Kind::Subquadratic) {
    throw ValidationError("apriori_solution_bound: certificate kind mismatch");
  }
  const double lambda1 = smallest_eigenvalue(A);
  const double grown = std::pow(lambda * certificate.coefficient / lambda1,
                                1.0 / (2.0 - certificate.exponent));
  return std::max(certificate.radius, grown);
}

std::optional<double> apriori_solution_bound(const ProblemInstance& problem) {
  if (!problem.growth()) return std::nullopt;
  return apriori_solution_bound(problem.regime(), problem.matrix(), problem.lambda(),
                                *problem.growth(), admissible_lambda_interval(problem));
}

}  // namespace monosys
