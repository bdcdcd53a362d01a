#pragma once

#include <optional>

#include "monosys/nonlinearity.hpp"
#include "monosys/parameter.hpp"
#include "monosys/symmetric_matrix.hpp"

namespace monosys {

/// Which side of quadratic growth the nonlinearity sits on. Superquadratic
/// problems are solved through K(x) = lambda h(x,u) - Ax (strongly monotone
/// for lambda > ||A||/a); subquadratic ones through K(x) = Ax - lambda
/// h(x,u) (strongly monotone for lambda < lambda_1/b, A positive definite).
enum class Regime { Superquadratic, Subquadratic };

const char* to_string(Regime regime);

/// The full parametrized system A x = lambda h(x,u), validated at
/// construction:
///   - dim(A) = dim(h), lambda > 0;
///   - superquadratic requires the constant a, subquadratic requires b and
///     a positive definite A;
///   - a growth certificate, when present, must match the regime.
/// Spectral quantities of A are computed once here and cached; instances
/// are immutable afterwards and safe to share across threads.
class ProblemInstance {
 public:
  ProblemInstance(SymmetricMatrix A, double lambda, ComponentwiseNonlinearity h,
                  Regime regime, MonotonicityConstants constants,
                  std::optional<GrowthCertificate> growth, ParameterSpace space);

  std::size_t dim() const { return A_.dim(); }
  const SymmetricMatrix& matrix() const { return A_; }
  double lambda() const { return lambda_; }
  const ComponentwiseNonlinearity& nonlinearity() const { return h_; }
  Regime regime() const { return regime_; }
  const MonotonicityConstants& constants() const { return constants_; }
  const std::optional<GrowthCertificate>& growth() const { return growth_; }
  const ParameterSpace& space() const { return space_; }

  double matrix_norm() const { return matrix_norm_; }       // ||A||
  double matrix_lambda1() const { return matrix_lambda1_; }  // smallest eigenvalue

  /// Strong monotonicity constant of the regime operator:
  /// lambda a - ||A|| (superquadratic) or lambda_1 - lambda b
  /// (subquadratic). May be <= 0 when lambda is inadmissible.
  double monotonicity_constant() const;

 private:
  SymmetricMatrix A_;
  double lambda_;
  ComponentwiseNonlinearity h_;
  Regime regime_;
  MonotonicityConstants constants_;
  std::optional<GrowthCertificate> growth_;
  ParameterSpace space_;
  double matrix_norm_;
  double matrix_lambda1_;
};

}  // namespace monosys
